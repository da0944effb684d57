#ifndef POLYCODE_FIELD_HPP
#define POLYCODE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace polycode {

class Fq;

/// An element of GF(p^s), represented by its packed coefficient vector over
/// GF(p): encoding = sum_i c_i * p^i where c_i is the coefficient of x^i in
/// the polynomial-basis representation.  Plain immutable value type.
class Fe {
  public:
    Fe() = default;
    Fe(const Fq& field, uint32_t encoding) : f_(&field), v_(encoding) {}

    uint32_t enc() const { return v_; }
    const Fq& field() const;
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator/(const Fe& o) const;
    Fe operator-() const;
    Fe inv() const;
    Fe pow(long long e) const;

    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }

    /// Prints 0, 1, or z^k with z the field's designated primitive element.
    std::string str() const;

  private:
    const Fq* f_ = nullptr;
    uint32_t v_ = 0;
};

namespace detail {

// Polynomial helpers over the prime field GF(p), used while building a field
// context (before any table exists).  Coefficients constant-first.
using PPoly = std::vector<uint32_t>;

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

inline PPoly pmod(PPoly a, const PPoly& m, uint32_t p) {
    ptrim(a);
    uint32_t lead_inv = 1;
    // m is monic in every use below, so no inversion of the lead is needed.
    (void)lead_inv;
    while (a.size() >= m.size() && !a.empty()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = (a[shift + i] + (uint64_t)(p - 1) * c % p * m[i]) % p;
        ptrim(a);
    }
    return a;
}

inline PPoly ppowmod_xq(uint64_t e, const PPoly& m, uint32_t p) {
    // x^e mod m by square-and-multiply.
    PPoly result{1};
    PPoly base{0, 1};
    base = pmod(base, m, p);
    while (e > 0) {
        if (e & 1) result = pmod(pmul(result, base, p), m, p);
        e >>= 1;
        if (e) base = pmod(pmul(base, base, p), m, p);
    }
    return result;
}

inline PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic so pmod applies
        uint32_t lc = b.back();
        if (lc != 1) {
            // lc^{-1} mod p via Fermat
            uint32_t inv = 1, base = lc, e = p - 2;
            while (e) {
                if (e & 1) inv = (uint64_t)inv * base % p;
                base = (uint64_t)base * base % p;
                e >>= 1;
            }
            for (auto& c : b) c = (uint64_t)c * inv % p;
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool prime_field_irreducible(const PPoly& m, uint32_t p) {
    // m monic of degree s >= 1 over GF(p).
    size_t s = m.size() - 1;
    if (s == 1) return true;
    if (m[0] == 0) return false; // divisible by x
    // root scan covers s <= 3 completely
    for (uint32_t r = 0; r < p; ++r) {
        uint64_t acc = 0;
        for (size_t i = m.size(); i-- > 0;) acc = (acc * r + m[i]) % p;
        if (acc == 0) return false;
    }
    if (s <= 3) return true;
    if (s == 4) {
        // root-free quartic: reducible only through an irreducible quadratic
        for (uint32_t c1 = 0; c1 < p; ++c1)
            for (uint32_t c0 = 0; c0 < p; ++c0) {
                PPoly q{c0, c1, 1};
                if (pmod(m, q, p).empty()) return false;
            }
        return true;
    }
    // Rabin test: x^{p^s} == x (mod m) and gcd(x^{p^{s/r}} - x, m) = 1
    // for every prime divisor r of s.
    auto xq_pow = [&](uint64_t levels) {
        PPoly h{0, 1};
        for (uint64_t i = 0; i < levels; ++i) {
            // h = h^p mod m, computed coefficient-wise via x^{p*deg} terms
            PPoly acc{};
            PPoly xp = ppowmod_xq(p, m, p);
            PPoly cur{1};
            acc.assign(1, 0);
            for (size_t d = 0; d < h.size(); ++d) {
                if (h[d] != 0) {
                    PPoly term = cur;
                    for (auto& c : term) c = (uint64_t)c * h[d] % p;
                    if (acc.size() < term.size()) acc.resize(term.size(), 0);
                    for (size_t j = 0; j < term.size(); ++j) acc[j] = (acc[j] + term[j]) % p;
                }
                if (d + 1 < h.size()) cur = pmod(pmul(cur, xp, p), m, p);
            }
            ptrim(acc);
            h = std::move(acc);
        }
        return h;
    };
    uint64_t n = s;
    std::vector<uint64_t> primes;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) primes.push_back(n);
    PPoly full = xq_pow(s);
    PPoly x{0, 1};
    if (full != pmod(x, m, p)) return false;
    for (uint64_t r : primes) {
        PPoly h = xq_pow(s / r);
        // gcd(h - x, m)
        PPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(diff, m, p);
        if (g.size() > 1) return false;
    }
    return true;
}

struct ConwayEntry {
    uint32_t p, s;
    std::vector<uint32_t> coeffs; // constant-first, monic, length s+1
};

// Default moduli for the bundled orders, so that identical inputs always
// yield identical contexts across runs.
inline const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 1, {1, 1}},
        {3, 1, {1, 1}},
        {2, 2, {1, 1, 1}},
        {5, 1, {3, 1}},
        {7, 1, {4, 1}},
        {2, 3, {1, 1, 0, 1}},
        {3, 2, {2, 2, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {5, 2, {2, 4, 1}},
        {3, 3, {1, 2, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
    };
    return table;
}

} // namespace detail

/// Shared context for GF(p^s): verified-irreducible modulus, designated
/// primitive element, and full discrete-log tables over the multiplicative
/// group.  Immutable after construction and safe to share across threads.
class Fq {
  public:
    static constexpr uint32_t kMaxOrder = 1u << 20;

    Fq(uint32_t p, uint32_t s) : Fq(p, s, default_modulus(p, s)) {}

    Fq(uint32_t p, uint32_t s, std::vector<uint32_t> modulus) : p_(p), s_(s) {
        if (p < 2 || !is_prime(p)) fail(errc::non_prime_p, "p = " + std::to_string(p) + " is not prime");
        if (s < 1) fail(errc::field_too_large, "extension degree must be >= 1");
        uint64_t q = 1;
        for (uint32_t i = 0; i < s; ++i) {
            q *= p;
            if (q > kMaxOrder) fail(errc::field_too_large, "p^s exceeds 2^20");
        }
        q_ = (uint32_t)q;

        if (modulus.size() == s) modulus.push_back(1); // monic lead implied
        if (modulus.size() != s + 1 || modulus.back() != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree s");
        for (uint32_t c : modulus)
            if (c >= p) fail(errc::reducible_modulus, "modulus coefficient out of range");
        if (!detail::prime_field_irreducible(modulus, p))
            fail(errc::reducible_modulus, "modulus is reducible over GF(p)");
        mod_ = std::move(modulus);

        pw_.resize(s + 1);
        pw_[0] = 1;
        for (uint32_t i = 1; i <= s; ++i) pw_[i] = pw_[i - 1] * p;

        build_tables();
    }

    Fq(const Fq&) = delete;
    Fq& operator=(const Fq&) = delete;

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    bool same_field(const Fq& o) const {
        return this == &o || (p_ == o.p_ && s_ == o.s_ && mod_ == o.mod_);
    }

    // ---- element constructors ----
    Fe zero() const { return Fe(*this, 0); }
    Fe one() const { return Fe(*this, 1); }
    Fe xi() const { return Fe(*this, xi_); }
    Fe xi_pow(long long k) const { return Fe(*this, exp(k)); }
    Fe from_enc(uint32_t v) const {
        if (v >= q_) fail(errc::parse_error, "element encoding out of range");
        return Fe(*this, v);
    }
    /// Embeds an integer as an element of the prime subfield (k mod p).
    Fe from_int(long long k) const {
        long long r = k % (long long)p_;
        if (r < 0) r += p_;
        return Fe(*this, (uint32_t)r);
    }

    // ---- raw arithmetic on encodings ----
    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[(size_t)a * q_ + b];
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const { return neg_tab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(size_t)log_[a] + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) fail(errc::zero_element, "inverse of zero");
        return exp_[(q_ - 1) - log_[a]];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) fail(errc::zero_element, "negative power of zero");
            return 0;
        }
        long long r = (long long)(q_ - 1);
        long long k = ((long long)log_[a] % r) * ((e % r + r) % r) % r;
        return exp_[(size_t)k];
    }

    /// Discrete log with respect to xi; defined for nonzero encodings.
    uint32_t log(uint32_t a) const {
        if (a == 0) fail(errc::zero_element, "log of zero");
        return log_[a];
    }
    /// xi^k for any integer k.
    uint32_t exp(long long k) const {
        long long r = (long long)(q_ - 1);
        long long t = (k % r + r) % r;
        return exp_[(size_t)t];
    }

    // ---- named operations ----

    /// Smallest t >= 1 with a^t = 1; divides q-1.
    uint32_t mul_order(uint32_t a) const {
        if (a == 0) fail(errc::zero_element, "multiplicative order of zero");
        return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
    }

    /// All x in GF(q)* with x^n = a, sorted by discrete log.  Solves the
    /// linear congruence n*t = log(a) (mod q-1); empty exactly when
    /// a^{(q-1)/d} != 1 for d = gcd(n, q-1), otherwise d solutions.
    std::vector<uint32_t> nth_root_solutions(uint32_t a, long long n) const {
        if (a == 0) fail(errc::zero_element, "roots of zero");
        long long r = q_ - 1;
        long long nr = ((n % r) + r) % r;
        long long d = std::gcd(nr == 0 ? r : nr, r);
        long long target = log_[a];
        if (target % d != 0) return {};
        std::vector<uint32_t> out;
        out.reserve((size_t)d);
        if (nr == 0) {
            // x^n = x^0 = 1 for all x != 0; solvable only when a = 1
            for (long long t = 0; t < r; ++t) out.push_back(exp_[(size_t)t]);
            return out;
        }
        long long rd = r / d;
        long long t0 = (target / d) % rd * inv_mod(nr / d, rd) % rd;
        for (long long k = 0; k < d; ++k) out.push_back(exp_[(size_t)(t0 + k * rd)]);
        return out;
    }

    /// The unique b with b^{p^r} = a, via r-fold application of the inverse
    /// Frobenius a -> a^{p^{s-1}}.
    uint32_t frobenius_inverse_root(uint32_t a, uint32_t r) const {
        if (a == 0) return 0;
        uint32_t b = a;
        long long e = pw_[s_ - 1]; // p^{s-1}
        for (uint32_t i = 0; i < r; ++i) b = pow(b, e);
        return b;
    }

    /// Tr_{GF(q)/GF(p^r)}(a) = sum_{i<s/r} a^{p^{ri}}; requires r | s.
    uint32_t trace_to_subfield(uint32_t a, uint32_t r) const {
        if (r == 0 || s_ % r != 0) fail(errc::not_a_subfield, "r does not divide s");
        uint32_t t = 0;
        uint32_t terms = s_ / r;
        long long e = 1;
        for (uint32_t i = 0; i < terms; ++i) {
            t = add(t, pow(a, e));
            e *= pw_[r];
        }
        if (pow(t, pw_[r]) != t) fail(errc::not_a_subfield, "trace left the subfield");
        return t;
    }

    /// Absolute trace into GF(p), returned as an integer in [0, p).
    uint32_t absolute_trace(uint32_t a) const { return trace_to_subfield(a, 1); }

    std::string element_str(uint32_t v) const {
        if (v == 0) return "0";
        uint32_t k = log_[v];
        if (k == 0) return "1";
        if (k == 1) return "z";
        return "z^" + std::to_string(k);
    }

  private:
    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t s) {
        for (const auto& e : detail::conway_table())
            if (e.p == p && e.s == s) return e.coeffs;
        // deterministic fallback: smallest monic irreducible in encoding order
        uint64_t q = 1;
        for (uint32_t i = 0; i < s; ++i) {
            q *= p;
            if (q > kMaxOrder) fail(errc::field_too_large, "p^s exceeds 2^20");
        }
        for (uint64_t c = 1; c < q; ++c) {
            std::vector<uint32_t> m(s + 1, 0);
            uint64_t t = c;
            for (uint32_t i = 0; i < s; ++i) {
                m[i] = t % p;
                t /= p;
            }
            m[s] = 1;
            if (m[0] != 0 && detail::prime_field_irreducible(m, p)) return m;
        }
        fail(errc::reducible_modulus, "no irreducible modulus found"); // unreachable
    }

    static long long inv_mod(long long a, long long m) {
        if (m == 1) return 0;
        long long g = m, x = 0, x1 = 1, a1 = a % m;
        while (a1 != 0) {
            long long qt = g / a1;
            g -= qt * a1;
            std::swap(g, a1);
            x -= qt * x1;
            std::swap(x, x1);
        }
        return ((x % m) + m) % m;
    }

    uint32_t add_digits(uint32_t a, uint32_t b) const {
        uint32_t r = 0;
        for (uint32_t i = 0; i < s_; ++i) {
            uint32_t da = a / pw_[i] % p_;
            uint32_t db = b / pw_[i] % p_;
            uint32_t dc = da + db;
            if (dc >= p_) dc -= p_;
            r += dc * pw_[i];
        }
        return r;
    }

    uint32_t mul_slow(uint32_t a, uint32_t b) const {
        // polynomial-basis multiplication mod the field modulus
        detail::PPoly pa(s_), pb(s_);
        for (uint32_t i = 0; i < s_; ++i) {
            pa[i] = a / pw_[i] % p_;
            pb[i] = b / pw_[i] % p_;
        }
        detail::ptrim(pa);
        detail::ptrim(pb);
        detail::PPoly pr = detail::pmod(detail::pmul(pa, pb, p_), mod_, p_);
        uint32_t r = 0;
        for (size_t i = 0; i < pr.size(); ++i) r += pr[i] * pw_[i];
        return r;
    }

    uint32_t pow_slow(uint32_t a, uint64_t e) const {
        uint32_t r = 1, b = a;
        while (e) {
            if (e & 1) r = mul_slow(r, b);
            b = mul_slow(b, b);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        neg_tab_.resize(q_);
        for (uint32_t v = 0; v < q_; ++v) {
            uint32_t r = 0;
            for (uint32_t i = 0; i < s_; ++i) {
                uint32_t d = v / pw_[i] % p_;
                r += (d == 0 ? 0 : p_ - d) * pw_[i];
            }
            neg_tab_[v] = r;
        }
        if (p_ != 2 && (uint64_t)q_ * q_ <= (1u << 20)) {
            add_tab_.resize((size_t)q_ * q_);
            for (uint32_t a = 0; a < q_; ++a)
                for (uint32_t b = 0; b < q_; ++b) add_tab_[(size_t)a * q_ + b] = add_digits(a, b);
        }

        // primitive element: smallest encoding of order exactly q-1
        uint32_t r = q_ - 1;
        std::vector<uint32_t> prime_divs;
        {
            uint32_t n = r;
            for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
                if (n % d == 0) {
                    prime_divs.push_back(d);
                    while (n % d == 0) n /= d;
                }
            if (n > 1) prime_divs.push_back(n);
        }
        xi_ = 1;
        if (r > 1) {
            for (uint32_t v = 2; v < q_; ++v) {
                bool primitive = true;
                for (uint32_t pd : prime_divs)
                    if (pow_slow(v, r / pd) == 1) {
                        primitive = false;
                        break;
                    }
                if (primitive) {
                    xi_ = v;
                    break;
                }
            }
        }

        exp_.resize(2 * (size_t)r);
        log_.assign(q_, 0);
        uint32_t cur = 1;
        for (uint32_t k = 0; k < r; ++k) {
            exp_[k] = cur;
            exp_[k + r] = cur;
            log_[cur] = k;
            cur = mul_slow(cur, xi_);
        }
        if (cur != 1) fail(errc::reducible_modulus, "primitive element order check failed");
        for (uint32_t v = 1; v < q_; ++v)
            if (exp_[log_[v]] != v) fail(errc::reducible_modulus, "exp/log table inconsistency");
    }

    uint32_t p_, s_, q_;
    std::vector<uint32_t> mod_;
    std::vector<uint32_t> pw_;
    uint32_t xi_ = 1;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> neg_tab_;
    std::vector<uint32_t> add_tab_;
};

inline const Fq& Fe::field() const {
    if (!f_) fail(errc::mixed_fields, "element has no field context");
    return *f_;
}

namespace detail {
inline const Fq& common_field(const Fe& a, const Fe& b) {
    if (&a.field() == &b.field()) return a.field();
    if (!a.field().same_field(b.field())) fail(errc::mixed_fields, "elements from different fields");
    return a.field();
}
} // namespace detail

inline Fe Fe::operator+(const Fe& o) const {
    const Fq& f = detail::common_field(*this, o);
    return Fe(f, f.add(v_, o.v_));
}
inline Fe Fe::operator-(const Fe& o) const {
    const Fq& f = detail::common_field(*this, o);
    return Fe(f, f.sub(v_, o.v_));
}
inline Fe Fe::operator*(const Fe& o) const {
    const Fq& f = detail::common_field(*this, o);
    return Fe(f, f.mul(v_, o.v_));
}
inline Fe Fe::operator/(const Fe& o) const {
    const Fq& f = detail::common_field(*this, o);
    return Fe(f, f.div(v_, o.v_));
}
inline Fe Fe::operator-() const { return Fe(field(), field().neg(v_)); }
inline Fe Fe::inv() const { return Fe(field(), field().inv(v_)); }
inline Fe Fe::pow(long long e) const { return Fe(field(), field().pow(v_, e)); }
inline bool Fe::operator==(const Fe& o) const {
    if (f_ == nullptr || o.f_ == nullptr) return v_ == o.v_ && f_ == o.f_;
    (void)detail::common_field(*this, o);
    return v_ == o.v_;
}
inline std::string Fe::str() const { return field().element_str(v_); }

// Fe-typed wrappers for the named field operations.
inline uint32_t mul_order(const Fe& a) { return a.field().mul_order(a.enc()); }
inline std::vector<Fe> nth_root_solutions(const Fe& a, long long n) {
    std::vector<Fe> out;
    for (uint32_t v : a.field().nth_root_solutions(a.enc(), n)) out.emplace_back(a.field(), v);
    return out;
}
inline Fe frobenius_inverse_root(const Fe& a, uint32_t r) {
    return Fe(a.field(), a.field().frobenius_inverse_root(a.enc(), r));
}
inline Fe trace_to_subfield(const Fe& a, uint32_t r) {
    return Fe(a.field(), a.field().trace_to_subfield(a.enc(), r));
}

} // namespace polycode

#endif
