#ifndef POLYCODE_POLY_HPP
#define POLYCODE_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace polycode {

/// Dense univariate polynomial over one field context.  Coefficients are
/// stored constant term first with trailing zeros stripped; the zero
/// polynomial has an empty coefficient list and degree -1.
class Poly {
  public:
    explicit Poly(const Fq& f) : f_(&f) {}
    Poly(const Fq& f, std::vector<uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly one(const Fq& f) { return Poly(f, {1}); }
    static Poly x(const Fq& f) { return Poly(f, {0, 1}); }
    static Poly monomial(const Fq& f, int deg, uint32_t coeff = 1) {
        std::vector<uint32_t> c(deg + 1, 0);
        c[deg] = coeff;
        return Poly(f, std::move(c));
    }
    /// x^n - a
    static Poly binomial(const Fq& f, int n, uint32_t a) {
        std::vector<uint32_t> c(n + 1, 0);
        c[0] = f.neg(a);
        c[n] = 1;
        return Poly(f, std::move(c));
    }

    const Fq& field() const { return *f_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint32_t coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0; }
    uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    Fe coeff_el(int i) const { return Fe(*f_, coeff(i)); }

    bool operator==(const Poly& o) const { return f_->same_field(*o.f_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        check(o);
        std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff((int)i), o.coeff((int)i));
        return Poly(*f_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        check(o);
        std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff((int)i), o.coeff((int)i));
        return Poly(*f_, std::move(r));
    }
    Poly operator-() const {
        std::vector<uint32_t> r(c_);
        for (auto& v : r) v = f_->neg(v);
        return Poly(*f_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return Poly(*f_);
        std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
        }
        return Poly(*f_, std::move(r));
    }
    Poly operator*(uint32_t scalar) const {
        std::vector<uint32_t> r(c_);
        for (auto& v : r) v = f_->mul(v, scalar);
        return Poly(*f_, std::move(r));
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        check(d);
        if (d.is_zero()) fail(errc::division_by_zero_poly, "polynomial division by zero");
        if (degree() < d.degree()) return {Poly(*f_), *this};
        std::vector<uint32_t> rem(c_);
        std::vector<uint32_t> quot(degree() - d.degree() + 1, 0);
        uint32_t lead_inv = f_->inv(d.lead());
        for (int k = degree(); k >= d.degree(); --k) {
            uint32_t c = rem[k];
            if (c == 0) continue;
            uint32_t factor = f_->mul(c, lead_inv);
            quot[k - d.degree()] = factor;
            for (int i = 0; i <= d.degree(); ++i)
                rem[k - d.degree() + i] = f_->sub(rem[k - d.degree() + i], f_->mul(factor, d.c_[i]));
        }
        return {Poly(*f_, std::move(quot)), Poly(*f_, std::move(rem))};
    }
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    bool divides(const Poly& other) const { return other.divrem(*this).second.is_zero(); }

    uint32_t eval(uint32_t x) const {
        uint32_t acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
        return acc;
    }
    Fe eval(const Fe& x) const { return Fe(*f_, eval(x.enc())); }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return *this * f_->inv(lead());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(*f_);
        std::vector<uint32_t> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(c_[i], (uint32_t)(i % f_->p()));
        return Poly(*f_, std::move(r));
    }

    Poly pow(uint64_t e) const {
        Poly r = Poly::one(*f_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    static Poly pow_mod(const Poly& base, uint64_t e, const Poly& mod) {
        Poly r = Poly::one(base.field()) % mod, b = base % mod;
        while (e) {
            if (e & 1) r = (r * b) % mod;
            if (e >>= 1) b = (b * b) % mod;
        }
        return r;
    }

    /// f(alpha * x)
    Poly subst_scale(uint32_t alpha) const {
        std::vector<uint32_t> r(c_);
        uint32_t pw = 1;
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] = f_->mul(r[i], pw);
            pw = f_->mul(pw, alpha);
        }
        return Poly(*f_, std::move(r));
    }

    /// Total order: by degree, then by coefficient tuple from the constant
    /// term (encodings compared as integers).  Used for canonical sorting.
    bool lex_less(const Poly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    std::string str() const; // defined in textio.hpp

  private:
    void check(const Poly& o) const {
        if (f_ != o.f_ && !f_->same_field(*o.f_)) fail(errc::mixed_fields, "polynomials over different fields");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        for (uint32_t v : c_)
            if (v >= f_->q()) fail(errc::parse_error, "coefficient encoding out of range");
    }

    const Fq* f_;
    std::vector<uint32_t> c_;
};

/// Monic gcd by the Euclidean algorithm.
inline Poly gcd_euclid(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) fail(errc::both_zero, "gcd(0, 0) undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Closed-form gcd(x^n - a, x^m - b): equal to 1 unless a^{m/d} = b^{n/d}
/// with d = gcd(m, n), in which case it is x^d - a^u b^v for Bezout
/// coefficients u*n + v*m = d (negative exponents through field inverses).
inline Poly binomial_gcd(const Fq& f, long long n, uint32_t a, long long m, uint32_t b) {
    if (a == 0 || b == 0) fail(errc::zero_constant, "binomial constant must be nonzero");
    if (n < 1 || m < 1) fail(errc::zero_constant, "binomial degree must be >= 1");
    long long d = std::gcd(n, m);
    if (f.pow(a, m / d) != f.pow(b, n / d)) return Poly::one(f);
    // extended Euclid on (n, m)
    long long r0 = n, r1 = m, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        long long qt = r0 / r1;
        r0 -= qt * r1;
        std::swap(r0, r1);
        u0 -= qt * u1;
        std::swap(u0, u1);
        v0 -= qt * v1;
        std::swap(v0, v1);
    }
    // r0 = d = u0*n + v0*m
    auto pow_signed = [&](uint32_t base, long long e) {
        return e >= 0 ? f.pow(base, e) : f.pow(f.inv(base), -e);
    };
    uint32_t c = f.mul(pow_signed(a, u0), pow_signed(b, v0));
    return Poly::binomial(f, (int)d, c);
}

/// Left fold of binomial_gcd over x^{n_i} - a_i; either 1 or of the form
/// x^d - prod a_i^{u_i} with d = gcd of all n_i.
inline Poly multi_binomial_gcd(const Fq& f, const std::vector<std::pair<long long, uint32_t>>& pairs) {
    if (pairs.empty()) fail(errc::empty_list, "multi_binomial_gcd of empty list");
    for (auto& [n, a] : pairs)
        if (a == 0) fail(errc::zero_constant, "binomial constant must be nonzero");
    long long d = pairs[0].first;
    uint32_t c = pairs[0].second;
    for (size_t i = 1; i < pairs.size(); ++i) {
        Poly g = binomial_gcd(f, d, c, pairs[i].first, pairs[i].second);
        if (g.is_one()) return g;
        d = g.degree();
        c = f.neg(g.coeff(0));
    }
    return Poly::binomial(f, (int)d, c);
}

} // namespace polycode

#endif
