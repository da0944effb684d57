#ifndef POLYCODE_FACTOR_HPP
#define POLYCODE_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace polycode {

/// Complete factorization into monic irreducibles: unit * prod factor^mult
/// reproduces the input exactly.  Factors are sorted canonically.
struct Factorization {
    Fe unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble() const {
        Poly r(unit.field(), {unit.enc()});
        for (const auto& [fac, mult] : factors) r = r * fac.pow(mult);
        return r;
    }
};

namespace detail {

// f(x) with f' = 0 is g(x)^p where g's coefficients are the inverse
// Frobenius images of f's x^{p*i} coefficients.
inline Poly pth_root(const Poly& f) {
    const Fq& F = f.field();
    uint32_t p = F.p();
    std::vector<uint32_t> g(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); i += p) g[i / p] = F.frobenius_inverse_root(f.coeff(i), 1);
    return Poly(F, std::move(g));
}

// Char-p squarefree decomposition (Musser with p-th-root descent).
inline std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
    const Fq& F = f.field();
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) return out;
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto& [g, m] : squarefree(pth_root(f).monic())) out.emplace_back(g, m * (int)F.p());
        return out;
    }
    Poly c = gcd_euclid(f, fd);
    Poly w = (f / c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd_euclid(w, c);
        Poly z = (w / y).monic();
        if (z.degree() > 0) out.emplace_back(z, i);
        c = (c / y).monic();
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, m] : squarefree(pth_root(c).monic())) out.emplace_back(g, m * (int)F.p());
    return out;
}

// x^{q^levels} mod f via repeated q-th powering.
inline Poly frobenius_power_x(const Poly& f, int levels) {
    const Fq& F = f.field();
    Poly h = Poly::x(F) % f;
    for (int i = 0; i < levels; ++i) h = Poly::pow_mod(h, F.q(), f);
    return h;
}

// Distinct-degree splitting of a squarefree monic polynomial: returns
// (product-of-irreducibles-of-degree-d, d) pairs.
inline std::vector<std::pair<Poly, int>> ddf(const Poly& f) {
    const Fq& F = f.field();
    std::vector<std::pair<Poly, int>> out;
    Poly star = f;
    Poly h = Poly::x(F) % star;
    for (int d = 1; 2 * d <= star.degree(); ++d) {
        h = Poly::pow_mod(h, F.q(), star);
        Poly g = gcd_euclid(h - (Poly::x(F) % star), star);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            star = (star / g).monic();
            if (star.degree() == 0) return out;
            h = h % star;
        }
    }
    if (star.degree() > 0) out.emplace_back(star, star.degree());
    return out;
}

inline Poly random_poly(const Fq& F, int max_deg, std::mt19937_64& rng) {
    std::vector<uint32_t> c(max_deg);
    for (auto& v : c) v = (uint32_t)(rng() % F.q());
    return Poly(F, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
inline void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Fq& F = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    while (true) {
        Poly r = random_poly(F, f.degree(), rng);
        if (r.is_zero()) continue;
        Poly g(F);
        if (F.p() == 2) {
            // additive trace map over GF(2): sum of r^{2^i}, i < d*s
            Poly t = r % f;
            Poly acc = t;
            uint32_t steps = (uint32_t)d * F.s();
            for (uint32_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = gcd_euclid(acc, f);
        } else {
            // norm into GF(q) then the (q-1)/2 power test, keeping every
            // exponent within 64 bits
            Poly nrm = r % f;
            Poly h = nrm;
            for (int i = 1; i < d; ++i) {
                h = Poly::pow_mod(h, F.q(), f);
                nrm = (nrm * h) % f;
            }
            Poly t = Poly::pow_mod(nrm, (F.q() - 1) / 2, f);
            g = gcd_euclid(t - Poly::one(F), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf((f / g).monic(), d, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Full factorization via squarefree decomposition, distinct-degree
/// splitting, then equal-degree splitting.  The pseudorandom stream is
/// fixed-seed, so output is identical across runs.
inline Factorization factor(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_poly, "cannot factor the zero polynomial");
    const Fq& F = f.field();
    Factorization out{Fe(F, f.lead()), {}};
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (auto& [part, mult] : detail::squarefree(f.monic())) {
        for (auto& [prod, d] : detail::ddf(part)) {
            std::vector<Poly> irreducibles;
            detail::edf(prod, d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    return out;
}

/// Rabin irreducibility test over GF(q).
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Fq& F = f.field();
    int n = f.degree();
    Poly x = Poly::x(F) % f;
    if (detail::frobenius_power_x(f, n) != x) return false;
    int m = n;
    std::vector<int> primes;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        Poly h = detail::frobenius_power_x(f, n / r);
        if (gcd_euclid(h - x, f).degree() != 0) return false;
    }
    return true;
}

/// All monic divisors of f (every multiplicity combination of its monic
/// irreducible factors), sorted by nondecreasing degree; the callback may
/// return false to stop early.
inline void for_each_monic_divisor(const Poly& f, const std::function<bool(const Poly&)>& cb) {
    if (f.is_zero()) fail(errc::zero_poly, "divisors of the zero polynomial");
    Factorization fac = factor(f);
    std::vector<Poly> divisors{Poly::one(f.field())};
    for (const auto& [g, mult] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(divisors.size() * (mult + 1));
        for (const auto& d : divisors) {
            Poly cur = d;
            next.push_back(cur);
            for (int e = 1; e <= mult; ++e) {
                cur = cur * g;
                next.push_back(cur);
            }
        }
        divisors = std::move(next);
    }
    std::stable_sort(divisors.begin(), divisors.end(),
                     [](const Poly& a, const Poly& b) { return a.lex_less(b); });
    for (const auto& d : divisors)
        if (!cb(d)) return;
}

inline std::vector<Poly> monic_divisors(const Poly& f) {
    std::vector<Poly> out;
    for_each_monic_divisor(f, [&](const Poly& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

} // namespace polycode

#endif
