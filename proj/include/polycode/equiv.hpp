#ifndef POLYCODE_EQUIV_HPP
#define POLYCODE_EQUIV_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ambient.hpp"
#include "factor.hpp"

namespace polycode {

/// A scalar alpha certifying the isometric algebra isomorphism
/// f(x) -> f(alpha x) from the ring of `source` onto the ring of `target`;
/// it satisfies target.a_i * alpha^{n-i} = source.a_i on the common support.
struct EquivWitness {
    Fe alpha;
    AmbientSpace source;
    AmbientSpace target;
};

/// The n-equivalence classes of weight-m associated vectors on a fixed
/// support: one representative per class plus the class count.
struct ClassIndex {
    int n;
    std::vector<int> support;
    std::vector<AmbientSpace> reps;
    long long count;
};

namespace detail {

inline void check_support(int n, const std::vector<int>& support) {
    if (support.empty()) fail(errc::bad_support, "support must be nonempty");
    for (size_t j = 0; j < support.size(); ++j) {
        if (support[j] < 0 || support[j] >= n) fail(errc::bad_support, "support index out of range");
        if (j > 0 && support[j] <= support[j - 1]) fail(errc::bad_support, "support must be strictly increasing");
    }
}

inline void check_compatible(const AmbientSpace& a, const AmbientSpace& b) {
    if (!a.field().same_field(b.field())) fail(errc::mixed_fields, "spaces over different fields");
    if (a.n() != b.n()) fail(errc::length_mismatch, "spaces of different length");
    if (a.support() != b.support()) fail(errc::support_mismatch, "spaces with different support");
}

// Order of (w_0, ..., w_{m-1}) in (Z_r)^m, i.e. lcm_j r/gcd(w_j, r).
inline long long support_orbit_order(long long r, int n, const std::vector<int>& support) {
    long long ord = 1;
    for (int i : support) ord = std::lcm(ord, r / std::gcd((long long)(n - i), r));
    return ord;
}

} // namespace detail

/// All alpha in F_q* with A.a_{i_j} * alpha^{n-i_j} = B.a_{i_j} on the whole
/// support, sorted by discrete log.  Each is the scalar of a map sending the
/// ring of B onto the ring of A.  Computed as the F_q-root set of
/// gcd_j(x^{n-i_j} - b_{i_j} a_{i_j}^{-1}) via the closed-form binomial gcd.
inline std::vector<EquivWitness> witnesses(const AmbientSpace& A, const AmbientSpace& B) {
    detail::check_compatible(A, B);
    const Fq& f = A.field();
    std::vector<std::pair<long long, uint32_t>> pairs;
    for (int i : A.support())
        pairs.push_back({A.n() - i, f.div(B.assoc_at(i), A.assoc_at(i))});
    Poly g = multi_binomial_gcd(f, pairs);
    std::vector<EquivWitness> out;
    if (g.is_one()) return out;
    for (uint32_t v : f.nth_root_solutions(f.neg(g.coeff(0)), g.degree()))
        out.push_back({Fe(f, v), B, A});
    return out;
}

inline bool is_equivalent(const AmbientSpace& A, const AmbientSpace& B) {
    return !witnesses(A, B).empty();
}

/// Number of n-equivalence classes of associated vectors with the given
/// support: (q-1)^m / lcm_j((q-1)/gcd(n-i_j, q-1)).
inline long long class_count(const Fq& f, int n, const std::vector<int>& support) {
    if (n < 2) fail(errc::bad_support, "length must be >= 2");
    detail::check_support(n, support);
    long long r = f.q() - 1;
    if (r == 1) return 1;
    long long ord = detail::support_orbit_order(r, n, support);
    unsigned __int128 count = r / ord;
    for (size_t j = 1; j < support.size(); ++j) {
        count *= (unsigned long long)r;
        if (count > ((unsigned __int128)1 << 62)) fail(errc::budget_exceeded, "class count too large");
    }
    return (long long)count;
}

/// One representative per equivalence class, enumerated in lexicographic
/// order of the exponent tuples (log a_{i_0}, ..., log a_{i_{m-1}}).  A tuple
/// represents its class exactly when it is the lexicographically smallest
/// element of its orbit under adding multiples of (n-i_0, ..., n-i_{m-1}).
inline ClassIndex class_representatives(const Fq& f, int n, const std::vector<int>& support) {
    long long want = class_count(f, n, support);
    long long r = f.q() - 1;
    int m = (int)support.size();
    long long ord = r == 1 ? 1 : detail::support_orbit_order(r, n, support);

    // total scan work is (q-1)^m * orbit size
    {
        unsigned __int128 work = (unsigned long long)ord;
        for (int j = 0; j < m; ++j) work *= (unsigned long long)r;
        if (work > 200000000ull) fail(errc::budget_exceeded, "representative enumeration too large");
    }

    std::vector<long long> w(m);
    for (int j = 0; j < m; ++j) w[j] = (long long)(n - support[j]) % r;

    ClassIndex index{n, support, {}, want};
    std::vector<long long> t(m, 0);
    std::vector<long long> orbit(m);
    while (true) {
        // lex-min test over the orbit of t
        bool is_min = true;
        for (long long h = 1; h < ord && is_min; ++h) {
            int cmp = 0;
            for (int j = 0; j < m; ++j) {
                orbit[j] = (t[j] + h * w[j]) % r;
                if (cmp == 0) cmp = orbit[j] < t[j] ? -1 : (orbit[j] > t[j] ? 1 : 0);
            }
            if (cmp < 0) is_min = false;
        }
        if (is_min) {
            std::vector<uint32_t> assoc(n, 0);
            for (int j = 0; j < m; ++j) assoc[support[j]] = f.exp(t[j]);
            index.reps.emplace_back(f, n, std::move(assoc));
            if ((long long)index.reps.size() == want) break;
        }
        // next tuple, last coordinate fastest
        int j = m - 1;
        while (j >= 0 && ++t[j] == r) t[j--] = 0;
        if (j < 0) break;
    }

    if ((long long)index.reps.size() != want)
        fail(errc::representative_collision, "representative enumeration missed a class");
    // pairwise non-equivalence sanity check at small scale
    if (want <= 128) {
        for (size_t a = 0; a < index.reps.size(); ++a)
            for (size_t b = a + 1; b < index.reps.size(); ++b)
                if (is_equivalent(index.reps[a], index.reps[b]))
                    fail(errc::representative_collision, "representatives are not pairwise inequivalent");
    }
    return index;
}

/// The class representative equivalent to A (first in enumeration order)
/// plus one witness mapping A onto it.
inline std::pair<AmbientSpace, EquivWitness> canonicalize(const AmbientSpace& A) {
    const Fq& f = A.field();
    long long r = f.q() - 1;
    int m = A.weight();
    const auto& support = A.support();
    long long ord = r == 1 ? 1 : detail::support_orbit_order(r, A.n(), support);

    std::vector<long long> t(m), w(m);
    for (int j = 0; j < m; ++j) {
        t[j] = f.log(A.assoc_at(support[j]));
        w[j] = (long long)(A.n() - support[j]) % r;
    }
    std::vector<long long> best = t;
    for (long long h = 1; h < ord; ++h) {
        std::vector<long long> cand(m);
        for (int j = 0; j < m; ++j) cand[j] = (t[j] + h * w[j]) % r;
        if (cand < best) best = cand;
    }
    std::vector<uint32_t> assoc(A.n(), 0);
    for (int j = 0; j < m; ++j) assoc[support[j]] = f.exp(best[j]);
    AmbientSpace rep(f, A.n(), std::move(assoc));
    auto ws = witnesses(rep, A);
    if (ws.empty()) fail(errc::representative_collision, "canonical representative not equivalent");
    return {rep, ws.front()};
}

/// Witness mapping the family of x^n - x^ell - 1 onto A, when both
/// compatibility conditions hold: a_ell^{n/d} = a_0^{(n-ell)/d} for
/// d = gcd(n, n-ell), and x^d - a_0^v a_ell^u has a root in F_q
/// (v*n + u*(n-ell) = d).
inline std::optional<Fe> unit_trinomial_test(const AmbientSpace& A) {
    if (!A.is_trinomial()) fail(errc::not_trinomial, "unit test needs a trinomial space");
    const Fq& f = A.field();
    long long n = A.n(), ell = A.ell();
    uint32_t a0 = A.assoc_at(0), aell = A.assoc_at((int)ell);
    long long d = std::gcd(n, n - ell);
    if (f.pow(aell, n / d) != f.pow(a0, (n - ell) / d)) return std::nullopt;
    // Bezout: v*n + u*(n-ell) = d
    long long r0 = n, r1 = n - ell, v0 = 1, v1 = 0, u0 = 0, u1 = 1;
    while (r1 != 0) {
        long long qt = r0 / r1;
        r0 -= qt * r1;
        std::swap(r0, r1);
        v0 -= qt * v1;
        std::swap(v0, v1);
        u0 -= qt * u1;
        std::swap(u0, u1);
    }
    auto pow_signed = [&](uint32_t base, long long e) {
        return e >= 0 ? f.pow(base, e) : f.pow(f.inv(base), -e);
    };
    uint32_t c = f.mul(pow_signed(a0, v0), pow_signed(aell, u0));
    auto roots = f.nth_root_solutions(c, d);
    if (roots.empty()) return std::nullopt;
    return Fe(f, roots.front());
}

/// Necessary condition from the constacyclic reduction: for i in {0, ell},
/// (a_i^{-1} b_i)^{(q-1)/gcd(n-i, q-1)} = 1.  Implied by equivalence but not
/// sufficient.
inline bool constacyclic_necessary(const AmbientSpace& A, const AmbientSpace& B) {
    if (!A.is_trinomial()) fail(errc::not_trinomial, "constacyclic reduction needs trinomial spaces");
    detail::check_compatible(A, B);
    const Fq& f = A.field();
    long long r = f.q() - 1;
    if (r == 1) return true;
    for (int i : A.support()) {
        long long di = r / std::gcd((long long)(A.n() - i), r);
        if (f.pow(f.div(B.assoc_at(i), A.assoc_at(i)), di) != 1) return false;
    }
    return true;
}

/// Pushes a generator through phi_alpha: source ring -> target ring,
/// g(x) -> monic(g(alpha x)).
inline Poly map_generator(const EquivWitness& w, const Poly& g) {
    if (!g.divides(w.source.modulus())) fail(errc::not_a_divisor, "generator does not divide the source modulus");
    return g.subst_scale(w.alpha.enc()).monic();
}

} // namespace polycode

#endif
