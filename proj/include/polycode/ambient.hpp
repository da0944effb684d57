#ifndef POLYCODE_AMBIENT_HPP
#define POLYCODE_AMBIENT_HPP

#include <cstdint>
#include <vector>

#include "poly.hpp"

namespace polycode {

/// The quotient ring F_q[x]/<x^n - a(x)> given by a length n and an
/// associated vector a = (a_0, ..., a_{n-1}).  The support is the sorted
/// list of indices with a_i != 0 and must be nonempty.
class AmbientSpace {
  public:
    AmbientSpace(const Fq& f, int n, std::vector<uint32_t> assoc) : f_(&f), n_(n), assoc_(std::move(assoc)) {
        if (n_ < 2) fail(errc::bad_support, "length must be >= 2");
        if ((int)assoc_.size() > n_) fail(errc::bad_support, "associated vector longer than n");
        assoc_.resize(n_, 0);
        for (int i = 0; i < n_; ++i) {
            if (assoc_[i] >= f.q()) fail(errc::parse_error, "associated vector entry out of range");
            if (assoc_[i] != 0) support_.push_back(i);
        }
        if (support_.empty()) fail(errc::bad_support, "associated vector must be nonzero");
    }

    static AmbientSpace trinomial(const Fq& f, int n, int ell, uint32_t a0, uint32_t aell) {
        if (ell <= 0 || ell >= n) fail(errc::bad_support, "trinomial index out of range");
        if (a0 == 0 || aell == 0) fail(errc::bad_support, "trinomial coefficients must be nonzero");
        std::vector<uint32_t> a(n, 0);
        a[0] = a0;
        a[ell] = aell;
        return AmbientSpace(f, n, std::move(a));
    }

    static AmbientSpace constacyclic(const Fq& f, int n, uint32_t lambda) {
        if (lambda == 0) fail(errc::bad_support, "constacyclic lambda must be nonzero");
        std::vector<uint32_t> a(n, 0);
        a[0] = lambda;
        return AmbientSpace(f, n, std::move(a));
    }

    /// Reads a(x) off a monic modulus f(x) = x^n - a(x).
    static AmbientSpace from_modulus(const Poly& f) {
        if (!f.is_monic() || f.degree() < 2) fail(errc::bad_support, "modulus must be monic of degree >= 2");
        int n = f.degree();
        std::vector<uint32_t> a(n);
        for (int i = 0; i < n; ++i) a[i] = f.field().neg(f.coeff(i));
        return AmbientSpace(f.field(), n, std::move(a));
    }

    const Fq& field() const { return *f_; }
    int n() const { return n_; }
    const std::vector<uint32_t>& assoc() const { return assoc_; }
    const std::vector<int>& support() const { return support_; }
    uint32_t assoc_at(int i) const { return assoc_[i]; }
    int weight() const { return (int)support_.size(); }
    bool is_trinomial() const { return support_.size() == 2 && support_[0] == 0; }
    bool is_constacyclic() const { return support_.size() == 1 && support_[0] == 0; }
    int ell() const {
        if (!is_trinomial()) fail(errc::not_trinomial, "not a trinomial ambient space");
        return support_[1];
    }

    /// x^n - a(x)
    Poly modulus() const {
        std::vector<uint32_t> c(n_ + 1, 0);
        for (int i = 0; i < n_; ++i) c[i] = f_->neg(assoc_[i]);
        c[n_] = 1;
        return Poly(*f_, std::move(c));
    }

    bool operator==(const AmbientSpace& o) const {
        return f_->same_field(*o.f_) && n_ == o.n_ && assoc_ == o.assoc_;
    }
    bool operator!=(const AmbientSpace& o) const { return !(*this == o); }

  private:
    const Fq* f_;
    int n_;
    std::vector<uint32_t> assoc_;
    std::vector<int> support_;
};

} // namespace polycode

#endif
