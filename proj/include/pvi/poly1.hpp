#ifndef PVI_POLY1_HPP
#define PVI_POLY1_HPP

#include <vector>

#include "pvi/field.hpp"
#include "pvi/gauss.hpp"

namespace pvi {

// Dense univariate polynomial over FieldScalar, ascending coefficients,
// leading coefficient nonzero unless the zero polynomial.  The variable is
// contextual (s for parametrizations, w for Weierstrass checks, ...).
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(FieldScalar c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit Poly1(std::vector<FieldScalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 variable() { return monomial(1, FieldScalar(1)); }
    static Poly1 monomial(int deg, FieldScalar c);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const FieldScalar& lc() const;
    FieldScalar coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : FieldScalar();
    }
    const std::vector<FieldScalar>& coeffs() const { return c_; }

    Poly1 operator-() const;
    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 operator*(const FieldScalar& k) const;
    bool operator==(const Poly1& b) const { return c_ == b.c_; }
    bool operator!=(const Poly1& b) const { return !(*this == b); }

    Poly1 derivative() const;
    FieldScalar eval(const FieldScalar& x) const;
    Poly1 shifted(int k) const;  // multiply by var^k
    // compose with s -> s + c
    Poly1 translate(const FieldScalar& c) const;
    // reverse coefficients: s^deg * p(1/s)
    Poly1 reciprocal() const;
    Poly1 make_monic() const;

    // largest m tag among coefficients (0 if plain rational)
    long field_tag() const;

    std::string str(const std::string& var = "s") const;
    std::uint64_t hash() const;

  private:
    std::vector<FieldScalar> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// quotient/remainder over the coefficient field
std::pair<Poly1, Poly1> divrem(const Poly1& a, const Poly1& b);
// exact division; throws if remainder nonzero
Poly1 exact_div(const Poly1& a, const Poly1& b);

// Monic exact gcd; gcd with zero is the other argument made monic.
Poly1 gcd1(const Poly1& a, const Poly1& b);
bool is_squarefree(const Poly1& p);
Poly1 squarefree_part(const Poly1& p);

FieldScalar resultant1(const Poly1& a, const Poly1& b);
FieldScalar discriminant1(const Poly1& p);

// Rational (or Gaussian-rational) roots of p, found via the rational root
// theorem on the cleared integer form.  Used for pole bookkeeping.
std::vector<FieldScalar> rational_roots(const Poly1& p);

// Clear denominators / contents.
// For rational polys: returns primitive integer coefficients (ascending) and
// sets `scale` so that p = scale * primitive.
std::vector<Int> clear_to_int(const Poly1& p, Rat& scale);
std::vector<GaussInt> clear_to_gauss(const Poly1& p, FieldScalar& scale);
Poly1 poly_from_int(const std::vector<Int>& v);
Poly1 poly_from_gauss(const std::vector<GaussInt>& v);

}  // namespace pvi

#endif
