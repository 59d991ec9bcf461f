#ifndef PVI_POLY2_HPP
#define PVI_POLY2_HPP

#include <vector>

#include "pvi/poly1.hpp"

namespace pvi {

// Sparse bivariate polynomial in (u, x) over FieldScalar.  Terms are kept
// sorted by the packed key (deg_u, deg_x); no zero coefficients stored.
class Poly2 {
  public:
    struct Term {
        int du, dx;
        FieldScalar c;
    };

    Poly2() = default;
    static Poly2 term(int du, int dx, FieldScalar c);
    static Poly2 constant(FieldScalar c) { return term(0, 0, std::move(c)); }
    static Poly2 var_u() { return term(1, 0, FieldScalar(1)); }
    static Poly2 var_x() { return term(0, 1, FieldScalar(1)); }
    // poly in x only
    static Poly2 from_x_poly(const Poly1& p);
    static Poly2 from_u_coeffs(const std::vector<Poly1>& cj);

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    int deg_u() const;
    int deg_x() const;
    int total_deg() const;
    const std::vector<std::pair<std::uint64_t, FieldScalar>>& raw() const { return t_; }
    std::vector<Term> terms() const;
    FieldScalar coeff(int du, int dx) const;
    long field_tag() const;

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 operator*(const FieldScalar& k) const;
    Poly2& operator+=(const Poly2& b) { return *this = *this + b; }
    Poly2& operator-=(const Poly2& b) { return *this = *this - b; }
    bool operator==(const Poly2& b) const { return t_ == b.t_; }
    bool operator!=(const Poly2& b) const { return !(*this == b); }
    // total order: compare sorted term lists lexicographically
    static int cmp(const Poly2& a, const Poly2& b);

    Poly2 deriv_u() const;
    Poly2 deriv_x() const;
    FieldScalar eval(const FieldScalar& u, const FieldScalar& x) const;
    // substitute numeric x, leaving a univariate in u
    Poly1 eval_x(const FieldScalar& x) const;

    // view as polynomial in u: coefficient of u^j as a Poly1 in x
    std::vector<Poly1> u_coeffs() const;
    // gcd of the u-coefficients (a polynomial in x)
    Poly1 content_x() const;

    // exact division (throws when not divisible)
    static Poly2 exact_div(const Poly2& a, const Poly2& b);

    std::string str(const std::string& uvar = "u", const std::string& xvar = "x") const;
    std::uint64_t hash() const;

  private:
    std::vector<std::pair<std::uint64_t, FieldScalar>> t_;
    static std::uint64_t key(int du, int dx) {
        return (static_cast<std::uint64_t>(du) << 32) | static_cast<std::uint32_t>(dx);
    }
    void insert_sorted();
    friend class Poly2Builder;
};

// accumulate-then-sort builder for products
class Poly2Builder {
  public:
    void add(int du, int dx, const FieldScalar& c);
    Poly2 build();

  private:
    std::vector<std::pair<std::uint64_t, FieldScalar>> acc_;
};

struct Poly2Ring {
    using E = Poly2;
    E zero() const { return Poly2(); }
    E one() const { return Poly2::constant(FieldScalar(1)); }
    bool is_zero(const E& a) const { return a.is_zero(); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E exact_div(const E& a, const E& b) const { return Poly2::exact_div(a, b); }
};

// ---- plane curves ----

struct CurveStats {
    int b = 0;        // deg_u
    int d = 0;        // total degree
    int terms = 0;
    bool monic_in_u = true;
    bool gaussian = false;  // coefficients need Q(i)
};

// primitive integer (or Gaussian-integer) form, sign-normalized on the
// lexicographically largest (deg_u, deg_x) term
Poly2 normalize_curve(const Poly2& p);
CurveStats curve_stats(const Poly2& normalized);

// polynomial in s with Poly2 coefficients (ascending in s)
using PolyS = std::vector<Poly2>;

// exact resultant eliminating s (subresultant PRS), content-stripped
Poly2 resultant_s(const PolyS& a, const PolyS& b);
// test oracle: Sylvester determinant (use only for small degrees)
Poly2 resultant_s_sylvester(const PolyS& a, const PolyS& b);

}  // namespace pvi

#endif
