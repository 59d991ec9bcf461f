#ifndef PVI_GAUSS_HPP
#define PVI_GAUSS_HPP

#include "pvi/field.hpp"

namespace pvi {

// Gaussian integer, the coefficient domain that Q(i) polynomials clear to.
struct GaussInt {
    Int re, im;
    GaussInt() : re(0), im(0) {}
    GaussInt(Int r) : re(std::move(r)), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    bool is_zero() const { return re == 0 && im == 0; }
    Int norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
};

inline GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
}
inline GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
}
inline GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
inline GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Exact quotient a/b; throws if the division is not exact.
GaussInt gauss_exact_div(const GaussInt& a, const GaussInt& b);
// Nearest-lattice-point division, |rem|^2 <= |b|^2 / 2.
GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b);
// Euclidean gcd, normalized to the canonical associate
// (re > 0, im >= 0; for zero returns zero).
GaussInt gauss_gcd(GaussInt a, GaussInt b);
// Canonical associate: multiply by a unit so that re > 0 and im >= 0
// (pure-imaginary values become positive reals).
GaussInt gauss_canonical(const GaussInt& a, GaussInt* unit = nullptr);

struct IntRing {
    using E = Int;
    E zero() const { return Int(0); }
    E one() const { return Int(1); }
    bool is_zero(const E& a) const { return a == 0; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E exact_div(const E& a, const E& b) const {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (r != 0) throw Error("inexact integer division in PRS");
        return q;
    }
};

struct GaussRing {
    using E = GaussInt;
    E zero() const { return {}; }
    E one() const { return {Int(1), Int(0)}; }
    bool is_zero(const E& a) const { return a.is_zero(); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E exact_div(const E& a, const E& b) const { return gauss_exact_div(a, b); }
};

struct FieldRing {
    using E = FieldScalar;
    E zero() const { return FieldScalar(); }
    E one() const { return FieldScalar(1); }
    bool is_zero(const E& a) const { return a.is_zero(); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E exact_div(const E& a, const E& b) const { return a / b; }
};

}  // namespace pvi

#endif
