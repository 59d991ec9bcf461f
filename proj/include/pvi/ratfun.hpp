#ifndef PVI_RATFUN_HPP
#define PVI_RATFUN_HPP

#include "pvi/poly1.hpp"

namespace pvi {

// Reduced ratio of univariate polynomials; denominator monic, gcd-free.
class RatFun {
  public:
    RatFun() : num_(), den_(FieldScalar(1)) {}
    RatFun(Poly1 num, Poly1 den);
    explicit RatFun(Poly1 num) : num_(std::move(num)), den_(FieldScalar(1)) {}
    explicit RatFun(const FieldScalar& c) : num_(Poly1(c)), den_(FieldScalar(1)) {}
    static RatFun variable() { return RatFun(Poly1::variable()); }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }
    RatFun& operator/=(const RatFun& b) { return *this = *this / b; }
    bool operator==(const RatFun& b) const { return num_ == b.num_ && den_ == b.den_; }
    bool operator!=(const RatFun& b) const { return !(*this == b); }

    RatFun inv() const;
    RatFun derivative() const;
    FieldScalar eval(const FieldScalar& s) const;  // throws on pole
    // compose with s -> s + c (exact)
    RatFun translate(const FieldScalar& c) const;

    std::string str(const std::string& var = "s") const;
    std::uint64_t hash() const;

  private:
    Poly1 num_, den_;
    void reduce();
};

}  // namespace pvi

#endif
