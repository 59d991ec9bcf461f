#ifndef PVI_BIGFLOAT_HPP
#define PVI_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "pvi/field.hpp"

namespace pvi {

// Thin RAII value wrapper over mpfr_t.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rat(const Rat& r, mpfr_prec_t prec);
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double log10_abs() const;
    std::string str(int digits = 20) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

  private:
    mpfr_t v_;
};

// Complex arithmetic on BigFloat pairs (libmpc is not available here).
struct BigComplex {
    BigFloat re, im;
    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    static BigComplex from_scalar(const FieldScalar& s, mpfr_prec_t prec);
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    double log10_abs() const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex csqrt(const BigComplex& a);  // principal branch

}  // namespace pvi

#endif
