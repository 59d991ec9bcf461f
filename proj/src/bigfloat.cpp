#include "pvi/bigfloat.hpp"

namespace pvi {

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
    BigFloat x(prec);
    mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
    return x;
}

double BigFloat::log10_abs() const {
    if (mpfr_zero_p(v_)) return -1e9;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::from_scalar(const FieldScalar& s, mpfr_prec_t prec) {
    BigComplex z(prec);
    z.re = BigFloat::from_rat(s.re(), prec);
    z.im = BigFloat::from_rat(s.im(), prec);
    return z;
}

double BigComplex::log10_abs() const {
    // log10 sqrt(re^2+im^2) without overflow concerns
    BigFloat n = re * re + im * im;
    if (n.is_zero()) return -1e9;
    return n.log10_abs() / 2;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    BigComplex r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    BigComplex r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    BigComplex r(std::max(a.re.prec(), b.re.prec()));
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigComplex r(std::max(a.re.prec(), b.re.prec()));
    BigFloat n = b.re * b.re + b.im * b.im;
    r.re = (a.re * b.re + a.im * b.im) / n;
    r.im = (a.im * b.re - a.re * b.im) / n;
    return r;
}

BigComplex csqrt(const BigComplex& a) {
    mpfr_prec_t prec = a.re.prec();
    BigComplex r(prec);
    if (a.is_zero()) return r;
    // |a|
    BigFloat n2 = a.re * a.re + a.im * a.im;
    BigFloat mod(prec);
    mpfr_sqrt(mod.raw(), n2.raw(), MPFR_RNDN);
    // t = sqrt((|a| + re)/2), u = sqrt((|a| - re)/2)
    BigFloat two(prec);
    mpfr_set_ui(two.raw(), 2, MPFR_RNDN);
    BigFloat t(prec), u(prec);
    BigFloat tp = (mod + a.re) / two;
    BigFloat up = (mod - a.re) / two;
    mpfr_sqrt(t.raw(), tp.raw(), MPFR_RNDN);
    mpfr_sqrt(u.raw(), up.raw(), MPFR_RNDN);
    // principal: re >= 0; im sign follows im(a)
    r.re = t;
    if (mpfr_sgn(a.im.raw()) < 0) {
        r.im = -u;
    } else {
        r.im = u;
    }
    return r;
}

}  // namespace pvi
