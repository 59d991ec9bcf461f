#include "pvi/gauss.hpp"

namespace pvi {

GaussInt gauss_exact_div(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw DivisionByZeroError("Gaussian division by zero");
    Int n = b.norm();
    GaussInt t = a * b.conj();
    Int qr, rr, qi, ri;
    mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
    mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
    if (rr != 0 || ri != 0) throw Error("inexact Gaussian division in PRS");
    return {qr, qi};
}

GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b) {
    Int n = b.norm();
    GaussInt t = a * b.conj();
    auto round_div = [&n](const Int& x) {
        Int num = 2 * x + n;
        Int den = 2 * n;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    };
    return {round_div(t.re), round_div(t.im)};
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        GaussInt q = gauss_div_round(a, b);
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return gauss_canonical(a);
}

GaussInt gauss_canonical(const GaussInt& a, GaussInt* unit) {
    GaussInt u{Int(1), Int(0)};
    GaussInt v = a;
    // rotate by i until re > 0, im >= 0 (or v == 0)
    for (int k = 0; k < 3 && !v.is_zero() && !(v.re > 0 && v.im >= 0); ++k) {
        v = GaussInt{-v.im, v.re};  // multiply by i
        u = GaussInt{-u.im, u.re};
    }
    if (unit) *unit = u;
    return v;
}

}  // namespace pvi
