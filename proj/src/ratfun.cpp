#include "pvi/ratfun.hpp"

namespace pvi {

RatFun::RatFun(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly1(FieldScalar(1));
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Poly1 g = gcd1(num_, den_);
        if (g.deg() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (!den_.lc().is_one()) {
        FieldScalar inv = den_.lc().inv();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    Poly1 g = gcd1(a.den_, b.den_);
    if (g.deg() == 0) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    Poly1 da = exact_div(a.den_, g), db = exact_div(b.den_, g);
    return RatFun(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    Poly1 g1 = gcd1(a.num_, b.den_);
    Poly1 g2 = gcd1(b.num_, a.den_);
    Poly1 n1 = g1.deg() > 0 ? exact_div(a.num_, g1) : a.num_;
    Poly1 d2 = g1.deg() > 0 ? exact_div(b.den_, g1) : b.den_;
    Poly1 n2 = g2.deg() > 0 ? exact_div(b.num_, g2) : b.num_;
    Poly1 d1 = g2.deg() > 0 ? exact_div(a.den_, g2) : a.den_;
    RatFun r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    if (!r.den_.lc().is_one()) {
        FieldScalar inv = r.den_.lc().inv();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

RatFun RatFun::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational function");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    if (!r.den_.lc().is_one()) {
        FieldScalar inv = r.den_.lc().inv();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RatFun RatFun::derivative() const {
    if (is_zero() || is_constant()) return RatFun();
    if (den_.is_constant()) return RatFun(num_.derivative() * den_.lc().inv());
    // (n/d)' = (n'd - nd')/d^2; d/gcd(d,d') splits the repeated part
    Poly1 dp = den_.derivative();
    Poly1 t = num_.derivative() * den_ - num_ * dp;
    return RatFun(std::move(t), den_ * den_);
}

FieldScalar RatFun::eval(const FieldScalar& s) const {
    FieldScalar d = den_.eval(s);
    if (d.is_zero()) throw DegenerateError("evaluation at a pole");
    return num_.eval(s) / d;
}

RatFun RatFun::translate(const FieldScalar& c) const {
    RatFun r;
    r.num_ = num_.translate(c);
    r.den_ = den_.translate(c);
    return r;
}

std::string RatFun::str(const std::string& var) const {
    if (den_.is_constant()) {
        if (den_.lc().is_one()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::uint64_t RatFun::hash() const { return hash_combine(num_.hash(), den_.hash()); }

}  // namespace pvi
