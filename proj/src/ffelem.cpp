#include "pvi/ffelem.hpp"

#include <sstream>

namespace pvi {

RadicalSet::RadicalSet(Poly1 p1) : p1_(std::move(p1)), count_(1) {
    if (p1_.is_zero()) throw Error("zero radical polynomial");
    if (!is_squarefree(p1_)) throw Error("radical polynomial not squarefree: " + p1_.str());
}

RadicalSet::RadicalSet(Poly1 p1, Poly1 p2) : p1_(std::move(p1)), p2_(std::move(p2)), count_(2) {
    if (p1_.is_zero() || p2_.is_zero()) throw Error("zero radical polynomial");
    if (!is_squarefree(p1_)) throw Error("radical polynomial not squarefree: " + p1_.str());
    if (!is_squarefree(p2_)) throw Error("radical polynomial not squarefree: " + p2_.str());
}

RadicalSetPtr FFElem::no_radicals() {
    static const RadicalSetPtr empty = std::make_shared<RadicalSet>();
    return empty;
}

FFElem::FFElem(RatFun c, RadicalSetPtr rad) : rad_(std::move(rad)) { c_[0] = std::move(c); }

FFElem::FFElem(RadicalSetPtr rad, std::array<RatFun, 4> comps)
    : rad_(std::move(rad)), c_(std::move(comps)) {
    int n = rad_->count();
    if ((n < 1 && !c_[1].is_zero()) || (n < 2 && (!c_[2].is_zero() || !c_[3].is_zero())))
        throw Error("component beyond radical count");
}

FFElem FFElem::variable(RadicalSetPtr rad) {
    FFElem r(RatFun::variable(), std::move(rad));
    return r;
}

FFElem FFElem::radical(RadicalSetPtr rad, int i) {
    if (i < 0 || i >= rad->count()) throw Error("radical index out of range");
    FFElem r;
    r.rad_ = std::move(rad);
    r.c_[i == 0 ? 1 : 2] = RatFun(FieldScalar(1));
    return r;
}

bool FFElem::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool FFElem::is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

const RadicalSetPtr& FFElem::check_same(const FFElem& a, const FFElem& b) {
    if (a.rad_ == b.rad_) return a.rad_;
    if (a.is_rational()) return b.rad_;
    if (b.is_rational()) return a.rad_;
    if (*a.rad_ == *b.rad_) return a.rad_;
    throw FieldMismatchError("mismatched radical sets");
}

FFElem FFElem::operator-() const {
    FFElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    FFElem r;
    r.rad_ = FFElem::check_same(a, b);
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
    FFElem r;
    r.rad_ = FFElem::check_same(a, b);
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    FFElem r;
    r.rad_ = FFElem::check_same(a, b);
    const int n = r.rad_->count();
    // basis products: t1*t1 = P1, t2*t2 = P2, t1*t2 = t1t2,
    // t1*t1t2 = P1 t2, t2*t1t2 = P2 t1, t1t2*t1t2 = P1 P2
    RatFun P1 = n >= 1 ? RatFun(r.rad_->p1()) : RatFun();
    RatFun P2 = n >= 2 ? RatFun(r.rad_->p2()) : RatFun();
    const auto& x = a.c_;
    const auto& y = b.c_;
    r.c_[0] = x[0] * y[0];
    if (n >= 1) r.c_[0] += P1 * (x[1] * y[1]);
    if (n >= 2) r.c_[0] += P2 * (x[2] * y[2]) + P1 * P2 * (x[3] * y[3]);
    if (n >= 1) {
        r.c_[1] = x[0] * y[1] + x[1] * y[0];
        if (n >= 2) r.c_[1] += P2 * (x[2] * y[3] + x[3] * y[2]);
    }
    if (n >= 2) {
        r.c_[2] = x[0] * y[2] + x[2] * y[0] + P1 * (x[1] * y[3] + x[3] * y[1]);
        r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    }
    return r;
}

FFElem FFElem::conj(int i) const {
    FFElem r = *this;
    if (i == 0) {
        r.c_[1] = -r.c_[1];
        r.c_[3] = -r.c_[3];
    } else {
        r.c_[2] = -r.c_[2];
        r.c_[3] = -r.c_[3];
    }
    return r;
}

FFElem FFElem::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero field element");
    const int n = rad_->count();
    if (n == 0 || is_rational()) {
        FFElem r;
        r.rad_ = rad_;
        r.c_[0] = c_[0].inv();
        return r;
    }
    if (n == 1 || (c_[2].is_zero() && c_[3].is_zero())) {
        // (c0 + c1 t1)^-1 = (c0 - c1 t1) / (c0^2 - c1^2 P1)
        RatFun P1(rad_->p1());
        RatFun nrm = c_[0] * c_[0] - P1 * (c_[1] * c_[1]);
        if (nrm.is_zero()) throw DivisionByZeroError("zero divisor in radical extension");
        FFElem r;
        r.rad_ = rad_;
        r.c_[0] = c_[0] / nrm;
        r.c_[1] = -(c_[1] / nrm);
        return r;
    }
    // norm down t2 first: a * conj2(a) has no t2 component
    FFElem c2 = conj(1);
    FFElem m = (*this) * c2;  // = e0 + e1 t1
    FFElem minv = m.inv();
    return c2 * minv;
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inv(); }

FFElem FFElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FFElem r(RatFun(FieldScalar(1)), rad_);
    FFElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

FFElem FFElem::d_ds() const {
    FFElem r;
    r.rad_ = rad_;
    const int n = rad_->count();
    r.c_[0] = c_[0].derivative();
    if (n >= 1) {
        RatFun half(Poly1(FieldScalar(Rat(1, 2))));
        RatFun l1 = RatFun(rad_->p1().derivative()) / RatFun(rad_->p1()) * half;  // t1'/t1
        r.c_[1] = c_[1].derivative() + c_[1] * l1;
        if (n >= 2) {
            RatFun l2 = RatFun(rad_->p2().derivative()) / RatFun(rad_->p2()) * half;
            r.c_[2] = c_[2].derivative() + c_[2] * l2;
            r.c_[3] = c_[3].derivative() + c_[3] * (l1 + l2);
        }
    }
    return r;
}

bool FFElem::operator==(const FFElem& b) const {
    if (!(rad_ == b.rad_) && !(*rad_ == *b.rad_)) {
        if (is_rational() && b.is_rational()) return c_[0] == b.c_[0];
        return false;
    }
    return c_ == b.c_;
}

std::string FFElem::str(const std::string& var) const {
    static const char* names[4] = {"", "t1", "t2", "t1*t2"};
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        os << "(" << c_[k].str(var) << ")";
        if (k > 0) {
            const char* nm = (rad_->count() == 1 && k == 1) ? "t" : names[k];
            os << "*" << nm;
        }
    }
    return os.str();
}

std::uint64_t FFElem::hash() const {
    std::uint64_t h = 0x12345678;
    for (const auto& c : c_) h = hash_combine(h, c.hash());
    return h;
}

FFElem operator*(const FieldScalar& k, const FFElem& a) {
    return FFElem(RatFun(k), a.rad()) * a;
}

}  // namespace pvi
