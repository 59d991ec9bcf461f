#include "pvi/field.hpp"

namespace pvi {

Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

FieldScalar::FieldScalar(Rat a, Rat b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    a_.canonicalize();
    b_.canonicalize();
    if (m_ == 0 && b_ != 0) throw FieldMismatchError("nonzero radical part with m = 0");
    normalize();
}

void FieldScalar::normalize() {
    if (b_ == 0) m_ = 0;
}

long FieldScalar::join_tags(const FieldScalar& x, const FieldScalar& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
    throw FieldMismatchError("cannot combine sqrt(" + std::to_string(x.m_) +
                             ") with sqrt(" + std::to_string(y.m_) + ")");
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.m_ = m_;
    return r;
}

FieldScalar FieldScalar::conj() const {
    FieldScalar r;
    r.a_ = a_;
    r.b_ = -b_;
    r.m_ = m_;
    return r;
}

Rat FieldScalar::norm() const {
    if (m_ == 0) return a_ * a_;
    return a_ * a_ - Rat(m_) * b_ * b_;
}

FieldScalar FieldScalar::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (m_ == 0) {
        FieldScalar r;
        r.a_ = 1 / a_;
        return r;
    }
    Rat n = norm();
    if (n == 0) throw DivisionByZeroError("zero divisor in quadratic extension");
    FieldScalar r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.m_ = m_;
    r.normalize();
    return r;
}

FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
    FieldScalar r;
    r.m_ = FieldScalar::join_tags(x, y);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.normalize();
    return r;
}

FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) {
    FieldScalar r;
    r.m_ = FieldScalar::join_tags(x, y);
    r.a_ = x.a_ - y.a_;
    r.b_ = x.b_ - y.b_;
    r.normalize();
    return r;
}

FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
    FieldScalar r;
    r.m_ = FieldScalar::join_tags(x, y);
    if (r.m_ == 0) {
        r.a_ = x.a_ * y.a_;
        return r;
    }
    r.a_ = x.a_ * y.a_ + Rat(r.m_) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.normalize();
    return r;
}

FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
    if (y.is_zero()) throw DivisionByZeroError("division by zero");
    return x * y.inv();
}

std::string FieldScalar::str() const {
    if (m_ == 0) return rat_str(a_);
    std::string im;
    if (b_ == 1)
        im = "i";
    else if (b_ == -1)
        im = "-i";
    else
        im = rat_str(b_) + "*i";
    if (a_ == 0) return im;
    if (b_ > 0) return rat_str(a_) + "+" + im;
    if (b_ == -1) return rat_str(a_) + "-i";
    return rat_str(a_) + im;  // rat_str of negative b starts with '-'
}

std::uint64_t FieldScalar::hash() const {
    auto h_rat = [](const Rat& r) {
        std::uint64_t h = 1469598103934665603ULL;
        h = hash_combine(h, mpz_get_ui(r.get_num_mpz_t()));
        h = hash_combine(h, mpz_get_ui(r.get_den_mpz_t()));
        h = hash_combine(h, static_cast<std::uint64_t>(mpz_sgn(r.get_num_mpz_t()) + 1));
        return h;
    };
    std::uint64_t h = h_rat(a_);
    h = hash_combine(h, h_rat(b_));
    h = hash_combine(h, static_cast<std::uint64_t>(m_));
    return h;
}

}  // namespace pvi
