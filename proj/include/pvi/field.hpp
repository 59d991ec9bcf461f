#ifndef PVI_FIELD_HPP
#define PVI_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pvi/util.hpp"

namespace pvi {

using Int = mpz_class;
using Rat = mpq_class;

Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& r);

// Element a + b*sqrt(m) of Q or of the quadratic extension Q(sqrt(m)).
// m = 0 tags a plain rational; the catalog only ever needs m = -1 (the
// number i), but the arithmetic is generic.  Values with distinct nonzero
// m tags refuse to combine.  b == 0 collapses the tag back to 0 so that
// equality is plain structural comparison.
class FieldScalar {
  public:
    FieldScalar() : m_(0) {}
    FieldScalar(long n) : a_(n), m_(0) {}
    FieldScalar(const Int& n) : a_(n), m_(0) {}
    FieldScalar(const Rat& a) : a_(a), m_(0) { a_.canonicalize(); }
    FieldScalar(Rat a, Rat b, long m);

    static FieldScalar i() { return FieldScalar(Rat(0), Rat(1), -1); }
    static FieldScalar sqrt_m(long m) { return FieldScalar(Rat(0), Rat(1), m); }

    const Rat& re() const { return a_; }
    const Rat& im() const { return b_; }
    long m() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }
    bool is_rational() const { return m_ == 0; }

    FieldScalar operator-() const;
    FieldScalar conj() const;
    // a^2 - m b^2, an element of Q.
    Rat norm() const;
    FieldScalar inv() const;

    friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y);
    friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y);
    friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y);
    friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y);
    FieldScalar& operator+=(const FieldScalar& y) { return *this = *this + y; }
    FieldScalar& operator-=(const FieldScalar& y) { return *this = *this - y; }
    FieldScalar& operator*=(const FieldScalar& y) { return *this = *this * y; }
    FieldScalar& operator/=(const FieldScalar& y) { return *this = *this / y; }

    bool operator==(const FieldScalar& y) const {
        return m_ == y.m_ && a_ == y.a_ && b_ == y.b_;
    }
    bool operator!=(const FieldScalar& y) const { return !(*this == y); }

    // Text form "p/q" or "p/q+r/s*i" (the catalog grammar re-parses it).
    std::string str() const;

    std::uint64_t hash() const;

  private:
    Rat a_, b_;
    long m_;
    void normalize();
    static long join_tags(const FieldScalar& x, const FieldScalar& y);
};

}  // namespace pvi

#endif
