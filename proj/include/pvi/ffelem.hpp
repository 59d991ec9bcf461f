#ifndef PVI_FFELEM_HPP
#define PVI_FFELEM_HPP

#include <array>
#include <memory>

#include "pvi/ratfun.hpp"

namespace pvi {

// Defining polynomials t1^2 = P1(s), t2^2 = P2(s); each nonzero and
// squarefree, P2 present only alongside P1.
class RadicalSet {
  public:
    RadicalSet() = default;                       // no radicals
    explicit RadicalSet(Poly1 p1);                // one radical
    RadicalSet(Poly1 p1, Poly1 p2);               // two radicals
    int count() const { return count_; }
    const Poly1& p1() const { return p1_; }
    const Poly1& p2() const { return p2_; }
    const Poly1& p(int i) const { return i == 0 ? p1_ : p2_; }
    bool operator==(const RadicalSet& o) const {
        return count_ == o.count_ && p1_ == o.p1_ && p2_ == o.p2_;
    }

  private:
    Poly1 p1_, p2_;
    int count_ = 0;
};

using RadicalSetPtr = std::shared_ptr<const RadicalSet>;

// Element c00 + c10 t1 + c01 t2 + c11 t1 t2 of Q(sqrt m)(s)[t1,t2]/(ti^2-Pi).
class FFElem {
  public:
    FFElem() : rad_(no_radicals()) {}
    explicit FFElem(RatFun c, RadicalSetPtr rad = no_radicals());
    explicit FFElem(const FieldScalar& c) : FFElem(RatFun(c)) {}
    FFElem(RadicalSetPtr rad, std::array<RatFun, 4> comps);

    static RadicalSetPtr no_radicals();
    static FFElem variable(RadicalSetPtr rad);          // s
    static FFElem radical(RadicalSetPtr rad, int i);    // t1 or t2

    const RadicalSetPtr& rad() const { return rad_; }
    const RatFun& c(int k) const { return c_[k]; }      // 0:1, 1:t1, 2:t2, 3:t1t2
    bool is_zero() const;
    bool is_rational() const;  // no radical components
    const RatFun& rational_part() const { return c_[0]; }

    FFElem operator-() const;
    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);
    FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
    FFElem& operator-=(const FFElem& b) { return *this = *this - b; }
    FFElem& operator*=(const FFElem& b) { return *this = *this * b; }
    bool operator==(const FFElem& b) const;
    bool operator!=(const FFElem& b) const { return !(*this == b); }

    FFElem inv() const;
    FFElem pow(long e) const;
    // formal d/ds with ti' = Pi'(s) ti / (2 Pi(s))
    FFElem d_ds() const;
    // t_i -> -t_i
    FFElem conj(int i) const;

    std::string str(const std::string& var = "s") const;
    std::uint64_t hash() const;

  private:
    RadicalSetPtr rad_;
    std::array<RatFun, 4> c_;
    static const RadicalSetPtr& check_same(const FFElem& a, const FFElem& b);
};

FFElem operator*(const FieldScalar& k, const FFElem& a);

}  // namespace pvi

#endif
