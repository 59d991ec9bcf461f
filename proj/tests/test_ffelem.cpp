#include <random>

#include "doctest.h"
#include "pvi/catalog.hpp"
#include "pvi/ffelem.hpp"
#include "pvi/parser.hpp"

using namespace pvi;

namespace {

std::mt19937_64 rng(424242);

RatFun rand_ratfun(int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::uniform_int_distribution<long> c(-6, 6);
    auto poly = [&](int deg) {
        std::vector<FieldScalar> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(Rat(c(rng)));
        return Poly1(std::move(v));
    };
    Poly1 num = poly(d(rng));
    Poly1 den;
    do {
        den = poly(d(rng));
    } while (den.is_zero());
    if (num.is_zero()) return RatFun();
    return RatFun(num, den);
}

RadicalSetPtr two_rads() {
    static RadicalSetPtr r = std::make_shared<RadicalSet>(
        parse_expr("s^3-2", FFElem::no_radicals()).rational_part().num(),
        parse_expr("s^2+s+1", FFElem::no_radicals()).rational_part().num());
    return r;
}

FFElem rand_ff(const RadicalSetPtr& rad) {
    std::array<RatFun, 4> c;
    int n = rad->count();
    c[0] = rand_ratfun(2);
    if (n >= 1) c[1] = rand_ratfun(2);
    if (n >= 2) {
        c[2] = rand_ratfun(1);
        c[3] = rand_ratfun(1);
    }
    return FFElem(rad, c);
}

}  // namespace

TEST_CASE("defining relations") {
    auto rad = two_rads();
    FFElem t1 = FFElem::radical(rad, 0);
    FFElem t2 = FFElem::radical(rad, 1);
    CHECK(t1 * t1 == FFElem(RatFun(rad->p1()), rad));
    CHECK(t2 * t2 == FFElem(RatFun(rad->p2()), rad));
    CHECK((t1 * t2) * (t1 * t2) == FFElem(RatFun(rad->p1() * rad->p2()), rad));

    // conjugate product (1/2 + R t)(1/2 - R t) = 1/4 - R^2 P
    RatFun R = rand_ratfun(2);
    FFElem half(RatFun(FieldScalar(Rat(1, 2))), rad);
    FFElem a = half + FFElem(R, rad) * t1;
    FFElem b = half - FFElem(R, rad) * t1;
    FFElem expect(RatFun(FieldScalar(Rat(1, 4))) - R * R * RatFun(rad->p1()), rad);
    CHECK(a * b == expect);
}

TEST_CASE("inverse formulas") {
    auto rad = two_rads();
    FFElem t1 = FFElem::radical(rad, 0);
    // inv(t) = t/P
    CHECK(t1.inv() == FFElem(RatFun(Poly1(FieldScalar(1)), rad->p1()), rad) * t1);
    // scalar inverse
    FFElem c(RatFun(FieldScalar(Rat(3, 7))), rad);
    CHECK(c.inv() == FFElem(RatFun(FieldScalar(Rat(7, 3))), rad));
    // mismatched radical sets refuse to combine
    auto other = std::make_shared<RadicalSet>(
        parse_expr("s^3-3", FFElem::no_radicals()).rational_part().num());
    CHECK_THROWS_AS(t1 * FFElem::radical(other, 0), FieldMismatchError);
    CHECK_THROWS_AS(FFElem(RatFun(), rad).inv(), DivisionByZeroError);
}

TEST_CASE("derivative of radicals: implicit differentiation") {
    // t^2 = s^3: t' = (3/(2s)) t
    auto rad = std::make_shared<RadicalSet>(
        parse_expr("s^3-2", FFElem::no_radicals()).rational_part().num());
    FFElem t = FFElem::radical(rad, 0);
    FFElem dt = t.d_ds();
    // dt = P'/(2P) t; oracle: 2 t dt = P'
    FFElem lhs = FFElem(RatFun(FieldScalar(2)), rad) * t * dt;
    CHECK(lhs == FFElem(RatFun(rad->p1().derivative()), rad));

    FFElem s2 = parse_expr("s^2", rad);
    CHECK(s2.d_ds() == parse_expr("2*s", rad));
}

TEST_CASE("product rule on R(s) t") {
    auto rad = std::make_shared<RadicalSet>(
        parse_expr("s*(2*s+1)*(5*s+16)", FFElem::no_radicals()).rational_part().num());
    FFElem t = FFElem::radical(rad, 0);
    RatFun R = rand_ratfun(3);
    FFElem e = FFElem(R, rad) * t;
    RatFun expect = R.derivative() + R * RatFun(rad->p1().derivative()) /
                                         (RatFun(FieldScalar(2)) * RatFun(rad->p1()));
    CHECK(e.d_ds() == FFElem(expect, rad) * t);
}

TEST_CASE("leibniz rule on randomized pairs (both radical counts)") {
    int cases = 0;
    for (int n = 1; n <= 2; ++n) {
        RadicalSetPtr rad =
            n == 1 ? std::make_shared<RadicalSet>(
                         parse_expr("s^3-2", FFElem::no_radicals()).rational_part().num())
                   : two_rads();
        for (int k = 0; k < 60; ++k) {
            FFElem a = rand_ff(rad), b = rand_ff(rad);
            CHECK((a * b).d_ds() == a.d_ds() * b + a * b.d_ds());
            ++cases;
        }
    }
    CHECK(cases >= 120);
}

TEST_CASE("inv is an involution on random nonzero elements") {
    auto rad = two_rads();
    int cases = 0;
    for (int k = 0; k < 60; ++k) {
        FFElem a = rand_ff(rad);
        if (a.is_zero()) continue;
        FFElem inv = a.inv();
        CHECK(a * inv == FFElem(RatFun(FieldScalar(1)), rad));
        CHECK(inv.inv() == a);
        ++cases;
    }
    CHECK(cases >= 50);
}

TEST_CASE("catalog radical squarefree certificates match genus bookkeeping") {
    // deg 3 or 4 -> g=1, 5 or 6 -> g=2, 7 or 8 -> g=3
    CHECK(hyperelliptic_genus(3) == 1);
    CHECK(hyperelliptic_genus(4) == 1);
    CHECK(hyperelliptic_genus(5) == 2);
    CHECK(hyperelliptic_genus(6) == 2);
    CHECK(hyperelliptic_genus(7) == 3);
    CHECK(hyperelliptic_genus(8) == 3);
    // non-squarefree radical rejected at construction
    Poly1 bad = parse_expr("s^2*(s+1)", FFElem::no_radicals()).rational_part().num();
    CHECK_THROWS_AS(RadicalSet{bad}, Error);
}
