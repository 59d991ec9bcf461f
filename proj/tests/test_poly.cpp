#include <random>

#include "doctest.h"
#include "pvi/modular.hpp"
#include "pvi/parser.hpp"
#include "pvi/poly2.hpp"
#include "pvi/prs.hpp"

using namespace pvi;

namespace {

std::mt19937_64 rng(777);

Poly1 rand_poly(int maxdeg, long m = 0) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::uniform_int_distribution<long> c(-9, 9);
    int deg = d(rng);
    std::vector<FieldScalar> v;
    for (int i = 0; i <= deg; ++i) {
        if (m == 0)
            v.emplace_back(Rat(c(rng)));
        else
            v.emplace_back(Rat(c(rng)), Rat(c(rng)), m);
    }
    return Poly1(std::move(v));
}

Poly1 parse_p(const std::string& s) {
    FFElem e = parse_expr(s, FFElem::no_radicals());
    REQUIRE(e.rational_part().is_polynomial());
    Poly1 num = e.rational_part().num();
    return num * e.rational_part().den().lc().inv();
}

}  // namespace

TEST_CASE("gcd examples") {
    Poly1 a = parse_p("s^2-1");
    Poly1 b = parse_p("s-1");
    CHECK(gcd1(a, b) == parse_p("s-1"));

    // factors of a published elliptic radical
    Poly1 big = parse_p("s*(2*s+1)*(5*s+16)");
    Poly1 small = parse_p("s*(2*s+1)");
    CHECK(gcd1(big, small) == parse_p("s^2+1/2*s").make_monic());

    // cubic radical is squarefree: gcd(P,P') = 1, cross-checked by its
    // discriminant being nonzero
    Poly1 p41 = parse_p("s*(8*s^2-11*s+8)");
    CHECK(gcd1(p41, p41.derivative()).deg() == 0);
    CHECK(discriminant1(p41) != FieldScalar(0));
    CHECK(is_squarefree(p41));
}

TEST_CASE("gcd with zero returns the other argument normalized") {
    Poly1 a = parse_p("3*s^2-3");
    CHECK(gcd1(a, Poly1()) == a.make_monic());
    CHECK(gcd1(Poly1(), a) == a.make_monic());
}

TEST_CASE("random gcd agreement: (fg, hg) share g") {
    for (int k = 0; k < 40; ++k) {
        Poly1 f = rand_poly(4), h = rand_poly(4), g = rand_poly(3);
        if (f.is_zero() || h.is_zero() || g.is_zero()) continue;
        Poly1 G = gcd1(f * g, h * g);
        // g | G
        auto [q, r] = divrem(G, g.make_monic());
        CHECK(r.is_zero());
        // G | fg and G | hg
        CHECK(divrem(f * g, G).second.is_zero());
        CHECK(divrem(h * g, G).second.is_zero());
    }
}

TEST_CASE("gaussian-coefficient gcd") {
    for (int k = 0; k < 20; ++k) {
        Poly1 f = rand_poly(3, -1), g = rand_poly(2, -1);
        if (f.is_zero() || g.is_zero()) continue;
        Poly1 G = gcd1(f * g, g);
        CHECK(divrem(g, G).second.is_zero());
    }
}

TEST_CASE("large-degree modular gcd path") {
    Poly1 f = rand_poly(3), g = parse_p("s^30-s^7+12");
    Poly1 a = f * g, b = rand_poly(4) * g;
    if (!f.is_zero() && !b.is_zero()) {
        Poly1 G = gcd1(a, b);
        CHECK(divrem(a, G).second.is_zero());
        CHECK(divrem(b, G).second.is_zero());
        CHECK(divrem(G, g.make_monic()).second.is_zero());
    }
}

TEST_CASE("resultant against sylvester oracle (degree <= 6)") {
    for (int k = 0; k < 30; ++k) {
        Poly1 a = rand_poly(5), b = rand_poly(5);
        if (a.is_zero() || b.is_zero()) continue;
        if (a.deg() < 1 || b.deg() < 1) continue;
        // embed as PolyS with constant Poly2 coefficients
        PolyS A, B;
        for (const auto& c : a.coeffs()) A.push_back(Poly2::constant(c));
        for (const auto& c : b.coeffs()) B.push_back(Poly2::constant(c));
        Poly2 det = resultant_s_sylvester(A, B);
        FieldScalar r = resultant1(a, b);
        CHECK(det.eval(FieldScalar(0), FieldScalar(0)) == r);
    }
}

TEST_CASE("resultant_s examples") {
    // Res_s(s - u, s^2 - x) = u^2 - x
    PolyS A{Poly2::term(1, 0, FieldScalar(-1)), Poly2::constant(FieldScalar(1))};
    PolyS B{Poly2::term(0, 1, FieldScalar(-1)), Poly2(), Poly2::constant(FieldScalar(1))};
    Poly2 r = resultant_s(A, B);
    Poly2 expect = Poly2::term(2, 0, FieldScalar(1)) - Poly2::term(0, 1, FieldScalar(1));
    CHECK((r == expect || r == -expect));

    // Res_s(s - u, s^3 - x(3s - 2)) = +-(u^3 - 3xu + 2x)
    PolyS C{Poly2::term(0, 1, FieldScalar(2)), Poly2::term(0, 1, FieldScalar(-3)), Poly2(),
            Poly2::constant(FieldScalar(1))};
    Poly2 r2 = resultant_s(A, C);
    Poly2 e2 = Poly2::term(3, 0, FieldScalar(1)) + Poly2::term(1, 1, FieldScalar(-3)) +
               Poly2::term(0, 1, FieldScalar(2));
    CHECK((r2 == e2 || r2 == -e2));

    // equal arguments: zero
    Poly2Ring ring;
    std::vector<Poly2> AA = A;
    CHECK(prs_resultant<Poly2Ring>(AA, AA, ring).is_zero());
}

TEST_CASE("resultant_s swap sign rule") {
    for (int k = 0; k < 10; ++k) {
        Poly1 a = rand_poly(4), b = rand_poly(3);
        if (a.deg() < 1 || b.deg() < 1) continue;
        PolyS A, B;
        for (const auto& c : a.coeffs()) A.push_back(Poly2::constant(c));
        for (const auto& c : b.coeffs()) B.push_back(Poly2::constant(c));
        Poly2Ring ring;
        auto Av = A, Bv = B;
        Poly2 r1 = prs_resultant<Poly2Ring>(Av, Bv, ring);
        Av = A;
        Bv = B;
        Poly2 r2 = prs_resultant<Poly2Ring>(Bv, Av, ring);
        Poly2 expect = ((a.deg() * b.deg()) % 2) ? -r2 : r2;
        CHECK(r1 == expect);
    }
}

TEST_CASE("poly2 arithmetic and stats") {
    FFElem u = parse_expr("1", FFElem::no_radicals());
    Poly2 p = Poly2::term(5, 0, FieldScalar(1)) + Poly2::term(3, 1, FieldScalar(-5)) +
              Poly2::term(2, 1, FieldScalar(5)) + Poly2::term(0, 2, FieldScalar(-1));
    CurveStats st = curve_stats(p);
    CHECK(st.b == 5);
    CHECK(st.d == 5);
    CHECK(st.terms == 4);
    CHECK(st.monic_in_u);

    Poly2 q = p * p;
    CHECK(q.deg_u() == 10);
    CHECK(Poly2::exact_div(q, p) == p);
}

TEST_CASE("modular kernels") {
    using namespace modp;
    u64 p = PRIMES62[0];
    CHECK(p % 4 == 1);
    u64 r = sqrt_minus1(p);
    CHECK(mulm(r, r, p) == p - 1);

    // resultant mod p agrees with exact resultant
    for (int k = 0; k < 20; ++k) {
        Poly1 a = rand_poly(5), b = rand_poly(4);
        if (a.deg() < 1 || b.deg() < 1) continue;
        FieldScalar re = resultant1(a, b);
        Reducer red(p);
        auto A = red.poly(a.coeffs());
        auto B = red.poly(b.coeffs());
        REQUIRE(A);
        REQUIRE(B);
        u64 rm = resultantp(*A, *B, p);
        auto rexp = red.scalar(re);
        REQUIRE(rexp);
        CHECK(rm == *rexp);
    }

    // interpolation round-trip
    std::vector<u64> xs{1, 2, 3, 4, 5}, ys;
    PolyP f{3, 0, 7, 2};  // 3 + 7 s^2 + 2 s^3
    for (u64 x : xs) ys.push_back(evalp(f, x, p));
    CHECK(interpolate(xs, ys, p) == f);
}

TEST_CASE("parser basics") {
    FFElem e = parse_expr("(3*s-8)^4/(s^4*(s-3)^2)", FFElem::no_radicals());
    CHECK(e.is_rational());
    CHECK(e.rational_part().num().deg() == 4);
    CHECK(e.rational_part().den().deg() == 6);

    CHECK_THROWS_AS(parse_expr("s^", FFElem::no_radicals()), ParseError);
    try {
        parse_expr("s^", FFElem::no_radicals());
    } catch (const ParseError& pe) {
        CHECK(pe.offset == 2);
    }
    CHECK_THROWS_AS(parse_expr("q+1", FFElem::no_radicals()), ParseError);
    CHECK_THROWS_AS(parse_expr("s^999999999", FFElem::no_radicals()), ParseError);
    CHECK_THROWS_AS(parse_expr("2 s", FFElem::no_radicals()), ParseError);
}

TEST_CASE("linform parsing") {
    LinForm f = parse_linform("2*a");
    CHECK(f.ca == 2);
    CHECK(f.c0 == 0);
    LinForm g = parse_linform("1/3");
    CHECK(g.c0 == Rat(1, 3));
    LinForm h = parse_linform("(1-b)/2");
    CHECK(h.c0 == Rat(1, 2));
    CHECK(h.cb == Rat(-1, 2));
}
