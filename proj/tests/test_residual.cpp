#include "doctest.h"
#include "pvi/parser.hpp"
#include "pvi/residual.hpp"

using namespace pvi;

namespace {

ParamSolution make_sol(const std::string& id, ThetaQuadruple th, const std::string& xs,
                       const std::string& us, RadicalSetPtr rad = FFElem::no_radicals()) {
    ParamSolution s;
    s.id = id;
    s.theta = th;
    s.x = parse_expr(xs, rad);
    s.u = parse_expr(us, rad);
    return s;
}

}  // namespace

TEST_CASE("family II solves PVI at two rational samples") {
    for (auto [a, b] : {std::pair{Rat(1, 3), Rat(1, 5)}, std::pair{Rat(2, 7), Rat(3, 11)}}) {
        ParamSolution s = make_sol("II", {a, a, b, b}, "s^2", "s");
        CHECK(pvi_residual_is_zero(s));
    }
}

TEST_CASE("families III and IV solve PVI") {
    for (Rat a : {Rat(1, 3), Rat(2, 7)}) {
        ParamSolution s = make_sol("III", {a, 2 * a, a, Rat(1, 3)}, "s^3/(3*s-2)", "s");
        CHECK(pvi_residual_is_zero(s));
    }
    for (Rat b : {Rat(1, 5), Rat(3, 11)}) {
        ParamSolution s =
            make_sol("IV", {b, b, b, Rat(1, 2)}, "-s^2*(s^2-2*s)/(2*s-1)", "s");
        CHECK(pvi_residual_is_zero(s));
    }
}

TEST_CASE("I21 genus-0 representative") {
    ParamSolution s = make_sol("I21", {Rat(0), Rat(0), Rat(1, 5), Rat(2, 5)},
                               "(3*s-1)^2*(s+3)^3/(8*s^3*(s+5)^2)",
                               "(s+3)*(3*s-1)/(2*s*(s+5))");
    CHECK(pvi_residual_probably_zero(s));
    CHECK(pvi_residual_is_zero(s));
}

TEST_CASE("wrong theta breaks the residual") {
    ParamSolution s = make_sol("I21-bad", {Rat(1, 5), Rat(0), Rat(1, 5), Rat(2, 5)},
                               "(3*s-1)^2*(s+3)^3/(8*s^3*(s+5)^2)",
                               "(s+3)*(3*s-1)/(2*s*(s+5))");
    CHECK(!pvi_residual_probably_zero(s));
    CHECK(!pvi_residual_is_zero(s));
}

TEST_CASE("residual invariant under all 16 sign flips, literally") {
    ParamSolution s = make_sol("I21", {Rat(0), Rat(0), Rat(1, 5), Rat(2, 5)},
                               "(3*s-1)^2*(s+3)^3/(8*s^3*(s+5)^2)",
                               "(s+3)*(3*s-1)/(2*s*(s+5))");
    FFElem base = pvi_residual(s);
    for (unsigned code = 0; code < 16; ++code) {
        ParamSolution f = s;
        f.theta = sign_change(SignMask::from_code(code), s.theta);
        CHECK(pvi_residual(f) == base);
    }
}

TEST_CASE("I27 genus-1 representative (rescaled radical)") {
    // t^2 = s(2s+1)(5s+16)/36 rescaled by t -> 6t
    auto rad = std::make_shared<RadicalSet>(
        parse_expr("s*(2*s+1)*(5*s+16)", FFElem::no_radicals()).rational_part().num());
    ParamSolution s = make_sol(
        "I27", {Rat(1, 15), Rat(2, 15), Rat(2, 15), Rat(2, 15)},
        "1/2-(25*s^4-40*s^3-84*s^2-136*s-8)/(432*s*(2*s+1)^2)*t",
        "1/2+(5*s^2+2*s+2)/(36*s*(2*s+1))*t", rad);
    CHECK(pvi_residual_probably_zero(s));
    FFElem r = pvi_residual(s);
    // genus-1 residual: every component vanishes, not merely the norm
    CHECK(r.c(0).is_zero());
    CHECK(r.c(1).is_zero());
    CHECK(r.is_zero());
}

TEST_CASE("degenerate parametrizations are rejected") {
    ParamSolution s = make_sol("const-x", {Rat(0), Rat(0), Rat(0), Rat(0)}, "3", "s");
    CHECK_THROWS_AS(pvi_residual(s), DegenerateError);
    ParamSolution t = make_sol("u-eq-x", {Rat(0), Rat(0), Rat(0), Rat(0)}, "s^2", "s^2");
    CHECK_THROWS_AS(pvi_residual(t), DegenerateError);
}
