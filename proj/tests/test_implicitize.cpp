#include "doctest.h"
#include "pvi/catalog.hpp"
#include "pvi/implicitize.hpp"
#include "pvi/okamoto.hpp"
#include "pvi/residual.hpp"

using namespace pvi;

namespace {
const Catalog& cat() {
    static Catalog c = load_catalog(default_catalog_path());
    return c;
}

Poly2 pcurve(const std::string& text) {
    FFElem e = parse_expr(text, FFElem::no_radicals());
    // parse a (u,x) polynomial written with symbols v (for u) not needed:
    // instead build by direct term entry in tests
    (void)e;
    return Poly2();
}
}  // namespace

TEST_CASE("II implicitizes to u^2 - x") {
    Poly2 c = implicitize(cat().by_id("II").solution());
    Poly2 expect = Poly2::term(2, 0, FieldScalar(1)) - Poly2::term(0, 1, FieldScalar(1));
    CHECK(c == expect);
}

TEST_CASE("III implicitizes to u^3 - 3xu + 2x") {
    Poly2 c = implicitize(cat().by_id("III").solution());
    Poly2 expect = Poly2::term(3, 0, FieldScalar(1)) + Poly2::term(1, 1, FieldScalar(-3)) +
                   Poly2::term(0, 1, FieldScalar(2));
    CHECK(c == expect);
}

TEST_CASE("IV implicitizes to u^4 - 2u^3 + 2xu - x") {
    Poly2 c = implicitize(cat().by_id("IV").solution());
    Poly2 expect = Poly2::term(4, 0, FieldScalar(1)) + Poly2::term(3, 0, FieldScalar(-2)) +
                   Poly2::term(1, 1, FieldScalar(2)) + Poly2::term(0, 1, FieldScalar(-1));
    CHECK(c == expect);
}

TEST_CASE("I21 minimal form: u^5 - 5xu^3 + 5xu^2 - x^2, b=d=5, 4 terms") {
    Poly2 c = implicitize(cat().by_id("I21").solution());
    Poly2 expect = Poly2::term(5, 0, FieldScalar(1)) + Poly2::term(3, 1, FieldScalar(-5)) +
                   Poly2::term(2, 1, FieldScalar(5)) + Poly2::term(0, 2, FieldScalar(-1));
    CHECK(c == expect);
    CurveStats st = curve_stats(c);
    CHECK(st.b == 5);
    CHECK(st.d == 5);
    CHECK(st.terms == 4);
}

TEST_CASE("membership certificate holds and fails correctly") {
    const auto& e = cat().by_id("I21");
    Poly2 c = implicitize(e.solution());
    CHECK(curve_vanishes_on(c, e.solution()));
    Poly2 wrong = c + Poly2::term(0, 0, FieldScalar(1));
    CHECK(!curve_vanishes_on(wrong, e.solution()));
}

TEST_CASE("genus-0 exact-tier stats reproduce the reference table") {
    struct Row {
        const char* id;
        int b, dmb, terms;
    };
    for (const Row& r : {Row{"I20", 5, 0, 7}, Row{"O08", 6, 0, 5}, Row{"I23", 6, 0, 8},
                         Row{"I22", 6, 0, 7}, Row{"K", 7, 1, 12}, Row{"T06", 6, 0, 6},
                         Row{"O07", 6, 0, 8}}) {
        Poly2 c = implicitize(cat().by_id(r.id).solution());
        CurveStats st = curve_stats(c);
        CHECK_MESSAGE(st.b == r.b, r.id);
        CHECK_MESSAGE(st.d - st.b == r.dmb, r.id);
        CHECK_MESSAGE(st.terms == r.terms, r.id);
    }
}

TEST_CASE("I27 genus-1 exact implicitization") {
    Poly2 c = implicitize(cat().by_id("I27").solution());
    CurveStats st = curve_stats(c);
    CHECK(st.b == 9);
    CHECK(st.d == 9);
    CHECK(st.terms == 15);
    CHECK(curve_vanishes_on(c, cat().by_id("I27").solution()));
}

TEST_CASE("I29 is the one non-monic genus-0 entry") {
    Poly2 c = implicitize(cat().by_id("I29").solution());
    CurveStats st = curve_stats(c);
    CHECK(st.b == 10);
    CHECK(!st.monic_in_u);
    Poly2 c30 = implicitize(cat().by_id("I30").solution());
    CHECK(curve_stats(c30).monic_in_u);
}

TEST_CASE("modular stats agree with exact on small entries") {
    for (const char* id : {"II", "III", "IV", "I21", "K", "I22", "I23", "O08"}) {
        Poly2 c = implicitize(cat().by_id(id).solution());
        ModStats ms = modular_curve_stats(cat().by_id(id).solution());
        CHECK_MESSAGE(ms.b == c.deg_u(), id);
        CHECK_MESSAGE(ms.d == c.total_deg(), id);
        CHECK_MESSAGE(ms.terms == static_cast<int>(c.term_count()), id);
    }
}

TEST_CASE("invariance columns: I21 under h8, K under its five") {
    Poly2 c21 = implicitize(cat().by_id("I21").solution());
    CHECK(invariance_check(c21, homography(8)));
    CHECK(!invariance_check(c21, homography(3)));

    Poly2 cK = implicitize(cat().by_id("K").solution());
    for (int h : {6, 8, 10, 19, 23}) CHECK_MESSAGE(invariance_check(cK, homography(h)), h);
    for (int h : {2, 3, 4, 5}) CHECK(!invariance_check(cK, homography(h)));
}

TEST_CASE("worked-example chain: okamoto + h23 reaches the published 12-term form") {
    // catalog I21 (0,0,1,2)/5 --okamoto--> (1,1,2,3)/5 --h23--> (3,1,2,1)/5
    ParamSolution s = cat().by_id("I21").solution();
    ParamSolution t = okamoto_apply(s);
    CHECK(t.theta == ThetaQuadruple{Rat(1, 5), Rat(1, 5), Rat(2, 5), Rat(3, 5)});
    ParamSolution w = apply_homography(homography(23), t);
    CHECK(w.theta == ThetaQuadruple{Rat(3, 5), Rat(1, 5), Rat(2, 5), Rat(1, 5)});
    CHECK(pvi_residual_is_zero(w));
    Poly2 c = implicitize(w);
    CurveStats st = curve_stats(c);
    CHECK(st.b == 5);
    CHECK(st.d == 6);
    CHECK(st.terms == 12);
    // the 12-term polynomial (exact computation; the published display has a
    // digit slip in the u^2 x^2 coefficient, -15 not -45 -- the sibling
    // representative below pins the chain against the literature exactly)
    Poly2 expect;
    expect += Poly2::term(5, 0, FieldScalar(18)) + Poly2::term(5, 1, FieldScalar(-9));
    expect += Poly2::term(4, 1, FieldScalar(15)) + Poly2::term(4, 0, FieldScalar(-60));
    expect += Poly2::term(3, 0, FieldScalar(50)) + Poly2::term(3, 2, FieldScalar(-5)) +
              Poly2::term(3, 1, FieldScalar(45));
    expect += Poly2::term(2, 1, FieldScalar(-75)) + Poly2::term(2, 2, FieldScalar(-15));
    expect += Poly2::term(1, 2, FieldScalar(45));
    expect += Poly2::term(0, 2, FieldScalar(-1)) + Poly2::term(0, 3, FieldScalar(-8));
    CHECK(c == normalize_curve(expect));
    // the intermediate representative (1,1,2,3)/5 matches its published
    // 10-term display verbatim
    Poly2 mid = implicitize(t);
    Poly2 eMid;
    eMid += Poly2::term(5, 1, FieldScalar(9)) + Poly2::term(5, 0, FieldScalar(-8));
    eMid += Poly2::term(4, 1, FieldScalar(-5));
    eMid += Poly2::term(3, 2, FieldScalar(-5)) + Poly2::term(3, 1, FieldScalar(15));
    eMid += Poly2::term(2, 2, FieldScalar(-15)) + Poly2::term(2, 1, FieldScalar(5));
    eMid += Poly2::term(1, 2, FieldScalar(5));
    eMid += Poly2::term(0, 2, FieldScalar(-9)) + Poly2::term(0, 3, FieldScalar(8));
    CHECK(mid == normalize_curve(eMid));
}

TEST_CASE("b is invariant under all 24 homographies on II, I21, K") {
    for (const char* id : {"II", "I21", "K"}) {
        ParamSolution s = cat().by_id(id).solution();
        int b0 = implicitize(s).deg_u();
        for (const auto& h : homography_table()) {
            ParamSolution t = apply_homography(h, s);
            ModStats ms = modular_curve_stats(t);
            CHECK_MESSAGE(ms.b == b0, id, " h", h.num);
        }
    }
}
