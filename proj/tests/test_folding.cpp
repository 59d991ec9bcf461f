#include "doctest.h"
#include "pvi/catalog.hpp"
#include "pvi/folding.hpp"
#include "pvi/implicitize.hpp"
#include "pvi/residual.hpp"
#include "pvi/spacecurve.hpp"
#include "pvi/weierstrass.hpp"

using namespace pvi;

namespace {
const Catalog& cat() {
    static Catalog c = load_catalog(default_catalog_path());
    return c;
}
}  // namespace

TEST_CASE("quartic on O13 reaches the b=0 member of family IV") {
    ParamSolution q = apply_quartic(cat().by_id("O13").solution());
    CHECK(q.theta == ThetaQuadruple{Rat(1, 2), Rat(0), Rat(0), Rat(0)});
    CHECK(canonical_theta(q.theta) == canonical_theta(ThetaQuadruple{Rat(0), Rat(0), Rat(0), Rat(1, 2)}));
    CHECK(pvi_residual_is_zero(q));
    Poly2 qc = implicitize(q);
    Poly2 iv = implicitize(cat().by_id("IV").solution());
    bool matched = false;
    for (const auto& h : homography_table()) {
        ParamSolution aligned = apply_homography(h, q);
        if (aligned.theta == ThetaQuadruple{Rat(0), Rat(0), Rat(0), Rat(1, 2)}) {
            if (implicitize(aligned) == iv) matched = true;
        }
    }
    CHECK(matched);
}

TEST_CASE("quartic on O12 lands on I41's theta class") {
    ParamSolution q = apply_quartic(cat().by_id("O12").solution());
    CHECK(q.theta == ThetaQuadruple{Rat(1, 3), Rat(0), Rat(0), Rat(0)});
    CHECK(canonical_theta(q.theta) ==
          canonical_theta(cat().by_id("I41").solution().theta));
    CHECK(pvi_residual_probably_zero(q, 1));
}

TEST_CASE("quartic rejects u = x (indeterminacy locus)") {
    ParamSolution s;
    s.id = "synthetic";
    s.theta = ThetaQuadruple{Rat(1, 8), Rat(1, 8), Rat(1, 8), Rat(1, 8)};
    s.x = parse_expr("s^2", FFElem::no_radicals());
    s.u = parse_expr("s^2", FFElem::no_radicals());
    CHECK_THROWS_AS(apply_quartic(s), DegenerateError);
    ParamSolution t = cat().by_id("I21").solution();
    CHECK_THROWS_AS(apply_quartic(t), DegenerateError);  // unequal theta entries
}

TEST_CASE("numeric folding: T06 against family III at a=0") {
    Poly2 third = implicitize(cat().by_id("III").solution());
    FoldReport rep = fold_point_check(cat().by_id("T06").solution(), third, 20, 256);
    CHECK(rep.theta_pattern_ok);
    CHECK(rep.pass);
    CHECK(rep.samples.size() == 20);
    for (const auto& s : rep.samples) CHECK(s.log10_min_abs < -64.0);
}

TEST_CASE("numeric folding: O10 against family IV") {
    Poly2 four = implicitize(cat().by_id("IV").solution());
    FoldReport rep = fold_point_check(cat().by_id("O10").solution(), four, 8, 256);
    CHECK(rep.pass);
}

TEST_CASE("numeric folding negative control fails") {
    Poly2 two = implicitize(cat().by_id("II").solution());
    FoldReport rep = fold_point_check(cat().by_id("T06").solution(), two, 8, 256);
    CHECK(!rep.pass);
}

TEST_CASE("weierstrass constants") {
    auto r36 = weierstrass_consistency(cat().by_id("I36"));
    CHECK(r36.pass);
    CHECK(r36.g2 == Rat(-7788));
    CHECK(r36.g3 == Rat(432856));
    // the published values follow the opposite sign convention; flagged
    CHECK(r36.convention_flipped);

    auto r43 = weierstrass_consistency(cat().by_id("I43"));
    CHECK(r43.pass);
    CHECK(r43.g2 == Rat(-7788));
    CHECK(r43.g3 == Rat(432856));

    // perturbed g3 must fail
    CatalogEntry bad = cat().by_id("I36");
    bad.weierstrass->g3 += 1;
    auto rbad = weierstrass_consistency(bad);
    CHECK(!rbad.pass);
    CHECK(!rbad.residual.empty());

    // entries without published invariants get them derived
    auto r27 = weierstrass_consistency(cat().by_id("I27"));
    CHECK(r27.pass);
    auto r41 = weierstrass_consistency(cat().by_id("I41"));
    CHECK(r41.pass);
}

TEST_CASE("space-curve identities for the non-hyperelliptic entries") {
    auto r50 = space_curve_identities(cat().by_id("I50"));
    CHECK(r50.pass);
    auto r51 = space_curve_identities(cat().by_id("I51"));
    CHECK(r51.pass);
    auto r52 = space_curve_identities(cat().by_id("I52"));
    CHECK(r52.pass);
    CHECK(r52.aux_ok);

    // radical sign flip is tolerated (only squares enter)
    CatalogEntry flipped = cat().by_id("I50");
    flipped.space_curve->t2_expr = "-(" + flipped.space_curve->t2_expr + ")";
    CHECK(space_curve_identities(flipped).pass);

    // negative control: perturb the relation
    CatalogEntry bad = cat().by_id("I50");
    bad.space_curve->relation = "5*(p^4+q^4)+6*(p^2*q^2+p^2+q^2)+2";
    CHECK(!space_curve_identities(bad).pass);
}
