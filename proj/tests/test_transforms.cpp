#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "pvi/catalog.hpp"
#include "pvi/homography.hpp"
#include "pvi/okamoto.hpp"
#include "pvi/residual.hpp"

using namespace pvi;

namespace {
const Catalog& cat() {
    static Catalog c = load_catalog(default_catalog_path());
    return c;
}

// functional composition check on exact rational points
std::pair<FieldScalar, FieldScalar> apply_point(const Homography& h, const FieldScalar& u,
                                                const FieldScalar& x) {
    // forward maps give old (u,x) from new (U,X); the solution transform uses
    // the inverse, so evaluate that: X = (d x - b)/(-c x + a)
    FieldScalar X = (FieldScalar(h.xm[3]) * x - FieldScalar(h.xm[1])) /
                    (FieldScalar(h.xm[0]) - FieldScalar(h.xm[2]) * x);
    auto lin = [&](const std::array<long, 2>& c) {
        return FieldScalar(c[0]) + FieldScalar(c[1]) * X;
    };
    FieldScalar U = (lin(h.um[3]) * u - lin(h.um[1])) / (lin(h.um[0]) - lin(h.um[2]) * u);
    return {U, X};
}
}  // namespace

TEST_CASE("24 homographies close into a group with matching orders") {
    CHECK(homography_group_closes());
    const auto& tab = homography_table();
    CHECK(tab.size() == 24);
    // orders from the table match functional orders
    std::vector<std::pair<FieldScalar, FieldScalar>> pts = {
        {FieldScalar(Rat(3, 7)), FieldScalar(Rat(22, 5))},
        {FieldScalar(Rat(-4, 3)), FieldScalar(Rat(9, 11))},
        {FieldScalar(Rat(15, 2)), FieldScalar(Rat(-8, 3))}};
    for (const auto& h : tab) {
        for (auto [u0, x0] : pts) {
            auto [u, x] = apply_point(h, u0, x0);
            int k = 1;
            while (!(u == u0 && x == x0) && k <= 5) {
                std::tie(u, x) = apply_point(h, u, x);
                ++k;
            }
            CHECK(k == h.order);
        }
    }
    // functional closure agrees with the permutation product
    for (const auto& a : tab) {
        for (const auto& b : tab) {
            int c = compose_homographies(a.num, b.num);
            const Homography& hc = homography(c);
            for (auto [u0, x0] : pts) {
                auto [u1, x1] = apply_point(a, u0, x0);
                auto [u2, x2] = apply_point(b, u1, x1);
                auto [u3, x3] = apply_point(hc, u0, x0);
                CHECK(u2 == u3);
                CHECK(x2 == x3);
            }
        }
    }
}

TEST_CASE("homography inverse") {
    for (const auto& h : homography_table()) {
        int inv = homography_inverse(h.num);
        CHECK(compose_homographies(h.num, inv) == 1);
        CHECK(compose_homographies(inv, h.num) == 1);
    }
}

TEST_CASE("identity homography leaves solutions unchanged") {
    const auto& e = cat().by_id("I21");
    ParamSolution s = e.solution();
    ParamSolution t = apply_homography(homography(1), s);
    CHECK(t.x == s.x);
    CHECK(t.u == s.u);
    CHECK(t.theta == s.theta);
}

TEST_CASE("h8 swaps the first two theta slots (I21 fixed)") {
    const auto& e = cat().by_id("I21");
    ParamSolution s = e.solution();
    ParamSolution t = apply_homography(homography(8), s);
    CHECK(t.theta == s.theta);  // (0,0,1/5,2/5) swap of equal values
    CHECK(pvi_residual_is_zero(t));
}

TEST_CASE("apply_homography preserves the residual with permuted theta") {
    for (const char* id : {"II", "I21", "K"}) {
        const auto& e = cat().by_id(id);
        ParamSolution s = e.solution();
        for (const auto& h : homography_table()) {
            ParamSolution t = apply_homography(h, s);
            CHECK_MESSAGE(pvi_residual_probably_zero(t, 1), id, " h", h.num);
        }
    }
}

TEST_CASE("exact residual preserved for all 24 homographies on II") {
    const auto& e = cat().by_id("II");
    ParamSolution s = e.solution();
    for (const auto& h : homography_table()) {
        ParamSolution t = apply_homography(h, s);
        CHECK_MESSAGE(pvi_residual_is_zero(t), "h", h.num);
    }
}

TEST_CASE("okamoto on family II: u=s, x=s^2 maps to U=-s") {
    ParamSolution s = cat().by_id("II").solution();  // (a,b) = (1/3, 1/5)
    ParamSolution t = okamoto_apply(s);
    CHECK(t.theta == ThetaQuadruple{Rat(3, 10), Rat(3, 10), Rat(1, 6), Rat(1, 6)});
    FFElem minus_s = parse_expr("-s", FFElem::no_radicals());
    CHECK(t.u == minus_s);
    CHECK(t.x == s.x);
    CHECK(pvi_residual_is_zero(t));
}

TEST_CASE("okamoto twice returns the original solution data") {
    for (const char* id : {"I21", "K", "I20"}) {
        ParamSolution s = cat().by_id(id).solution();
        ParamSolution t = okamoto_apply(okamoto_apply(s));
        CHECK(t.theta == s.theta);
        CHECK(t.u == s.u);
        CHECK(t.x == s.x);
    }
}

TEST_CASE("okamoto preserves the residual on genus-1 entries") {
    for (const char* id : {"I27", "I36"}) {
        ParamSolution s = cat().by_id(id).solution();
        ParamSolution t = okamoto_apply(s);
        CHECK(pvi_residual_probably_zero(t, 1));
    }
}

TEST_CASE("okamoto fixed locus rejected") {
    ParamSolution s = cat().by_id("II").solution(false, Rat(1, 4), Rat(1, 4));
    // theta = (1/4,1/4,1/4,1/4): sum = 1 -> N = 0
    CHECK_THROWS_AS(okamoto_apply(s), DegenerateError);
}
