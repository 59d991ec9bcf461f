#include <random>

#include "doctest.h"
#include "pvi/field.hpp"
#include "pvi/theta.hpp"

using namespace pvi;

namespace {

std::mt19937_64 rng(20240817);

Rat rand_rat() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

FieldScalar rand_scalar(long m) {
    if (m == 0) return FieldScalar(rand_rat());
    return FieldScalar(rand_rat(), rand_rat(), m);
}

}  // namespace

TEST_CASE("gaussian norm and conjugate division") {
    FieldScalar one_plus_i(Rat(1), Rat(1), -1);
    FieldScalar one_minus_i(Rat(1), Rat(-1), -1);
    CHECK(one_plus_i * one_minus_i == FieldScalar(2));
    CHECK(FieldScalar(1) / one_plus_i == FieldScalar(Rat(1, 2), Rat(-1, 2), -1));
}

TEST_CASE("rational addition stays reduced") {
    // 3/14 + 7/14 = 10/14, reduced
    CHECK(FieldScalar(Rat(3, 14)) + FieldScalar(Rat(7, 14)) == FieldScalar(Rat(5, 7)));
    CHECK((FieldScalar(Rat(3, 14)) + FieldScalar(Rat(7, 14))).re().get_den() == 7);
}

TEST_CASE("division by zero and mixed extensions are rejected") {
    CHECK_THROWS_AS(FieldScalar(1) / FieldScalar(0), DivisionByZeroError);
    FieldScalar a(Rat(1), Rat(1), -1), b(Rat(1), Rat(1), 5);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
    CHECK_THROWS_AS(a * b, FieldMismatchError);
}

TEST_CASE("field axioms on randomized triples") {
    int cases = 0;
    for (long m : {0L, -1L, 5L}) {
        for (int k = 0; k < 60; ++k) {
            FieldScalar x = rand_scalar(m), y = rand_scalar(m), z = rand_scalar(m);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            if (!x.is_zero()) {
                CHECK(x * x.inv() == FieldScalar(1));
                CHECK((y / x) * x == y);
            }
            cases += 7;
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("norm is multiplicative") {
    for (int k = 0; k < 120; ++k) {
        FieldScalar x = rand_scalar(-1), y = rand_scalar(-1);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
    for (int k = 0; k < 60; ++k) {
        FieldScalar x = rand_scalar(7), y = rand_scalar(7);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("zero collapses tag, equality structural") {
    FieldScalar z(Rat(1), Rat(1), -1);
    FieldScalar w = z - z;
    CHECK(w == FieldScalar(0));
    CHECK(w.m() == 0);
}

TEST_CASE("text form round understanding") {
    CHECK(FieldScalar(Rat(-3, 14)).str() == "-3/14");
    CHECK(FieldScalar(Rat(1, 2), Rat(1, 3), -1).str() == "1/2+1/3*i");
    CHECK(FieldScalar(Rat(0), Rat(-1), -1).str() == "-i");
}

TEST_CASE("theta_to_coeffs map") {
    PviCoeffs c = theta_to_coeffs({Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(c.alpha == 0);
    CHECK(c.beta == 0);
    CHECK(c.gamma == 0);
    CHECK(c.delta == Rat(1, 2));

    PviCoeffs k = theta_to_coeffs({Rat(1, 7), Rat(1, 7), Rat(2, 7), Rat(1, 7)});
    CHECK(k.alpha == Rat(1, 98));
    CHECK(k.beta == Rat(-1, 98));
    CHECK(k.gamma == Rat(2, 49));
    CHECK(k.delta == Rat(24, 49));

    // sign flips do not matter
    PviCoeffs f = theta_to_coeffs({Rat(-1, 7), Rat(1, 7), Rat(-2, 7), Rat(1, 7)});
    CHECK(f.alpha == k.alpha);
    CHECK(f.beta == k.beta);
    CHECK(f.gamma == k.gamma);
    CHECK(f.delta == k.delta);
}

TEST_CASE("okamoto theta affine involution") {
    ThetaQuadruple klein{Rat(1, 7), Rat(1, 7), Rat(2, 7), Rat(1, 7)};
    ThetaQuadruple ok = okamoto_theta(klein);
    CHECK(ok == ThetaQuadruple{Rat(2, 7), Rat(2, 7), Rat(3, 7), Rat(2, 7)});

    ThetaQuadruple fam{Rat(1, 3), Rat(1, 3), Rat(1, 5), Rat(1, 5)};
    CHECK(okamoto_theta(fam) == ThetaQuadruple{Rat(3, 10), Rat(3, 10), Rat(1, 6), Rat(1, 6)});

    for (int k = 0; k < 100; ++k) {
        ThetaQuadruple t{rand_rat(), rand_rat(), rand_rat(), rand_rat()};
        CHECK(okamoto_theta(okamoto_theta(t)) == t);
    }
}

TEST_CASE("canonical theta") {
    ThetaQuadruple t{Rat(-1, 7), Rat(1, 7), Rat(2, 7), Rat(1, 7)};
    CHECK(canonical_theta(t) == ThetaQuadruple{Rat(1, 7), Rat(1, 7), Rat(1, 7), Rat(2, 7)});
    ThetaQuadruple m{Rat(0), Rat(0), Rat(1, 5), Rat(2, 5)};
    CHECK(canonical_theta(m) == m);
    for (int k = 0; k < 50; ++k) {
        ThetaQuadruple r{rand_rat(), rand_rat(), rand_rat(), rand_rat()};
        CHECK(canonical_theta(canonical_theta(r)) == canonical_theta(r));
    }
}
