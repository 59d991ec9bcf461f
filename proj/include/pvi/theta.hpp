#ifndef PVI_THETA_HPP
#define PVI_THETA_HPP

#include <array>

#include "pvi/field.hpp"

namespace pvi {

// Ordered exponent quadruple (theta_inf, theta_0, theta_1, theta_x).
struct ThetaQuadruple {
    std::array<Rat, 4> v{};
    ThetaQuadruple() = default;
    ThetaQuadruple(Rat a, Rat b, Rat c, Rat d) : v{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    Rat& operator[](int i) { return v[i]; }
    const Rat& operator[](int i) const { return v[i]; }
    bool operator==(const ThetaQuadruple& o) const { return v == o.v; }
    bool operator!=(const ThetaQuadruple& o) const { return !(*this == o); }
    bool operator<(const ThetaQuadruple& o) const { return v < o.v; }
    Rat sum() const { return v[0] + v[1] + v[2] + v[3]; }
    std::string str() const;
};

struct SignMask {
    std::array<bool, 4> flip{};
    static SignMask from_code(unsigned code);  // 4 bits
    unsigned code() const;
    std::string str() const;  // e.g. "+--+"
};

struct PviCoeffs {
    Rat alpha, beta, gamma, delta;
};

// (2a, -2b, 2g, 1-2d) = (th_inf^2, th_0^2, th_1^2, th_x^2)
PviCoeffs theta_to_coeffs(const ThetaQuadruple& t);

ThetaQuadruple sign_change(const SignMask& m, const ThetaQuadruple& t);
ThetaQuadruple permute_theta(const std::array<int, 4>& perm, const ThetaQuadruple& t);

// affine involution Theta = M theta + (1/2) 1 with M = I - J/2
ThetaQuadruple okamoto_theta(const ThetaQuadruple& t);

// minimal representative under the 16 sign flips x slot permutations
// (enumeration; equals sort-after-absolute-value)
ThetaQuadruple canonical_theta(const ThetaQuadruple& t);

// Rational affine form c0 + ca*a + cb*b in the family parameters (a, b);
// how symbolic theta slots of families II/III/IV are stored.
struct LinForm {
    Rat c0, ca, cb;
    bool is_const() const { return ca == 0 && cb == 0; }
    Rat eval(const Rat& a, const Rat& b) const { return c0 + ca * a + cb * b; }
    std::string str() const;
};

struct ThetaForm {
    std::array<LinForm, 4> slot;
    bool is_const() const;
    ThetaQuadruple eval(const Rat& a, const Rat& b) const;
    bool uses_a() const;
    bool uses_b() const;
};

}  // namespace pvi

#endif
