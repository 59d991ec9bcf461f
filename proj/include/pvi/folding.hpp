#ifndef PVI_FOLDING_HPP
#define PVI_FOLDING_HPP

#include "pvi/poly2.hpp"
#include "pvi/solution.hpp"

namespace pvi {

// Rational quartic transformation: requires all four theta entries equal
// (lambda); keeps x, replaces u by (u^2-x)^2 / (4u(u-1)(u-x)) and theta by
// (4 lambda, 0, 0, 0).
ParamSolution apply_quartic(const ParamSolution& sol);

struct FoldSampleReport {
    Rat s_value;
    // decimal log10 of the minimum |P(u,x)| over the four fourth-root branches
    double log10_min_abs;
    bool pass;
};

struct FoldReport {
    bool theta_pattern_ok = false;
    std::string theta_note;
    std::vector<FoldSampleReport> samples;
    bool pass = false;  // all samples under tolerance
};

// Numeric check of the half-integer folding: for rational s samples,
// evaluate the folded parametrization (X, U) in `precision`-bit arithmetic,
// map through x = ((X^(-1/4)+X^(1/4))/2)^2, u = ((X^(-1/4)U^(1/2)+X^(1/4)U^(-1/2))/2)^2
// over all four fourth-root branches, and test min |P(u,x)| < 10^(-precision/4)
// against the unfolded plane curve P.
FoldReport fold_point_check(const ParamSolution& folded, const Poly2& unfolded_curve,
                            int samples, int precision_bits);

}  // namespace pvi

#endif
