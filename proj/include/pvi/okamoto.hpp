#ifndef PVI_OKAMOTO_HPP
#define PVI_OKAMOTO_HPP

#include "pvi/solution.hpp"

namespace pvi {

// The birational involution: U = u - N/W with
//   W = x(x-1)u'/(u(u-1)(u-x)) + theta_0/u + theta_1/(u-1) + (theta_x-1)/(u-x)
//   N = sum(theta) - 1  (cross-checked against (1/2) sum(theta - Theta))
// and Theta = okamoto_theta(theta).
// Throws DegenerateError when N = 0 (fixed locus) or W == 0 (Riccati locus).
ParamSolution okamoto_apply(const ParamSolution& sol);

}  // namespace pvi

#endif
