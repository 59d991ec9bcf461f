#ifndef PVI_RESIDUAL_HPP
#define PVI_RESIDUAL_HPP

#include "pvi/solution.hpp"

namespace pvi {

// Exact PVI residual with denominators cleared: the returned element is
//   2u(u-1)(u-x) x^2(x-1)^2 D^3 * (u'' - RHS(u',u,x))
// where D = dx/ds, so the zero test is a polynomial identity.
// Throws DegenerateError when dx/ds = 0 or u is identically 0, 1 or x.
FFElem pvi_residual(const ParamSolution& sol);

bool pvi_residual_is_zero(const ParamSolution& sol);

// Fast probabilistic screen: evaluates the same cleared residual with s
// mapped to a random value mod a 62-bit prime (radicals replaced by formal
// square roots).  Zero result is necessary for the exact residual to vanish.
bool pvi_residual_probably_zero(const ParamSolution& sol, int samples = 2);

}  // namespace pvi

#endif
