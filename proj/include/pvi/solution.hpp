#ifndef PVI_SOLUTION_HPP
#define PVI_SOLUTION_HPP

#include <string>

#include "pvi/ffelem.hpp"
#include "pvi/theta.hpp"

namespace pvi {

// A parametric solution of PVI: x(s,t), u(s,t) over a shared radical set,
// with its exponent quadruple.
struct ParamSolution {
    std::string id;
    ThetaQuadruple theta;
    FFElem x, u;
    std::string genus_claim;  // "0", "1", "H2", "H3", "N3", "N7"
    // family-parameter substitution used to build this instance, if any
    bool has_family = false;
    Rat fam_a, fam_b;
};

}  // namespace pvi

#endif
