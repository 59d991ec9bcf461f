#ifndef PVI_WEIERSTRASS_HPP
#define PVI_WEIERSTRASS_HPP

#include "pvi/catalog.hpp"

namespace pvi {

struct WeierstrassResult {
    bool pass = false;
    bool convention_flipped = false;  // matched w'^2 = 4w^3 + g2 w + g3 instead
    Rat g2, g3;                       // the invariants that verify (or derived)
    std::string residual;             // nonzero residual polynomial on failure
};

// Substitute s = alpha*w + beta, t = gamma*w' into t^2 = P(s) (the radical as
// printed) and reduce with w'^2 = 4w^3 - g2 w - g3.  When (g2, g3) are given
// they must verify (either sign convention, flagged); otherwise they are
// derived and recorded.
WeierstrassResult weierstrass_consistency(const CatalogEntry& entry);

// check against explicitly supplied constants (negative-control support)
WeierstrassResult weierstrass_check(const Poly1& radical_paper, const WeierstrassData& w);

}  // namespace pvi

#endif
