#ifndef PVI_SPACECURVE_HPP
#define PVI_SPACECURVE_HPP

#include "pvi/catalog.hpp"
#include "pvi/poly2.hpp"

namespace pvi {

// Rational function in two variables (p, q), reusing the sparse bivariate
// representation.  No gcd normalization; contents are stripped on demand.
struct PolyFrac {
    Poly2 num;
    Poly2 den;
    PolyFrac() : den(Poly2::constant(FieldScalar(1))) {}
};

PolyFrac pf_add(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_sub(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_mul(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_div(const PolyFrac& a, const PolyFrac& b);
PolyFrac pf_neg(const PolyFrac& a);
PolyFrac pf_pow(PolyFrac a, long e);
PolyFrac pf_const(FieldScalar c);

PolyFrac parse_polyfrac(const std::string& text,
                        const std::map<std::string, PolyFrac>& symbols);

// Does the numerator of f vanish identically on the plane curve rel = 0?
// (pseudo-remainder test with respect to the first variable)
bool vanishes_on_relation(const PolyFrac& f, const Poly2& rel);

struct SpaceCurveResult {
    bool pass = false;
    bool t1_ok = false, t2_ok = false, aux_ok = true;
    std::string witness;  // first nonzero normal form on failure
};

// Verify that the (p,q) substitutions of the entry's space_curve block
// satisfy t_i^2 - P_i(s) = 0 modulo the plane relation ideal; P_i are the
// radicals as printed.
SpaceCurveResult space_curve_identities(const CatalogEntry& entry);

}  // namespace pvi

#endif
