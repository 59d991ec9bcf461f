#ifndef PVI_IMPLICITIZE_HPP
#define PVI_IMPLICITIZE_HPP

#include "pvi/homography.hpp"
#include "pvi/modular.hpp"
#include "pvi/poly2.hpp"
#include "pvi/solution.hpp"

namespace pvi {

// Exact implicitization: eliminate the radicals (branch-matched, so the
// conjugate-mixed spurious curve never arises), then s by resultant, strip
// contents, and return the primitive sign-normalized plane curve.
// The result is always verified exactly by substituting the parametrization
// back in (membership certificate).
Poly2 implicitize(const ParamSolution& sol);

// membership test: curve(u(s,t), x(s,t)) == 0, exact
bool curve_vanishes_on(const Poly2& curve, const ParamSolution& sol);

// ---- modular fast path ----

// curve mod p, stored as u-coefficient polynomials in x (ascending)
struct CurveP {
    modp::u64 p = 0;
    std::vector<modp::PolyP> cu;  // cu[j] = coefficient of u^j
    int deg_u() const { return static_cast<int>(cu.size()) - 1; }
    int deg_x() const;
    int total_deg() const;
    int term_count() const;
    bool operator==(const CurveP& o) const { return p == o.p && cu == o.cu; }
};

// modular image of the implicit curve for one prime; nullopt if the prime
// is bad (divides a denominator or leading coefficient, or degenerates)
std::optional<CurveP> implicitize_modp(const ParamSolution& sol, modp::u64 p);

struct ModStats {
    int b = 0, d = 0, terms = 0;
    int agreeing_primes = 0;
};

// (b, d) of the implicit curve via >= min_agree agreeing word-size primes;
// throws Error when the prime list is exhausted first
ModStats modular_curve_stats(const ParamSolution& sol, int min_agree = 3,
                             unsigned jobs = 1);

// invariance of a modular curve under a homography
bool invariance_check_modp(const CurveP& c, const Homography& h);

// evaluations of the curve at fixed points mod a fixed prime, hashed
// together with the stats; the orbit search dedup key
std::uint64_t curve_fingerprint(const CurveP& c);

}  // namespace pvi

#endif
