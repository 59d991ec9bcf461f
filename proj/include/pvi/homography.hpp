#ifndef PVI_HOMOGRAPHY_HPP
#define PVI_HOMOGRAPHY_HPP

#include "pvi/poly2.hpp"
#include "pvi/solution.hpp"

namespace pvi {

// One row of the standard table of 24 PVI-preserving homographies
// (u,x) -> (U,X).  The stored maps give the OLD pair in terms of the NEW:
//   x = (xm[0] X + xm[1]) / (xm[2] X + xm[3])
//   u = (A(X) U + B(X)) / (C(X) U + D(X)),  A..D linear in X
// perm[k] is the slot the old theta_k moves to.
struct Homography {
    int num;    // numbering of the published table
    int order;  // 1, 2, 3 or 4
    std::array<int, 4> perm;
    std::array<long, 4> xm;
    // coefficient pairs {c0, c1} meaning c0 + c1*X
    std::array<std::array<long, 2>, 4> um;  // A, B, C, D
};

// all 24 rows, index 0 holds the identity (num == 1)
const std::vector<Homography>& homography_table();
const Homography& homography(int num);  // by table number 1..24

// Transform a parametric solution: computes (U, X) from (u, x) by the
// inverted row maps and permutes theta.
ParamSolution apply_homography(const Homography& h, const ParamSolution& sol);

// Curve invariance: does P(u_map, x_map) reproduce P up to content and sign?
bool invariance_check(const Poly2& curve, const Homography& h);
// numerator of P(u_map(U,X), x_map(X)) as a polynomial in (U, X)
Poly2 transform_curve(const Poly2& curve, const Homography& h);

// Composition h2 after h1 acting on solutions; identified by evaluation.
// Throws if the table fails to close (it cannot, by construction).
int compose_homographies(int h1, int h2);
int homography_inverse(int h);

// startup-style self checks: closure into exactly 24 elements, orders match
bool homography_group_closes();

}  // namespace pvi

#endif
