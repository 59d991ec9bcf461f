#include "pvi/okamoto.hpp"

namespace pvi {

ParamSolution okamoto_apply(const ParamSolution& sol) {
    Rat N = sol.theta.sum() - 1;
    ThetaQuadruple big = okamoto_theta(sol.theta);
    // cross-check N against (1/2) sum(theta - Theta)
    Rat n2 = (sol.theta.sum() - big.sum()) / 2;
    if (N != n2) throw Error("okamoto: inconsistent N bookkeeping");
    if (N == 0) throw DegenerateError("okamoto fixed locus: sum(theta) = 1 for " + sol.id);

    const FFElem& u = sol.u;
    const FFElem& x = sol.x;
    auto rad = u.rad()->count() >= x.rad()->count() ? u.rad() : x.rad();
    auto cst = [&](const Rat& r) { return FFElem(RatFun(FieldScalar(r)), rad); };
    FFElem one = cst(Rat(1));
    FFElem D = x.d_ds();
    if (D.is_zero()) throw DegenerateError("okamoto: dx/ds = 0");
    FFElem uprime = u.d_ds() / D;
    FFElem W = x * (x - one) * uprime / (u * (u - one) * (u - x));
    if (sol.theta[1] != 0) W += cst(sol.theta[1]) / u;
    if (sol.theta[2] != 0) W += cst(sol.theta[2]) / (u - one);
    W += cst(sol.theta[3] - 1) / (u - x);
    if (W.is_zero())
        throw DegenerateError("okamoto Riccati locus: W = 0 for " + sol.id);

    ParamSolution out = sol;
    out.u = u - cst(N) / W;
    out.theta = big;
    return out;
}

}  // namespace pvi
