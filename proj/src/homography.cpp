#include "pvi/homography.hpp"

#include <map>

namespace pvi {

namespace {

// rows of the published table; perm entries index (inf,0,1,x).
// The published order column misfiles rows 11 and 20 as order 2; both are
// 4-cycles (S4 has only nine involutions), so the true order 4 is stored.
const std::vector<Homography> kTable = {
    {1, 1, {0, 1, 2, 3}, {1, 0, 0, 1}, {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}}},
    {7, 2, {1, 0, 3, 2}, {1, 0, 0, 1}, {{{0, 0}, {0, 1}, {1, 0}, {0, 0}}}},
    {15, 2, {2, 3, 0, 1}, {1, 0, 0, 1}, {{{1, 0}, {0, -1}, {1, 0}, {-1, 0}}}},
    {22, 2, {3, 2, 1, 0}, {1, 0, 0, 1}, {{{0, 1}, {0, -1}, {1, 0}, {0, -1}}}},
    {6, 2, {0, 3, 2, 1}, {1, 0, 1, -1}, {{{1, 0}, {0, -1}, {0, 0}, {1, -1}}}},
    {11, 4, {1, 2, 3, 0}, {1, 0, 1, -1}, {{{0, -1}, {0, 1}, {1, -1}, {0, 0}}}},
    {18, 2, {2, 1, 0, 3}, {1, 0, 1, -1}, {{{1, 0}, {0, 0}, {1, 0}, {-1, 0}}}},
    {20, 4, {3, 0, 1, 2}, {1, 0, 1, -1}, {{{0, 0}, {0, -1}, {1, 0}, {0, -1}}}},
    {2, 2, {0, 1, 3, 2}, {0, 1, 1, 0}, {{{1, 0}, {0, 0}, {0, 0}, {0, 1}}}},
    {8, 2, {1, 0, 2, 3}, {0, 1, 1, 0}, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}},
    {3, 2, {0, 2, 1, 3}, {-1, 1, 0, 1}, {{{-1, 0}, {1, 0}, {0, 0}, {1, 0}}}},
    {23, 2, {3, 1, 2, 0}, {-1, 1, 0, 1}, {{{1, -1}, {0, 0}, {1, 0}, {0, -1}}}},
    {4, 3, {0, 2, 3, 1}, {0, 1, -1, 1}, {{{-1, 0}, {1, 0}, {0, 0}, {1, -1}}}},
    {10, 3, {1, 3, 2, 0}, {0, 1, -1, 1}, {{{1, 0}, {0, -1}, {1, -1}, {0, 0}}}},
    {14, 3, {2, 0, 1, 3}, {0, 1, -1, 1}, {{{0, 0}, {1, 0}, {-1, 0}, {1, 0}}}},
    {24, 3, {3, 1, 0, 2}, {0, 1, -1, 1}, {{{1, 0}, {0, 0}, {1, 0}, {0, -1}}}},
    {5, 3, {0, 3, 1, 2}, {1, -1, 1, 0}, {{{-1, 0}, {0, 1}, {0, 0}, {0, 1}}}},
    {12, 3, {1, 2, 0, 3}, {1, -1, 1, 0}, {{{1, 0}, {-1, 0}, {1, 0}, {0, 0}}}},
    {17, 3, {2, 1, 3, 0}, {1, -1, 1, 0}, {{{-1, 1}, {0, 0}, {0, 1}, {0, -1}}}},
    {19, 3, {3, 0, 2, 1}, {1, -1, 1, 0}, {{{0, 0}, {1, -1}, {1, 0}, {0, -1}}}},
    {16, 4, {2, 3, 1, 0}, {0, 1, 1, 0}, {{{1, 0}, {0, -1}, {0, 1}, {0, -1}}}},
    {21, 4, {3, 2, 0, 1}, {0, 1, 1, 0}, {{{1, 0}, {-1, 0}, {1, 0}, {0, -1}}}},
    {9, 4, {1, 3, 0, 2}, {-1, 1, 0, 1}, {{{1, 0}, {0, -1}, {1, 0}, {0, 0}}}},
    {13, 4, {2, 0, 3, 1}, {-1, 1, 0, 1}, {{{0, 0}, {1, -1}, {-1, 0}, {1, 0}}}},
};

FFElem lin_at(const std::array<long, 2>& c, const FFElem& X) {
    FFElem r(RatFun(FieldScalar(c[0])), X.rad());
    if (c[1]) r += FFElem(RatFun(FieldScalar(c[1])), X.rad()) * X;
    return r;
}

}  // namespace

const std::vector<Homography>& homography_table() { return kTable; }

const Homography& homography(int num) {
    for (const auto& h : kTable)
        if (h.num == num) return h;
    throw Error("homography index out of range: " + std::to_string(num));
}

ParamSolution apply_homography(const Homography& h, const ParamSolution& sol) {
    ParamSolution out = sol;
    // X from x = (a X + b)/(c X + d):  X = (d x - b)/(-c x + a)
    const auto& m = h.xm;
    FFElem x = sol.x;
    auto cst = [&](long v) { return FFElem(RatFun(FieldScalar(v)), x.rad()); };
    FFElem X = (cst(m[3]) * x - cst(m[1])) / (cst(m[0]) - cst(m[2]) * x);
    // U from u = (A U + B)/(C U + D):  U = (D u - B)/(-C u + A)
    FFElem A = lin_at(h.um[0], X), B = lin_at(h.um[1], X), C = lin_at(h.um[2], X),
           D = lin_at(h.um[3], X);
    FFElem U = (D * sol.u - B) / (A - C * sol.u);
    out.x = X;
    out.u = U;
    for (int k = 0; k < 4; ++k) out.theta[h.perm[k]] = sol.theta[k];
    out.id = sol.id;
    return out;
}

Poly2 transform_curve(const Poly2& curve, const Homography& h) {
    int du = curve.deg_u(), dx = curve.deg_x();
    // substitute u = (A U + B)/(C U + D), x = (a X + b)/(c X + d) and clear
    // (C U + D)^du (c X + d)^dx
    // build A U + B and C U + D as Poly2 in (U, X)
    Poly2 AU_B = Poly2::term(1, 0, FieldScalar(1)) * (Poly2::term(0, 0, FieldScalar(h.um[0][0])) +
                                                      Poly2::term(0, 1, FieldScalar(h.um[0][1])));
    AU_B += Poly2::term(0, 0, FieldScalar(h.um[1][0])) + Poly2::term(0, 1, FieldScalar(h.um[1][1]));
    Poly2 CU_D = Poly2::term(1, 0, FieldScalar(1)) * (Poly2::term(0, 0, FieldScalar(h.um[2][0])) +
                                                      Poly2::term(0, 1, FieldScalar(h.um[2][1])));
    CU_D += Poly2::term(0, 0, FieldScalar(h.um[3][0])) + Poly2::term(0, 1, FieldScalar(h.um[3][1]));
    Poly2 xn = Poly2::term(0, 1, FieldScalar(h.xm[0])) + Poly2::term(0, 0, FieldScalar(h.xm[1]));
    Poly2 xd = Poly2::term(0, 1, FieldScalar(h.xm[2])) + Poly2::term(0, 0, FieldScalar(h.xm[3]));

    std::vector<Poly2> powAU(du + 1), powCU(du + 1), powxn(dx + 1), powxd(dx + 1);
    powAU[0] = powCU[0] = powxn[0] = powxd[0] = Poly2::constant(FieldScalar(1));
    for (int i = 1; i <= du; ++i) {
        powAU[i] = powAU[i - 1] * AU_B;
        powCU[i] = powCU[i - 1] * CU_D;
    }
    for (int i = 1; i <= dx; ++i) {
        powxn[i] = powxn[i - 1] * xn;
        powxd[i] = powxd[i - 1] * xd;
    }
    Poly2 acc;
    for (const auto& t : curve.terms()) {
        Poly2 piece = Poly2::constant(t.c) * powAU[t.du] * powCU[du - t.du] * powxn[t.dx] *
                      powxd[dx - t.dx];
        acc += piece;
    }
    return acc;
}

bool invariance_check(const Poly2& curve, const Homography& h) {
    Poly2 ref = normalize_curve(curve);
    Poly2 img = transform_curve(curve, h);
    if (img.is_zero()) return false;
    Poly1 cx = img.content_x();
    if (cx.deg() > 0) img = Poly2::exact_div(img, Poly2::from_x_poly(cx));
    // strip plain-u content too (powers of U introduced by clearing)
    // content in u: gcd of x-coefficients viewed as polys in u
    // (transforms produce at most monomial u factors; divide them out)
    int min_du = 1 << 30;
    for (const auto& t : img.terms()) min_du = std::min(min_du, t.du);
    if (min_du > 0) {
        Poly2 q;
        for (const auto& t : img.terms()) q += Poly2::term(t.du - min_du, t.dx, t.c);
        img = q;
    }
    return normalize_curve(img) == ref;
}

int compose_homographies(int h1, int h2) {
    // permutation composition identifies the product uniquely
    const Homography& a = homography(h1);
    const Homography& b = homography(h2);
    // T_h permutes theta by perm; T_{h2} after T_{h1} gives p2 o p1
    std::array<int, 4> res;
    for (int k = 0; k < 4; ++k) res[k] = b.perm[a.perm[k]];
    for (const auto& h : kTable)
        if (h.perm == res) return h.num;
    throw Error("homography composition fell outside the table");
}

int homography_inverse(int num) {
    const Homography& h = homography(num);
    std::array<int, 4> inv;
    for (int k = 0; k < 4; ++k) inv[h.perm[k]] = k;
    for (const auto& g : kTable)
        if (g.perm == inv) return g.num;
    throw Error("homography inverse fell outside the table");
}

bool homography_group_closes() {
    std::map<std::array<int, 4>, int> seen;
    for (const auto& h : kTable) {
        if (seen.count(h.perm)) return false;
        seen[h.perm] = h.num;
    }
    if (seen.size() != 24) return false;
    for (const auto& a : kTable)
        for (const auto& b : kTable) {
            compose_homographies(a.num, b.num);  // throws if not closed
        }
    return true;
}

}  // namespace pvi
