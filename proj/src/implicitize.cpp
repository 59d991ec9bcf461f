#include "pvi/implicitize.hpp"

#include <algorithm>
#include <map>

#include "pvi/prs.hpp"
#include "pvi/util.hpp"

namespace pvi {

namespace {

// ---------- polynomials in s with Poly2 coefficients ----------

using SP = PolyS;  // vector<Poly2>, ascending in s

void sp_trim(SP& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

SP sp_add(const SP& a, const SP& b) {
    SP r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    sp_trim(r);
    return r;
}

SP sp_sub(const SP& a, const SP& b) {
    SP r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    sp_trim(r);
    return r;
}

SP sp_mul(const SP& a, const SP& b) {
    if (a.empty() || b.empty()) return {};
    SP r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    sp_trim(r);
    return r;
}

// f(s) * (monomial in u,x)
SP sp_embed(const Poly1& f, int du, int dx) {
    SP r;
    r.reserve(f.deg() + 1);
    for (int k = 0; k <= f.deg(); ++k) r.push_back(Poly2::term(du, dx, f.coeff(k)));
    sp_trim(r);
    return r;
}

SP sp_square(const SP& a) { return sp_mul(a, a); }

// gcd over Q[s] of all per-(u,x)-monomial coefficient columns
Poly1 sp_s_content(const SP& a) {
    std::map<std::uint64_t, std::vector<FieldScalar>> cols;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (const auto& t : a[k].terms()) {
            auto& col = cols[(static_cast<std::uint64_t>(t.du) << 32) | static_cast<std::uint32_t>(t.dx)];
            if (col.size() <= k) col.resize(k + 1);
            col[k] = t.c;
        }
    Poly1 g;
    for (auto& [key, col] : cols) {
        g = gcd1(g, Poly1(std::move(col)));
        if (g.deg() == 0) return g;
    }
    return g;
}

SP sp_strip_s_content(const SP& a, Poly1* content = nullptr) {
    Poly1 g = sp_s_content(a);
    if (content) *content = g;
    if (g.deg() <= 0) return a;
    // divide column-wise
    std::map<std::uint64_t, std::vector<FieldScalar>> cols;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (const auto& t : a[k].terms()) {
            auto& col = cols[(static_cast<std::uint64_t>(t.du) << 32) | static_cast<std::uint32_t>(t.dx)];
            if (col.size() <= k) col.resize(k + 1);
            col[k] = t.c;
        }
    SP r(a.size());
    for (auto& [key, col] : cols) {
        Poly1 q = exact_div(Poly1(std::move(col)), g);
        int du = static_cast<int>(key >> 32), dx = static_cast<int>(key & 0xffffffffu);
        for (int k = 0; k <= q.deg(); ++k)
            if (!q.coeff(k).is_zero()) r[k] += Poly2::term(du, dx, q.coeff(k));
    }
    sp_trim(r);
    return r;
}

int sp_deg_u(const SP& a) {
    int d = 0;
    for (const auto& c : a) d = std::max(d, c.deg_u());
    return d;
}

int sp_deg_x(const SP& a) {
    int d = 0;
    for (const auto& c : a) d = std::max(d, c.deg_x());
    return d;
}

// ---------- elimination input: A(s;x) and H(s;u,x) ----------

struct ElimInput {
    SP A;  // x-equation, u-free
    SP H;  // branch-matched u-equation (deg_u <= 2)
};

ElimInput build_elimination(const ParamSolution& sol) {
    ElimInput out;
    const int n = sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad()->count()
                                                               : sol.u.rad()->count();
    const RadicalSetPtr rad =
        sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad() : sol.u.rad();
    const RatFun& x0 = sol.x.c(0);
    const RatFun& x1 = sol.x.c(1);
    if (!sol.x.c(2).is_zero() || !sol.x.c(3).is_zero())
        throw Error("implicitize expects x to involve only the first radical");
    if (x0.is_constant() && x1.is_zero()) throw DegenerateError("x is constant");

    // A
    if (n == 0 || x1.is_zero()) {
        // x*q0 - p0
        out.A = sp_sub(sp_mul(sp_embed(x0.den(), 0, 1), {Poly2::constant(FieldScalar(1))}),
                       sp_embed(x0.num(), 0, 0));
    } else {
        // ((x q0 - p0) q1)^2 - (p1 q0)^2 P1
        SP e = sp_sub(sp_embed(x0.den(), 0, 1), sp_embed(x0.num(), 0, 0));
        SP eq1 = sp_mul(e, sp_embed(x1.den(), 0, 0));
        SP p1q0 = sp_mul(sp_embed(x1.num(), 0, 0), sp_embed(x0.den(), 0, 0));
        out.A = sp_sub(sp_square(eq1), sp_mul(sp_square(p1q0), sp_embed(rad->p1(), 0, 0)));
    }

    // H
    const RatFun& d0 = sol.u.c(0);
    const RatFun& d1 = sol.u.c(1);
    const RatFun& d2 = sol.u.c(2);
    const RatFun& d3 = sol.u.c(3);
    bool u_has_t2 = !d2.is_zero() || !d3.is_zero();
    if (n == 0 || (d1.is_zero() && !u_has_t2)) {
        out.H = sp_sub(sp_mul(sp_embed(d0.den(), 1, 0), {Poly2::constant(FieldScalar(1))}),
                       sp_embed(d0.num(), 0, 0));
    } else if (!u_has_t2) {
        // (u m0 - n0) q_{d1} p1 q0 - n1 m0 (x q0 - p0) q1
        SP E = sp_sub(sp_mul(sp_embed(d0.den(), 1, 0), {Poly2::constant(FieldScalar(1))}),
                      sp_embed(d0.num(), 0, 0));
        SP t1coef = sp_mul(sp_embed(d1.den(), 0, 0),
                           sp_mul(sp_embed(x1.num(), 0, 0), sp_embed(x0.den(), 0, 0)));
        SP xs = sp_sub(sp_embed(x0.den(), 0, 1), sp_embed(x0.num(), 0, 0));
        SP rhs = sp_mul(sp_mul(sp_embed(d1.num(), 0, 0), sp_embed(d0.den(), 0, 0)),
                        sp_mul(xs, sp_embed(x1.den(), 0, 0)));
        out.H = sp_sub(sp_mul(E, t1coef), rhs);
    } else {
        // two radicals: G1 = (u-d0)^2 + d1^2 P1 - (d2^2 + d3^2 P1) P2
        //               G2 = 2(u-d0) d1 + 2 d2 d3 P2     (coefficient of t1)
        // H = G1 * c1x * q0 - G2 * (x q0 - p0) * q1,  all cleared
        const Poly1 &m0 = d0.den(), &m1 = d1.den(), &m2 = d2.den(), &m3 = d3.den();
        const Poly1 &n0 = d0.num(), &n1 = d1.num(), &n2 = d2.num(), &n3 = d3.num();
        const Poly1& P1 = rad->p1();
        const Poly1& P2 = rad->p2();
        SP E = sp_sub(sp_mul(sp_embed(m0, 1, 0), {Poly2::constant(FieldScalar(1))}),
                      sp_embed(n0, 0, 0));
        SP m123 = sp_embed(m1 * m2 * m3, 0, 0);
        SP m023 = sp_embed(m0 * m2 * m3, 0, 0);
        SP m013 = sp_embed(m0 * m1 * m3, 0, 0);
        SP m012 = sp_embed(m0 * m1 * m2, 0, 0);
        SP G1 = sp_sub(
            sp_add(sp_mul(sp_square(E), sp_square(m123)),
                   sp_mul(sp_embed(n1 * n1 * P1, 0, 0), sp_square(m023))),
            sp_add(sp_mul(sp_embed(n2 * n2 * P2, 0, 0), sp_square(m013)),
                   sp_mul(sp_embed(n3 * n3 * P1 * P2, 0, 0), sp_square(m012))));
        SP G2 = sp_add(
            sp_mul(sp_mul(E, sp_embed((n1 * m0) * FieldScalar(2), 0, 0)),
                   sp_mul(sp_embed(m1, 0, 0), sp_square(sp_embed(m2 * m3, 0, 0)))),
            sp_mul(sp_embed((n2 * n3 * m2 * m3 * P2) * FieldScalar(2), 0, 0),
                   sp_square(sp_embed(m0 * m1, 0, 0))));
        SP xs = sp_sub(sp_embed(x0.den(), 0, 1), sp_embed(x0.num(), 0, 0));
        out.H = sp_sub(sp_mul(G1, sp_mul(sp_embed(x1.num(), 0, 0), sp_embed(x0.den(), 0, 0))),
                       sp_mul(G2, sp_mul(xs, sp_embed(x1.den(), 0, 0))));
    }

    out.A = sp_strip_s_content(out.A);
    out.H = sp_strip_s_content(out.H);
    return out;
}

// ---------- exact resultant via interpolation in x ----------

struct Poly1Ring {
    using E = Poly1;
    E zero() const { return Poly1(); }
    E one() const { return Poly1(FieldScalar(1)); }
    bool is_zero(const E& a) const { return a.is_zero(); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E exact_div(const E& a, const E& b) const { return pvi::exact_div(a, b); }
};

// Lagrange interpolation over the coefficient field
Poly1 lagrange(const std::vector<FieldScalar>& xs, const std::vector<FieldScalar>& ys) {
    std::size_t n = xs.size();
    Poly1 acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i].is_zero()) continue;
        Poly1 basis(ys[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            FieldScalar inv = (xs[i] - xs[j]).inv();
            basis = basis * Poly1(std::vector<FieldScalar>{-xs[j] * inv, inv});
        }
        acc = acc + basis;
    }
    return acc;
}

Poly2 resultant_via_interpolation(const SP& A, const SP& H) {
    int dsA = static_cast<int>(A.size()) - 1;
    int dsH = static_cast<int>(H.size()) - 1;
    int Du = dsA * sp_deg_u(H);
    int Bx = dsA * sp_deg_x(H) + dsH * sp_deg_x(A);
    // leading coefficients as polynomials, to validate nodes
    Poly1 lcA_x;  // lc_s(A) as poly in x
    {
        std::vector<FieldScalar> v;
        for (const auto& t : A.back().terms()) {
            if (static_cast<int>(v.size()) <= t.dx) v.resize(t.dx + 1);
            v[t.dx] = t.c;
        }
        lcA_x = Poly1(std::move(v));
    }
    Poly1Ring ring;
    std::vector<FieldScalar> nodes;
    std::vector<std::vector<FieldScalar>> values;  // values[j][node] = coeff of u^j
    values.resize(Du + 1);
    long candidate = 0;
    while (static_cast<int>(nodes.size()) < Bx + 1) {
        FieldScalar x0(candidate);
        candidate = candidate > 0 ? -candidate : -candidate + 1;
        if (lcA_x.eval(x0).is_zero()) continue;
        // slice A: scalar coefficients
        std::vector<Poly1> As(A.size()), Hs(H.size());
        for (std::size_t k = 0; k < A.size(); ++k) As[k] = Poly1(A[k].eval_x(x0).coeff(0));
        bool ok = true;
        for (std::size_t k = 0; k < H.size(); ++k) Hs[k] = H[k].eval_x(x0);
        if (Hs.back().is_zero()) ok = false;  // degree drop in s
        if (!ok) continue;
        Poly1 r = prs_resultant<Poly1Ring>(As, Hs, ring);
        nodes.push_back(x0);
        for (int j = 0; j <= Du; ++j) values[j].push_back(r.coeff(j));
    }
    // interpolate each u-coefficient in x
    Poly2 out;
    for (int j = 0; j <= Du; ++j) {
        Poly1 cj = lagrange(nodes, values[j]);
        for (int k = 0; k <= cj.deg(); ++k)
            if (!cj.coeff(k).is_zero()) out += Poly2::term(j, k, cj.coeff(k));
    }
    return out;
}

Poly2 strip_to_curve(Poly2 R) {
    if (R.is_zero()) throw Error("implicitize: resultant vanished identically");
    Poly1 cx = R.content_x();
    if (cx.deg() > 0) R = Poly2::exact_div(R, Poly2::from_x_poly(cx));
    return normalize_curve(R);
}

// u-squarefree part over Q(x): needed when the parametrization covers its
// image curve more than once (quartic images, non-birational pairs)
Poly2 u_squarefree_part(const Poly2& R) {
    Poly2 Ru = R.deriv_u();
    if (Ru.is_zero()) return R;
    // cheap modular screen: squarefree mod one good prime => squarefree
    for (std::size_t k = 0; k < 3; ++k) {
        modp::Reducer red(modp::PRIMES62[k]);
        modp::u64 p = red.p;
        modp::u64 x0 = 1234567 + 17 * k;
        modp::PolyP slice, dslice;
        bool ok = true;
        auto cj = R.u_coeffs();
        for (const auto& c : cj) {
            auto v = red.poly(c.coeffs());
            if (!v) {
                ok = false;
                break;
            }
            slice.push_back(modp::evalp(*v, x0, p));
        }
        if (!ok) continue;
        modp::trimp(slice);
        if (modp::degp(slice) != R.deg_u()) continue;
        if (modp::degp(modp::gcdp(slice, modp::derivp(slice, p), p)) == 0) return R;
        break;
    }
    // subresultant PRS over Q[x]
    struct XRing {
        using E = Poly1;
        E zero() const { return Poly1(); }
        E one() const { return Poly1(FieldScalar(1)); }
        bool is_zero(const E& a) const { return a.is_zero(); }
        E add(const E& a, const E& b) const { return a + b; }
        E sub(const E& a, const E& b) const { return a - b; }
        E neg(const E& a) const { return -a; }
        E mul(const E& a, const E& b) const { return a * b; }
        E exact_div(const E& a, const E& b) const { return pvi::exact_div(a, b); }
    } ring;
    auto to_vec = [](const Poly2& p) { return p.u_coeffs(); };
    std::vector<Poly1> a = to_vec(R), b = to_vec(Ru);
    std::vector<Poly1> g = prs_gcd_raw<XRing>(a, b, ring);
    // primitive part in x
    Poly1 cont;
    for (const auto& c : g) {
        cont = gcd1(cont, c);
        if (cont.deg() == 0) break;
    }
    if (cont.deg() > 0)
        for (auto& c : g) c = exact_div(c, cont);
    Poly2 G = Poly2::from_u_coeffs(g);
    if (G.deg_u() == 0) return R;
    return Poly2::exact_div(R, G);
}

}  // namespace

bool curve_vanishes_on(const Poly2& curve, const ParamSolution& sol) {
    const RadicalSetPtr rad =
        sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad() : sol.u.rad();
    // Horner in u with coefficients evaluated at x
    auto cj = curve.u_coeffs();
    // precompute powers of x lazily via Horner on each coefficient
    FFElem acc(RatFun(FieldScalar(0)), rad);
    for (auto it = cj.rbegin(); it != cj.rend(); ++it) {
        // evaluate coefficient poly in x at sol.x
        FFElem cval(RatFun(FieldScalar(0)), rad);
        for (int k = it->deg(); k >= 0; --k) {
            cval = cval * sol.x;
            if (!it->coeff(k).is_zero()) cval += FFElem(RatFun(it->coeff(k)), rad);
        }
        acc = acc * sol.u + cval;
    }
    return acc.is_zero();
}

Poly2 implicitize(const ParamSolution& sol) {
    ElimInput in = build_elimination(sol);
    int dsA = static_cast<int>(in.A.size()) - 1;
    int dsH = static_cast<int>(in.H.size()) - 1;
    if (dsA < 1) throw DegenerateError("implicitize: x is degenerate");
    Poly2 R;
    if (dsH == 0) {
        // u determined rationally by x alone: curve is H itself (linear in u)
        R = in.H[0];
    } else if (static_cast<long>(dsA) * dsH <= 64) {
        Poly2Ring ring;
        SP a = in.A, h = in.H;
        R = prs_resultant<Poly2Ring>(a, h, ring);
    } else {
        R = resultant_via_interpolation(in.A, in.H);
    }
    Poly2 curve = strip_to_curve(u_squarefree_part(strip_to_curve(R)));
    if (!curve_vanishes_on(curve, sol))
        throw Error("implicitize: no computed factor vanishes on " + sol.id);
    return curve;
}

// ---------- modular path ----------

namespace {

using modp::PolyP;
using modp::u64;

struct BivP {
    // sparse bivariate over F_p: (du,dx) -> s-polynomial
    std::map<std::pair<int, int>, PolyP> t;
    u64 p;
};

// reduce a RatFun pair num/den mod p; false if denominator vanishes
bool reduce_ratfun(const RatFun& f, const modp::Reducer& red, PolyP& num, PolyP& den) {
    auto n = red.poly(f.num().coeffs());
    auto d = red.poly(f.den().coeffs());
    if (!n || !d || d->empty()) return false;
    num = *n;
    den = *d;
    return true;
}

struct ModElim {
    // A(s;x): small x-degree; store per x-power
    std::vector<PolyP> A;  // A[k] = coefficient of x^k, poly in s
    // H: coefficients per (du,dx)
    std::map<std::pair<int, int>, PolyP> H;
    int dsA = 0, dsH = 0;
    int duH = 0, dxH = 0, dxA = 0;
    u64 p;
};

void bump(std::vector<PolyP>& v, std::size_t k) {
    if (v.size() <= k) v.resize(k + 1);
}

std::optional<ModElim> build_elimination_modp(const ParamSolution& sol, u64 p) {
    modp::Reducer red(p);
    ModElim out;
    out.p = p;
    const RadicalSetPtr rad =
        sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad() : sol.u.rad();
    int n = rad->count();
    PolyP P1, P2;
    if (n >= 1) {
        auto r = red.poly(rad->p1().coeffs());
        if (!r || modp::degp(*r) != rad->p1().deg()) return std::nullopt;
        P1 = *r;
    }
    if (n >= 2) {
        auto r = red.poly(rad->p2().coeffs());
        if (!r || modp::degp(*r) != rad->p2().deg()) return std::nullopt;
        P2 = *r;
    }
    PolyP p0, q0, p1, q1;
    if (!reduce_ratfun(sol.x.c(0), red, p0, q0)) return std::nullopt;
    if (!reduce_ratfun(sol.x.c(1), red, p1, q1)) return std::nullopt;
    if (!sol.x.c(2).is_zero() || !sol.x.c(3).is_zero())
        return std::nullopt;
    bool x_rad = !sol.x.c(1).is_zero();

    // A coefficients in x
    if (!x_rad) {
        out.A.resize(2);
        out.A[1] = q0;
        out.A[0] = modp::subp({}, p0, p);
    } else {
        // (x q0 - p0)^2 q1^2 - (p1 q0)^2 P1
        PolyP q0q1 = modp::mulp(q0, q1, p);
        PolyP p0q1 = modp::mulp(p0, q1, p);
        out.A.resize(3);
        out.A[2] = modp::mulp(q0q1, q0q1, p);
        out.A[1] = modp::subp({}, modp::mul_scalar(modp::mulp(q0q1, p0q1, p), 2, p), p);
        PolyP p1q0 = modp::mulp(p1, q0, p);
        out.A[0] = modp::subp(modp::mulp(p0q1, p0q1, p),
                              modp::mulp(modp::mulp(p1q0, p1q0, p), P1, p), p);
    }
    // strip s-content of A
    {
        PolyP g;
        for (const auto& c : out.A)
            if (!c.empty()) g = g.empty() ? c : modp::gcdp(g, c, p);
        if (modp::degp(g) > 0)
            for (auto& c : out.A)
                if (!c.empty()) c = modp::divremp(c, g, p).first;
    }

    PolyP n0, m0, n1, m1, n2, m2, n3, m3;
    if (!reduce_ratfun(sol.u.c(0), red, n0, m0)) return std::nullopt;
    if (!reduce_ratfun(sol.u.c(1), red, n1, m1)) return std::nullopt;
    if (!reduce_ratfun(sol.u.c(2), red, n2, m2)) return std::nullopt;
    if (!reduce_ratfun(sol.u.c(3), red, n3, m3)) return std::nullopt;
    bool u_t2 = !sol.u.c(2).is_zero() || !sol.u.c(3).is_zero();
    bool u_t1 = !sol.u.c(1).is_zero();

    auto put = [&](int du, int dx, const PolyP& v) {
        if (v.empty()) return;
        auto& slot = out.H[{du, dx}];
        slot = slot.empty() ? v : modp::addp(slot, v, p);
    };
    if (n == 0 || (!u_t1 && !u_t2)) {
        put(1, 0, m0);
        put(0, 0, modp::subp({}, n0, p));
    } else if (!u_t2) {
        PolyP t1c = modp::mulp(m1, modp::mulp(p1, q0, p), p);
        put(1, 0, modp::mulp(m0, t1c, p));
        put(0, 0, modp::subp({}, modp::mulp(n0, t1c, p), p));
        PolyP n1m0q1 = modp::mulp(modp::mulp(n1, m0, p), q1, p);
        put(0, 1, modp::subp({}, modp::mulp(n1m0q1, q0, p), p));
        put(0, 0, modp::mulp(n1m0q1, p0, p));
    } else {
        // G1 and G2 as in the exact path
        PolyP m123 = modp::mulp(m1, modp::mulp(m2, m3, p), p);
        PolyP m023 = modp::mulp(m0, modp::mulp(m2, m3, p), p);
        PolyP m013 = modp::mulp(m0, modp::mulp(m1, m3, p), p);
        PolyP m012 = modp::mulp(m0, modp::mulp(m1, m2, p), p);
        PolyP m123sq = modp::mulp(m123, m123, p);
        // G1 coefficients in u: u^2, u, 1
        std::map<std::pair<int, int>, PolyP> G1;
        auto putg = [&](std::map<std::pair<int, int>, PolyP>& m, int du, int dx, const PolyP& v) {
            if (v.empty()) return;
            auto& slot = m[{du, dx}];
            slot = slot.empty() ? v : modp::addp(slot, v, p);
        };
        PolyP m0sq = modp::mulp(m0, m0, p);
        putg(G1, 2, 0, modp::mulp(m0sq, m123sq, p));
        putg(G1, 1, 0, modp::subp({}, modp::mul_scalar(modp::mulp(modp::mulp(n0, m0, p), m123sq, p), 2, p), p));
        PolyP g10 = modp::mulp(modp::mulp(n0, n0, p), m123sq, p);
        g10 = modp::addp(g10, modp::mulp(modp::mulp(modp::mulp(n1, n1, p), P1, p),
                                         modp::mulp(m023, m023, p), p), p);
        g10 = modp::subp(g10, modp::mulp(modp::mulp(modp::mulp(n2, n2, p), P2, p),
                                         modp::mulp(m013, m013, p), p), p);
        g10 = modp::subp(g10, modp::mulp(modp::mulp(modp::mulp(n3, n3, p), modp::mulp(P1, P2, p), p),
                                         modp::mulp(m012, m012, p), p), p);
        putg(G1, 0, 0, g10);
        // G2 = 2(u m0 - n0) n1 m0 m1 (m2 m3)^2 / m0^2... cleared by (m0m1m2m3)^2:
        //    = 2 u n1 m0 m1 (m2m3)^2 - 2 n0 n1 m1 (m2m3)^2 ... careful with m0
        std::map<std::pair<int, int>, PolyP> G2;
        PolyP m2m3sq = modp::mulp(modp::mulp(m2, m3, p), modp::mulp(m2, m3, p), p);
        PolyP c = modp::mul_scalar(modp::mulp(n1, modp::mulp(m0, modp::mulp(m1, m2m3sq, p), p), p), 2, p);
        putg(G2, 1, 0, c);
        putg(G2, 0, 0, modp::subp({}, modp::mul_scalar(
            modp::mulp(n0, modp::mulp(n1, modp::mulp(m1, m2m3sq, p), p), p), 2, p), p));
        putg(G2, 0, 0, modp::mul_scalar(
            modp::mulp(modp::mulp(n2, n3, p),
                       modp::mulp(modp::mulp(m2, m3, p),
                                  modp::mulp(P2, modp::mulp(modp::mulp(m0, m1, p), modp::mulp(m0, m1, p), p), p), p), p), 2, p));
        // H = G1 * p1 q0 - G2 * (x q0 - p0) q1
        PolyP p1q0 = modp::mulp(p1, q0, p);
        for (auto& [k, v] : G1) put(k.first, k.second, modp::mulp(v, p1q0, p));
        PolyP q0q1 = modp::mulp(q0, q1, p);
        PolyP p0q1 = modp::mulp(p0, q1, p);
        for (auto& [k, v] : G2) {
            put(k.first, k.second + 1, modp::subp({}, modp::mulp(v, q0q1, p), p));
            put(k.first, k.second, modp::mulp(v, p0q1, p));
        }
    }
    // strip s-content of H
    {
        PolyP g;
        for (const auto& [k, v] : out.H) g = g.empty() ? v : modp::gcdp(g, v, p);
        if (modp::degp(g) > 0)
            for (auto& [k, v] : out.H) v = modp::divremp(v, g, p).first;
    }
    for (auto& c : out.A) modp::trimp(c);
    for (const auto& c : out.A) out.dsA = std::max(out.dsA, modp::degp(c));
    for (const auto& [k, v] : out.H) {
        out.dsH = std::max(out.dsH, modp::degp(v));
        out.duH = std::max(out.duH, k.first);
        out.dxH = std::max(out.dxH, k.second);
    }
    out.dxA = static_cast<int>(out.A.size()) - 1;
    if (out.dsA < 1) return std::nullopt;
    return out;
}

}  // namespace

int CurveP::deg_x() const {
    int d = 0;
    for (const auto& c : cu) d = std::max(d, modp::degp(c));
    return d;
}

int CurveP::total_deg() const {
    int d = 0;
    for (std::size_t j = 0; j < cu.size(); ++j)
        if (!cu[j].empty()) d = std::max(d, static_cast<int>(j) + modp::degp(cu[j]));
    return d;
}

int CurveP::term_count() const {
    int n = 0;
    for (const auto& c : cu)
        for (u64 v : c)
            if (v) ++n;
    return n;
}

std::optional<CurveP> implicitize_modp(const ParamSolution& sol, modp::u64 p) {
    auto elim = build_elimination_modp(sol, p);
    if (!elim) return std::nullopt;
    const ModElim& e = *elim;
    int Du = e.dsA * e.duH;
    if (Du <= 0) return std::nullopt;
    long Bx = static_cast<long>(e.dsA) * e.dxH + static_cast<long>(e.dsH) * e.dxA;
    // evaluation grid
    std::vector<u64> xnodes, unodes;
    for (u64 v = 1; static_cast<long>(xnodes.size()) < Bx + 1; ++v) {
        // leading s-coefficient of A at x0 must not vanish
        u64 lc = 0;
        u64 xp = 1;
        for (const auto& c : e.A) {
            if (modp::degp(c) == e.dsA) lc = modp::addm(lc, modp::mulm(c[e.dsA], xp, p), p);
            xp = modp::mulm(xp, v, p);
        }
        if (lc) xnodes.push_back(v);
        if (v > static_cast<u64>(4 * (Bx + 2)) + 64) return std::nullopt;
    }
    for (u64 v = 1; unodes.size() < static_cast<std::size_t>(Du + 1); ++v) unodes.push_back(v);

    // values
    std::vector<std::vector<u64>> grid(xnodes.size(), std::vector<u64>(unodes.size()));
    for (std::size_t ix = 0; ix < xnodes.size(); ++ix) {
        u64 x0 = xnodes[ix];
        // slice A
        PolyP As;
        {
            u64 xp = 1;
            for (const auto& c : e.A) {
                As = modp::addp(As, modp::mul_scalar(c, xp, p), p);
                xp = modp::mulm(xp, x0, p);
            }
        }
        if (modp::degp(As) != e.dsA) return std::nullopt;
        for (std::size_t iu = 0; iu < unodes.size(); ++iu) {
            u64 u0 = unodes[iu];
            PolyP Hs;
            for (const auto& [k, v] : e.H) {
                u64 f = modp::mulm(modp::powm(u0, k.first, p), modp::powm(x0, k.second, p), p);
                Hs = modp::addp(Hs, modp::mul_scalar(v, f, p), p);
            }
            if (Hs.empty()) return std::nullopt;
            grid[ix][iu] = modp::resultantp(As, Hs, p);
        }
    }
    // interpolate in u per x-node, then in x
    std::vector<std::vector<u64>> ucoef(xnodes.size());
    for (std::size_t ix = 0; ix < xnodes.size(); ++ix) {
        PolyP f = modp::interpolate(unodes, grid[ix], p);
        f.resize(Du + 1, 0);
        ucoef[ix] = f;
    }
    CurveP out;
    out.p = p;
    out.cu.resize(Du + 1);
    for (int j = 0; j <= Du; ++j) {
        std::vector<u64> vals(xnodes.size());
        for (std::size_t ix = 0; ix < xnodes.size(); ++ix) vals[ix] = ucoef[ix][j];
        out.cu[j] = modp::interpolate(xnodes, vals, p);
    }
    while (!out.cu.empty() && out.cu.back().empty()) out.cu.pop_back();
    if (out.cu.empty()) return std::nullopt;
    // strip x-content
    {
        PolyP g;
        for (const auto& c : out.cu)
            if (!c.empty()) g = g.empty() ? c : modp::gcdp(g, c, p);
        if (modp::degp(g) > 0)
            for (auto& c : out.cu)
                if (!c.empty()) c = modp::divremp(c, g, p).first;
    }
    // u-squarefree part when needed (checked on a random slice)
    {
        u64 x0 = 12345;
        PolyP slice(out.cu.size(), 0);
        for (std::size_t j = 0; j < out.cu.size(); ++j) slice[j] = modp::evalp(out.cu[j], x0, p);
        modp::trimp(slice);
        if (modp::degp(slice) == static_cast<int>(out.cu.size()) - 1) {
            PolyP g = modp::gcdp(slice, modp::derivp(slice, p), p);
            if (modp::degp(g) > 0) {
                // rare path: peel repeated factors slice-wise and reinterpolate
                int target = modp::degp(slice) - modp::degp(g);
                std::vector<u64> xs2, lead;
                std::vector<std::vector<u64>> cols(target + 1);
                u64 v = 1;
                while (static_cast<int>(xs2.size()) < static_cast<int>(out.cu.size()) + 1 && v < p) {
                    PolyP sl(out.cu.size(), 0);
                    for (std::size_t j = 0; j < out.cu.size(); ++j)
                        sl[j] = modp::evalp(out.cu[j], v, p);
                    modp::trimp(sl);
                    ++v;
                    if (modp::degp(sl) != static_cast<int>(out.cu.size()) - 1) continue;
                    PolyP sf = modp::squarefree_partp(sl, p);
                    if (modp::degp(sf) != target) continue;
                    // scale by leading coefficient of the full curve at v
                    u64 lc = modp::evalp(out.cu.back(), v - 1, p);
                    sf = modp::mul_scalar(sf, lc, p);
                    xs2.push_back(v - 1);
                    sf.resize(target + 1, 0);
                    for (int j = 0; j <= target; ++j) cols[j].push_back(sf[j]);
                }
                if (static_cast<int>(xs2.size()) < static_cast<int>(out.cu.size()) + 1)
                    return std::nullopt;
                CurveP sq;
                sq.p = p;
                sq.cu.resize(target + 1);
                for (int j = 0; j <= target; ++j) sq.cu[j] = modp::interpolate(xs2, cols[j], p);
                // strip x-content again
                PolyP g2;
                for (const auto& c : sq.cu)
                    if (!c.empty()) g2 = g2.empty() ? c : modp::gcdp(g2, c, p);
                if (modp::degp(g2) > 0)
                    for (auto& c : sq.cu)
                        if (!c.empty()) c = modp::divremp(c, g2, p).first;
                out = sq;
            }
        }
    }
    // normalize: make the lexicographically largest coefficient 1
    u64 top = 0;
    for (std::size_t j = out.cu.size(); j-- > 0;) {
        if (!out.cu[j].empty()) {
            top = out.cu[j].back();
            break;
        }
    }
    if (top && top != 1) {
        u64 inv = modp::invm(top, p);
        for (auto& c : out.cu) c = modp::mul_scalar(c, inv, p);
    }
    return out;
}

ModStats modular_curve_stats(const ParamSolution& sol, int min_agree, unsigned jobs) {
    std::map<std::pair<int, int>, int> votes;
    std::map<std::pair<int, int>, int> terms_vote;
    std::size_t idx = 0;
    const auto& primes = modp::PRIMES62;
    while (idx < primes.size()) {
        std::size_t batch = std::min<std::size_t>(jobs > 1 ? jobs : 1, primes.size() - idx);
        auto results = parallel_map(batch, jobs, [&](std::size_t k) {
            return implicitize_modp(sol, primes[idx + k]);
        });
        idx += batch;
        for (const auto& c : results) {
            if (!c) continue;
            std::pair<int, int> bd{c->deg_u(), c->total_deg()};
            int n = ++votes[bd];
            terms_vote[bd] = std::max(terms_vote[bd], c->term_count());
            if (n >= min_agree) {
                ModStats st;
                st.b = bd.first;
                st.d = bd.second;
                st.terms = c->term_count();
                st.agreeing_primes = n;
                return st;
            }
        }
    }
    throw Error("modular_curve_stats: prime list exhausted without " +
                std::to_string(min_agree) + " agreeing primes for " + sol.id);
}

bool invariance_check_modp(const CurveP& c, const Homography& h) {
    u64 p = c.p;
    int du = c.deg_u(), dx = c.deg_x();
    // build substitution polynomials mod p as BivP over (U, X)
    auto lin = [&](long c0, long c1) {
        std::map<std::pair<int, int>, u64> m;
        auto red = [&](long v) { return v >= 0 ? static_cast<u64>(v) % p : p - (static_cast<u64>(-v) % p); };
        if (c0) m[{0, 0}] = red(c0);
        if (c1) m[{0, 1}] = red(c1);
        return m;
    };
    using SparseB = std::map<std::pair<int, int>, u64>;
    auto mulB = [&](const SparseB& a, const SparseB& b) {
        SparseB r;
        for (const auto& [ka, va] : a)
            for (const auto& [kb, vb] : b) {
                auto key = std::pair{ka.first + kb.first, ka.second + kb.second};
                r[key] = modp::addm(r[key], modp::mulm(va, vb, p), p);
            }
        return r;
    };
    auto addB = [&](SparseB a, const SparseB& b) {
        for (const auto& [k, v] : b) a[k] = modp::addm(a[k], v, p);
        return a;
    };
    SparseB AU = mulB(lin(h.um[0][0], h.um[0][1]), {{{1, 0}, 1}});
    SparseB AUB = addB(AU, lin(h.um[1][0], h.um[1][1]));
    SparseB CU = mulB(lin(h.um[2][0], h.um[2][1]), {{{1, 0}, 1}});
    SparseB CUD = addB(CU, lin(h.um[3][0], h.um[3][1]));
    SparseB xn = addB(mulB(lin(0, h.xm[0]), {{{0, 0}, 1}}), lin(h.xm[1], 0));
    SparseB xd = addB(mulB(lin(0, h.xm[2]), {{{0, 0}, 1}}), lin(h.xm[3], 0));
    std::vector<SparseB> pAU(du + 1), pCU(du + 1), pxn(dx + 1), pxd(dx + 1);
    pAU[0] = pCU[0] = pxn[0] = pxd[0] = SparseB{{{0, 0}, 1}};
    for (int i = 1; i <= du; ++i) {
        pAU[i] = mulB(pAU[i - 1], AUB);
        pCU[i] = mulB(pCU[i - 1], CUD);
    }
    for (int i = 1; i <= dx; ++i) {
        pxn[i] = mulB(pxn[i - 1], xn);
        pxd[i] = mulB(pxd[i - 1], xd);
    }
    SparseB acc;
    for (int j = 0; j < static_cast<int>(c.cu.size()); ++j) {
        for (int k = 0; k <= modp::degp(c.cu[j]); ++k) {
            u64 v = c.cu[j].size() > static_cast<std::size_t>(k) ? c.cu[j][k] : 0;
            if (!v) continue;
            SparseB piece = mulB(pAU[j], pCU[du - j]);
            piece = mulB(piece, mulB(pxn[k], pxd[dx - k]));
            for (auto& [kk, vv] : piece) {
                acc[kk] = modp::addm(acc[kk], modp::mulm(vv, v, p), p);
            }
        }
    }
    // strip monomial content and compare to c (up to scalar)
    int min_u = 1 << 30, min_x = 1 << 30;
    for (auto& [k, v] : acc)
        if (v) {
            min_u = std::min(min_u, k.first);
            min_x = std::min(min_x, k.second);
        }
    CurveP img;
    img.p = p;
    for (auto& [k, v] : acc) {
        if (!v) continue;
        int ju = k.first - min_u, jx = k.second - min_x;
        if (static_cast<int>(img.cu.size()) <= ju) img.cu.resize(ju + 1);
        auto& poly = img.cu[ju];
        if (static_cast<int>(poly.size()) <= jx) poly.resize(jx + 1, 0);
        poly[jx] = v;
    }
    for (auto& cpoly : img.cu) modp::trimp(cpoly);
    // x-content strip (the substitution may introduce polynomial content)
    {
        PolyP g;
        for (const auto& cc : img.cu)
            if (!cc.empty()) g = g.empty() ? cc : modp::gcdp(g, cc, p);
        if (modp::degp(g) > 0)
            for (auto& cc : img.cu)
                if (!cc.empty()) cc = modp::divremp(cc, g, p).first;
    }
    if (img.deg_u() != c.deg_u()) return false;
    // compare up to scalar
    u64 ta = 0, tb = 0;
    for (std::size_t j = img.cu.size(); j-- > 0;)
        if (!img.cu[j].empty()) {
            ta = img.cu[j].back();
            break;
        }
    for (std::size_t j = c.cu.size(); j-- > 0;)
        if (!c.cu[j].empty()) {
            tb = c.cu[j].back();
            break;
        }
    if (!ta || !tb) return false;
    u64 scale = modp::mulm(tb, modp::invm(ta, p), p);
    CurveP scaled = img;
    for (auto& cc : scaled.cu) cc = modp::mul_scalar(cc, scale, p);
    return scaled.cu == c.cu;
}

std::uint64_t curve_fingerprint(const CurveP& c) {
    std::uint64_t h = hash_combine(0x9e3779b9, c.p);
    h = hash_combine(h, c.deg_u());
    h = hash_combine(h, c.total_deg());
    h = hash_combine(h, c.term_count());
    // fixed evaluation points
    for (u64 u0 : {2ULL, 3ULL, 5ULL}) {
        for (u64 x0 : {7ULL, 11ULL}) {
            u64 acc = 0;
            for (std::size_t j = c.cu.size(); j-- > 0;) {
                acc = modp::mulm(acc, u0, c.p);
                acc = modp::addm(acc, modp::evalp(c.cu[j], x0, c.p), c.p);
            }
            h = hash_combine(h, acc);
        }
    }
    return h;
}

}  // namespace pvi
