#include "pvi/residual.hpp"

#include "pvi/modular.hpp"

namespace pvi {

namespace {

// The cleared residual, written once against an abstract element type.
// Ops supplies ring arithmetic, d/ds and embedding of rational constants.
template <class Ops>
typename Ops::E residual_cleared(const typename Ops::E& u, const typename Ops::E& x,
                                 const std::array<Rat, 4>& th2, Ops& ops) {
    using E = typename Ops::E;
    E w = ops.deriv(u);
    E Dx = ops.deriv(x);
    E wp = ops.deriv(w);
    E Dp = ops.deriv(Dx);
    E one = ops.constant(Rat(1));
    E um1 = ops.sub(u, one);
    E umx = ops.sub(u, x);
    E xm1 = ops.sub(x, one);
    E xx = ops.mul(ops.mul(x, x), ops.mul(xm1, xm1));  // x^2 (x-1)^2
    E two = ops.constant(Rat(2));

    E a1 = ops.mul(ops.mul(two, ops.mul(u, ops.mul(um1, umx))),
                   ops.mul(xx, ops.sub(ops.mul(wp, Dx), ops.mul(w, Dp))));
    E s1n = ops.add(ops.add(ops.mul(um1, umx), ops.mul(u, umx)), ops.mul(u, um1));
    E a2 = ops.mul(ops.mul(s1n, xx), ops.mul(Dx, ops.mul(w, w)));
    // S2n = x(x-1) [ (x-1)(u-x) + x(u-x) + x(x-1) ]
    E s2n = ops.mul(ops.mul(x, xm1),
                    ops.add(ops.add(ops.mul(xm1, umx), ops.mul(x, umx)), ops.mul(x, xm1)));
    E a3 = ops.mul(ops.mul(two, ops.mul(u, um1)), ops.mul(s2n, ops.mul(ops.mul(Dx, Dx), w)));
    E u2 = ops.mul(u, u);
    E um1_2 = ops.mul(um1, um1);
    E umx_2 = ops.mul(umx, umx);
    E gn = ops.sub(ops.mul(ops.constant(th2[0]), ops.mul(u2, ops.mul(um1_2, umx_2))),
                   ops.mul(ops.constant(th2[1]), ops.mul(x, ops.mul(um1_2, umx_2))));
    gn = ops.add(gn, ops.mul(ops.constant(th2[2]), ops.mul(xm1, ops.mul(u2, umx_2))));
    gn = ops.add(gn, ops.mul(ops.constant(1 - th2[3]),
                             ops.mul(ops.mul(x, xm1), ops.mul(u2, um1_2))));
    E a4 = ops.mul(gn, ops.mul(Dx, ops.mul(Dx, Dx)));
    return ops.sub(ops.add(ops.sub(a1, a2), a3), a4);
}

struct ExactOps {
    using E = FFElem;
    RadicalSetPtr rad;
    E constant(const Rat& r) const { return FFElem(RatFun(FieldScalar(r)), rad); }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E deriv(const E& a) const { return a.d_ds(); }
};

// ---- mod-p mirror ----

using modp::PolyP;
using modp::u64;

struct FpRat {
    PolyP n, d;  // d monic, gcd-free
};

struct FpFF {
    std::array<FpRat, 4> c;
};

struct FpOps {
    using E = FpFF;
    u64 p;
    PolyP P1, P2;
    int nrad;

    FpRat rzero() const { return {{}, {1}}; }

    FpRat rreduce(PolyP n, PolyP d) const {
        modp::trimp(n);
        modp::trimp(d);
        if (d.empty()) throw DegenerateError("zero denominator mod p");
        if (n.empty()) return {{}, {1}};
        PolyP g = modp::gcdp(n, d, p);
        if (modp::degp(g) > 0) {
            n = modp::divremp(n, g, p).first;
            d = modp::divremp(d, g, p).first;
        }
        if (d.back() != 1) {
            u64 inv = modp::invm(d.back(), p);
            for (auto& c : n) c = modp::mulm(c, inv, p);
            for (auto& c : d) c = modp::mulm(c, inv, p);
        }
        return {n, d};
    }

    FpRat radd(const FpRat& a, const FpRat& b) const {
        return rreduce(modp::addp(modp::mulp(a.n, b.d, p), modp::mulp(b.n, a.d, p), p),
                       modp::mulp(a.d, b.d, p));
    }
    FpRat rsub(const FpRat& a, const FpRat& b) const {
        return rreduce(modp::subp(modp::mulp(a.n, b.d, p), modp::mulp(b.n, a.d, p), p),
                       modp::mulp(a.d, b.d, p));
    }
    FpRat rmul(const FpRat& a, const FpRat& b) const {
        return rreduce(modp::mulp(a.n, b.n, p), modp::mulp(a.d, b.d, p));
    }
    FpRat rderiv(const FpRat& a) const {
        return rreduce(modp::subp(modp::mulp(modp::derivp(a.n, p), a.d, p),
                                  modp::mulp(a.n, modp::derivp(a.d, p), p), p),
                       modp::mulp(a.d, a.d, p));
    }

    E constant(const Rat& r) const {
        modp::Reducer red(p);
        auto v = red.rat(r);
        if (!v) throw DegenerateError("constant collides with prime");
        E e{};
        for (auto& c : e.c) c = rzero();
        if (*v) e.c[0] = {{*v}, {1}};
        return e;
    }
    E add(const E& a, const E& b) const {
        E r;
        for (int k = 0; k < 4; ++k) r.c[k] = radd(a.c[k], b.c[k]);
        return r;
    }
    E sub(const E& a, const E& b) const {
        E r;
        for (int k = 0; k < 4; ++k) r.c[k] = rsub(a.c[k], b.c[k]);
        return r;
    }
    E mul(const E& a, const E& b) const {
        E r;
        for (auto& c : r.c) c = rzero();
        FpRat p1{P1, {1}}, p2{P2, {1}};
        const auto& x = a.c;
        const auto& y = b.c;
        r.c[0] = rmul(x[0], y[0]);
        if (nrad >= 1) r.c[0] = radd(r.c[0], rmul(p1, rmul(x[1], y[1])));
        if (nrad >= 2) {
            r.c[0] = radd(r.c[0], rmul(p2, rmul(x[2], y[2])));
            r.c[0] = radd(r.c[0], rmul(rmul(p1, p2), rmul(x[3], y[3])));
        }
        if (nrad >= 1) {
            r.c[1] = radd(rmul(x[0], y[1]), rmul(x[1], y[0]));
            if (nrad >= 2)
                r.c[1] = radd(r.c[1], rmul(p2, radd(rmul(x[2], y[3]), rmul(x[3], y[2]))));
        }
        if (nrad >= 2) {
            r.c[2] = radd(radd(rmul(x[0], y[2]), rmul(x[2], y[0])),
                          rmul(p1, radd(rmul(x[1], y[3]), rmul(x[3], y[1]))));
            r.c[3] = radd(radd(rmul(x[0], y[3]), rmul(x[3], y[0])),
                          radd(rmul(x[1], y[2]), rmul(x[2], y[1])));
        }
        return r;
    }
    E deriv(const E& a) const {
        E r;
        for (auto& c : r.c) c = rzero();
        r.c[0] = rderiv(a.c[0]);
        if (nrad >= 1) {
            FpRat l1 = rreduce(modp::derivp(P1, p), modp::mul_scalar(P1, 2, p));
            r.c[1] = radd(rderiv(a.c[1]), rmul(a.c[1], l1));
            if (nrad >= 2) {
                FpRat l2 = rreduce(modp::derivp(P2, p), modp::mul_scalar(P2, 2, p));
                r.c[2] = radd(rderiv(a.c[2]), rmul(a.c[2], l2));
                r.c[3] = radd(rderiv(a.c[3]), rmul(a.c[3], radd(l1, l2)));
            }
        }
        return r;
    }

    bool is_zero(const E& a) const {
        for (const auto& c : a.c)
            if (!c.n.empty()) return false;
        return true;
    }
};

std::array<Rat, 4> theta_squares(const ThetaQuadruple& t) {
    return {t[0] * t[0], t[1] * t[1], t[2] * t[2], t[3] * t[3]};
}

bool reduce_ff(const FFElem& e, const modp::Reducer& red, FpOps& ops, FpFF& out) {
    for (int k = 0; k < 4; ++k) {
        auto n = red.poly(e.c(k).num().coeffs());
        auto d = red.poly(e.c(k).den().coeffs());
        if (!n || !d || d->empty()) return false;
        out.c[k] = ops.rreduce(*n, *d);
    }
    return true;
}

void check_preconditions(const ParamSolution& sol) {
    if (sol.x.d_ds().is_zero())
        throw DegenerateError("degenerate parametrization: dx/ds = 0 for " + sol.id);
    FFElem one(RatFun(FieldScalar(1)), sol.u.rad());
    if (sol.u.is_zero() || (sol.u - one).is_zero() || (sol.u - sol.x).is_zero())
        throw DegenerateError("singular solution: u in {0,1,x} for " + sol.id);
}

}  // namespace

FFElem pvi_residual(const ParamSolution& sol) {
    check_preconditions(sol);
    ExactOps ops{sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad() : sol.u.rad()};
    return residual_cleared(sol.u, sol.x, theta_squares(sol.theta), ops);
}

bool pvi_residual_is_zero(const ParamSolution& sol) { return pvi_residual(sol).is_zero(); }

bool pvi_residual_probably_zero(const ParamSolution& sol, int samples) {
    check_preconditions(sol);
    const RadicalSetPtr& rad =
        sol.x.rad()->count() >= sol.u.rad()->count() ? sol.x.rad() : sol.u.rad();
    int done = 0;
    for (std::size_t k = 0; k < modp::PRIMES62.size() && done < samples; ++k) {
        modp::Reducer red(modp::PRIMES62[k]);
        FpOps ops;
        ops.p = red.p;
        ops.nrad = rad->count();
        if (ops.nrad >= 1) {
            auto p1 = red.poly(rad->p1().coeffs());
            if (!p1) continue;
            ops.P1 = *p1;
        }
        if (ops.nrad >= 2) {
            auto p2 = red.poly(rad->p2().coeffs());
            if (!p2) continue;
            ops.P2 = *p2;
        }
        FpFF u, x;
        if (!reduce_ff(sol.u, red, ops, u)) continue;
        if (!reduce_ff(sol.x, red, ops, x)) continue;
        FpFF r;
        try {
            r = residual_cleared(u, x, theta_squares(sol.theta), ops);
        } catch (const DegenerateError&) {
            continue;
        }
        if (!ops.is_zero(r)) return false;
        ++done;
    }
    return true;
}

}  // namespace pvi
