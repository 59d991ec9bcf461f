#include "pvi/spacecurve.hpp"

namespace pvi {

PolyFrac pf_const(FieldScalar c) {
    PolyFrac f;
    f.num = Poly2::constant(std::move(c));
    return f;
}

PolyFrac pf_add(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r;
    r.num = a.num * b.den + b.num * a.den;
    r.den = a.den * b.den;
    return r;
}
PolyFrac pf_sub(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r;
    r.num = a.num * b.den - b.num * a.den;
    r.den = a.den * b.den;
    return r;
}
PolyFrac pf_mul(const PolyFrac& a, const PolyFrac& b) {
    PolyFrac r;
    r.num = a.num * b.num;
    r.den = a.den * b.den;
    return r;
}
PolyFrac pf_div(const PolyFrac& a, const PolyFrac& b) {
    if (b.num.is_zero()) throw DivisionByZeroError("space-curve expression divides by zero");
    PolyFrac r;
    r.num = a.num * b.den;
    r.den = a.den * b.num;
    return r;
}
PolyFrac pf_neg(const PolyFrac& a) {
    PolyFrac r = a;
    r.num = -r.num;
    return r;
}
PolyFrac pf_pow(PolyFrac a, long e) {
    PolyFrac r = pf_const(FieldScalar(1));
    while (e > 0) {
        if (e & 1) r = pf_mul(r, a);
        e >>= 1;
        if (e) a = pf_mul(a, a);
    }
    return r;
}

namespace {

// compose a univariate polynomial with a PolyFrac argument
PolyFrac compose_poly(const Poly1& P, const PolyFrac& arg) {
    PolyFrac acc = pf_const(FieldScalar(0));
    for (int k = P.deg(); k >= 0; --k) {
        acc = pf_mul(acc, arg);
        if (!P.coeff(k).is_zero()) acc = pf_add(acc, pf_const(P.coeff(k)));
    }
    return acc;
}

}  // namespace

bool vanishes_on_relation(const PolyFrac& f, const Poly2& rel) {
    // pseudo-remainder of num by rel with respect to the first variable
    Poly2 n = f.num;
    if (n.is_zero()) return true;
    int dr = rel.deg_u();
    auto rel_cj = rel.u_coeffs();
    Poly1 lead = rel_cj.back();
    while (!n.is_zero() && n.deg_u() >= dr) {
        auto ncj = n.u_coeffs();
        int dn = n.deg_u();
        Poly1 nl = ncj.back();
        // n <- n*lead - nl * u^(dn-dr) * rel
        Poly2 scaled;
        for (std::size_t j = 0; j < ncj.size(); ++j) {
            Poly1 prod = ncj[j] * lead;
            for (int k = 0; k <= prod.deg(); ++k)
                if (!prod.coeff(k).is_zero())
                    scaled += Poly2::term(static_cast<int>(j), k, prod.coeff(k));
        }
        Poly2 sub;
        for (std::size_t j = 0; j < rel_cj.size(); ++j) {
            Poly1 prod = rel_cj[j] * nl;
            for (int k = 0; k <= prod.deg(); ++k)
                if (!prod.coeff(k).is_zero())
                    sub += Poly2::term(static_cast<int>(j) + dn - dr, k, prod.coeff(k));
        }
        n = scaled - sub;
    }
    return n.is_zero();
}

SpaceCurveResult space_curve_identities(const CatalogEntry& entry) {
    SpaceCurveResult out;
    if (!entry.space_curve) {
        out.witness = "entry carries no space-curve data";
        return out;
    }
    const SpaceCurveData& sc = *entry.space_curve;
    std::map<std::string, PolyFrac> env;
    for (const auto& [name, expr] : sc.binds) env[name] = parse_polyfrac(expr, env);
    PolyFrac rel = parse_polyfrac(sc.relation, env);
    if (rel.den.total_deg() != 0) throw Error("space-curve relation must be polynomial");
    Poly2 R = rel.num;

    PolyFrac t2 = parse_polyfrac(sc.t2_expr, env);
    env["t2"] = t2;
    PolyFrac t1 = parse_polyfrac(sc.t1_expr, env);
    PolyFrac s = parse_polyfrac(sc.s_expr, env);

    // radicals as printed alongside the space-curve data
    std::vector<std::string> rstrs;
    if (!sc.t1_sq.empty() && !sc.t2_sq.empty()) {
        rstrs = {sc.t1_sq, sc.t2_sq};
    } else {
        rstrs = entry.radicals_paper;
    }
    std::vector<RatFun> rads;
    for (const auto& rstr : rstrs)
        rads.push_back(parse_expr(rstr, FFElem::no_radicals()).rational_part());
    if (rads.size() != 2) {
        out.witness = "space-curve check needs two radicals";
        return out;
    }
    auto check = [&](const PolyFrac& t, const RatFun& P) {
        PolyFrac Pn = compose_poly(P.num(), s);
        PolyFrac Pd = compose_poly(P.den(), s);
        PolyFrac Ps = pf_div(Pn, Pd);
        PolyFrac diff = pf_sub(pf_mul(t, t), Ps);
        return vanishes_on_relation(diff, R);
    };
    out.t1_ok = check(t1, rads[0]);
    out.t2_ok = check(t2, rads[1]);
    if (!sc.sd_relation.empty()) {
        PolyFrac aux = parse_polyfrac(sc.sd_relation, env);
        out.aux_ok = vanishes_on_relation(aux, R);
    }
    out.pass = out.t1_ok && out.t2_ok && out.aux_ok;
    if (!out.pass)
        out.witness = std::string(out.t1_ok ? "" : "t1 ") + (out.t2_ok ? "" : "t2 ") +
                      (out.aux_ok ? "" : "aux ") + "identity fails";
    return out;
}

}  // namespace pvi
