#include "pvi/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pvi {

using nlohmann::json;

namespace {

// squarefree decomposition (Yun): p = c * prod A_k^k, A_k monic squarefree
std::vector<std::pair<Poly1, int>> yun_decomposition(const Poly1& p) {
    std::vector<std::pair<Poly1, int>> out;
    Poly1 P = p.make_monic();
    Poly1 g = gcd1(P, P.derivative());
    if (g.deg() == 0) {
        out.emplace_back(P, 1);
        return out;
    }
    Poly1 w = exact_div(P, g);
    Poly1 y = exact_div(P.derivative(), g);
    Poly1 z = y - w.derivative();
    int i = 1;
    while (w.deg() > 0) {
        Poly1 h = gcd1(w, z);
        if (h.deg() > 0) out.emplace_back(h, i);
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// |n| = sq^2 * sf with sf squarefree (trial division; catalog constants are
// small, any cofactor beyond the trial bound is taken squarefree)
void square_split(Int n, Int& sq, Int& sf) {
    sq = 1;
    sf = 1;
    if (n < 0) {
        sf = -1;
        n = -n;
    }
    for (Int d(2); d * d <= n && d < 100000; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) sq *= d;
        if (e % 2) sf *= d;
    }
    sf *= n;  // leftover cofactor
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open catalog file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("catalog is not valid JSON: ") + e.what());
    }
    return j;
}

ThetaForm parse_theta(const json& arr, const std::string& id, const char* which) {
    if (!arr.is_array() || arr.size() != 4)
        throw SchemaError(id + ": " + which + " must be an array of 4 strings");
    ThetaForm f;
    for (int i = 0; i < 4; ++i) {
        try {
            f.slot[i] = parse_linform(arr[i].get<std::string>());
        } catch (const Error& e) {
            throw SchemaError(id + ": bad theta slot " + std::to_string(i) + ": " + e.what());
        }
    }
    return f;
}

}  // namespace

int hyperelliptic_genus(int radical_degree) { return (radical_degree - 1) / 2; }

Poly1 rescale_radical(const RatFun& expr, RatFun& scale) {
    if (!expr.is_polynomial())
        throw SchemaError("radical right-hand side must be polynomial: " + expr.str());
    Rat c;
    std::vector<Int> N = clear_to_int(expr.num(), c);  // expr = c * P, P primitive
    Poly1 P = poly_from_int(N);
    // P = lc * prod A_k^k with A_k monic squarefree
    auto dec = yun_decomposition(P);
    c *= Rat(P.lc().re());
    Poly1 Sm(FieldScalar(1)), Fm(FieldScalar(1));
    for (const auto& [A, k] : dec) {
        for (int j = 0; j < k / 2; ++j) Sm = Sm * A;
        if (k % 2) Fm = Fm * A;
    }
    Rat fs(1), ss(1);
    std::vector<Int> Fi{1}, Si{1};
    if (!Fm.is_constant() || !Fm.lc().is_one()) Fi = clear_to_int(Fm, fs);
    if (!Sm.is_constant() || !Sm.lc().is_one()) Si = clear_to_int(Sm, ss);
    // radicand = (c * fs) * (ss * Si)^2 * Fi
    c *= fs;
    // c = csq^2 * csf with csf a signed squarefree integer
    Int nsq, nsf, dsq, dsf;
    square_split(c.get_num(), nsq, nsf);
    square_split(c.get_den(), dsq, dsf);
    Rat csq(nsq, dsq * dsf);
    csq.canonicalize();
    Rat csf(nsf * dsf);
    Poly1 Pnew = poly_from_int(Fi) * FieldScalar(csf);
    // paper t = csq * ss * Si(s) * t_new
    scale = RatFun(poly_from_int(Si) * FieldScalar(csq * ss));
    // self-check: scale^2 * Pnew reproduces the printed radicand exactly
    if (!(scale * scale * RatFun(Pnew) == expr))
        throw Error("internal: radical rescaling inconsistent for " + expr.str());
    return Pnew;
}

ParamSolution CatalogEntry::solution(bool use_text_theta, const Rat& a, const Rat& b) const {
    ParamSolution s;
    s.id = id;
    const ThetaForm& f = use_text_theta && theta_differs ? theta_text : theta_table;
    s.theta = f.eval(a, b);
    s.x = x;
    s.u = u;
    s.genus_claim = genus;
    s.has_family = is_family();
    s.fam_a = a;
    s.fam_b = b;
    return s;
}

const CatalogEntry& Catalog::by_id(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw Error("no catalog entry with id " + id);
}

bool Catalog::has(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return true;
    return false;
}

Catalog load_catalog(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object() || !j.contains("schema"))
        throw SchemaError("catalog: missing schema field");
    if (j["schema"].get<int>() != 1) throw SchemaError("catalog: unsupported schema version");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty())
        throw SchemaError("catalog: missing or empty entries array");

    Catalog cat;
    for (const auto& je : j["entries"]) {
        CatalogEntry e;
        if (!je.contains("id")) throw SchemaError("entry without id");
        e.id = je["id"].get<std::string>();
        auto need = [&](const char* f) {
            if (!je.contains(f)) throw SchemaError(e.id + ": missing field " + f);
            return je[f];
        };
        e.lt = je.value("lt", 0);
        e.genus = need("genus").get<std::string>();
        if (e.genus != "0" && e.genus != "1" && e.genus != "H2" && e.genus != "H3" &&
            e.genus != "N3" && e.genus != "N7")
            throw SchemaError(e.id + ": bad genus tag " + e.genus);
        e.field = need("field").get<std::string>();
        e.b = need("b").get<int>();
        e.d_minus_b = need("d_minus_b").get<int>();
        e.terms = need("terms").get<int>();
        e.theta_table = parse_theta(need("theta_table"), e.id, "theta_table");
        if (je.contains("theta_text")) {
            e.theta_text = parse_theta(je["theta_text"], e.id, "theta_text");
            e.theta_differs = true;
        } else {
            e.theta_text = e.theta_table;
        }
        if (je.contains("radicals"))
            for (const auto& r : je["radicals"]) e.radicals_paper.push_back(r.get<std::string>());
        e.x_expr = need("x").get<std::string>();
        e.u_expr = need("u").get<std::string>();
        e.filiation = je.value("filiation", std::string());
        if (je.contains("siblings"))
            for (const auto& s : je["siblings"]) e.siblings.push_back(s.get<std::string>());
        if (je.contains("homographies")) {
            if (je["homographies"].is_string()) {
                if (je["homographies"].get<std::string>() != "all")
                    throw SchemaError(e.id + ": homographies must be an array or \"all\"");
                e.homographies_all = true;
                for (int h = 2; h <= 24; ++h) e.homographies.push_back(h);
            } else {
                for (const auto& h : je["homographies"]) {
                    int v = h.get<int>();
                    if (v < 2 || v > 24)
                        throw SchemaError(e.id + ": homography index out of range");
                    e.homographies.push_back(v);
                }
            }
        }
        if (je.contains("weierstrass")) {
            WeierstrassData w;
            const auto& jw = je["weierstrass"];
            w.alpha = parse_rat(jw.at("alpha").get<std::string>());
            w.beta = parse_rat(jw.at("beta").get<std::string>());
            w.gamma = parse_rat(jw.at("gamma").get<std::string>());
            if (jw.contains("g2")) {
                w.has_g = true;
                w.g2 = parse_rat(jw.at("g2").get<std::string>());
                w.g3 = parse_rat(jw.at("g3").get<std::string>());
            }
            e.weierstrass = w;
        }
        if (je.contains("space_curve")) {
            SpaceCurveData sc;
            const auto& js = je["space_curve"];
            sc.relation = js.at("relation").get<std::string>();
            sc.s_expr = js.at("s").get<std::string>();
            sc.t1_expr = js.at("t1").get<std::string>();
            sc.t2_expr = js.at("t2").get<std::string>();
            if (js.contains("binds"))
                for (auto it = js["binds"].begin(); it != js["binds"].end(); ++it)
                    sc.binds[it.key()] = it.value().get<std::string>();
            sc.sd_relation = js.value("sd_relation", std::string());
            sc.t1_sq = js.value("t1_sq", std::string());
            sc.t2_sq = js.value("t2_sq", std::string());
            e.space_curve = sc;
        }
        e.comment = je.value("comment", std::string());

        // ---- derive radicals and expressions ----
        std::vector<Poly1> rescaled;
        for (const auto& rs : e.radicals_paper) {
            FFElem re = parse_expr(rs, FFElem::no_radicals());
            RatFun sc;
            Poly1 P;
            try {
                P = rescale_radical(re.rational_part(), sc);
            } catch (const Error& err) {
                throw SchemaError(e.id + ": bad radical: " + err.what());
            }
            rescaled.push_back(P);
            e.t_scale.push_back(sc);
        }
        try {
            if (rescaled.empty())
                e.rad = FFElem::no_radicals();
            else if (rescaled.size() == 1)
                e.rad = std::make_shared<RadicalSet>(rescaled[0]);
            else if (rescaled.size() == 2)
                e.rad = std::make_shared<RadicalSet>(rescaled[0], rescaled[1]);
            else
                throw SchemaError(e.id + ": more than two radicals");
        } catch (const Error& err) {
            throw SchemaError(e.id + ": " + err.what());
        }
        ExprContext ctx;
        ctx.rad = e.rad;
        if (!e.t_scale.empty()) {
            FFElem t1 = FFElem(e.t_scale[0], e.rad) * FFElem::radical(e.rad, 0);
            ctx.symbols["t"] = t1;
            ctx.symbols["t1"] = t1;
        }
        if (e.t_scale.size() >= 2)
            ctx.symbols["t2"] = FFElem(e.t_scale[1], e.rad) * FFElem::radical(e.rad, 1);
        try {
            e.x = parse_expr(e.x_expr, ctx);
            e.u = parse_expr(e.u_expr, ctx);
        } catch (const ParseError& pe) {
            throw SchemaError(e.id + ": bad expression: " + std::string(pe.what()));
        }
        cat.entries.push_back(std::move(e));
    }

    // sibling cross-links: every referenced id exists, and siblings share
    // x and radicals
    for (const auto& e : cat.entries) {
        for (const auto& sid : e.siblings) {
            if (!cat.has(sid)) throw SchemaError(e.id + ": dangling sibling " + sid);
            const auto& s = cat.by_id(sid);
            if (!(s.x == e.x) || !(*s.rad == *e.rad))
                throw SchemaError(e.id + ": sibling " + sid + " does not share x/radicals");
        }
    }
    return cat;
}

std::string save_catalog(const Catalog& c) {
    json j;
    j["schema"] = 1;
    j["entries"] = json::array();
    for (const auto& e : c.entries) {
        json je;
        je["id"] = e.id;
        if (e.lt) je["lt"] = e.lt;
        je["genus"] = e.genus;
        je["field"] = e.field;
        je["b"] = e.b;
        je["d_minus_b"] = e.d_minus_b;
        je["terms"] = e.terms;
        auto theta_json = [](const ThetaForm& f) {
            json a = json::array();
            for (const auto& s : f.slot) a.push_back(s.str());
            return a;
        };
        je["theta_table"] = theta_json(e.theta_table);
        if (e.theta_differs) je["theta_text"] = theta_json(e.theta_text);
        if (!e.radicals_paper.empty()) je["radicals"] = e.radicals_paper;
        je["x"] = e.x_expr;
        je["u"] = e.u_expr;
        if (!e.filiation.empty()) je["filiation"] = e.filiation;
        if (!e.siblings.empty()) je["siblings"] = e.siblings;
        if (e.homographies_all)
            je["homographies"] = "all";
        else
            je["homographies"] = e.homographies;
        if (e.weierstrass) {
            json w;
            w["alpha"] = rat_str(e.weierstrass->alpha);
            w["beta"] = rat_str(e.weierstrass->beta);
            w["gamma"] = rat_str(e.weierstrass->gamma);
            if (e.weierstrass->has_g) {
                w["g2"] = rat_str(e.weierstrass->g2);
                w["g3"] = rat_str(e.weierstrass->g3);
            }
            je["weierstrass"] = w;
        }
        if (e.space_curve) {
            json sc;
            sc["relation"] = e.space_curve->relation;
            sc["s"] = e.space_curve->s_expr;
            sc["t1"] = e.space_curve->t1_expr;
            sc["t2"] = e.space_curve->t2_expr;
            if (!e.space_curve->binds.empty()) {
                json b;
                for (const auto& [k, v] : e.space_curve->binds) b[k] = v;
                sc["binds"] = b;
            }
            if (!e.space_curve->sd_relation.empty())
                sc["sd_relation"] = e.space_curve->sd_relation;
            if (!e.space_curve->t1_sq.empty()) sc["t1_sq"] = e.space_curve->t1_sq;
            if (!e.space_curve->t2_sq.empty()) sc["t2_sq"] = e.space_curve->t2_sq;
            je["space_curve"] = sc;
        }
        if (!e.comment.empty()) je["comment"] = e.comment;
        j["entries"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("PVI_CATALOG")) return env;
#ifdef PVI_DATA_DIR
    return std::string(PVI_DATA_DIR) + "/solutions48.json";
#else
    return "data/solutions48.json";
#endif
}

}  // namespace pvi
