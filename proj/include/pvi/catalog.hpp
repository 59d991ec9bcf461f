#ifndef PVI_CATALOG_HPP
#define PVI_CATALOG_HPP

#include <map>
#include <optional>
#include <vector>

#include "pvi/parser.hpp"
#include "pvi/solution.hpp"

namespace pvi {

struct WeierstrassData {
    Rat alpha, beta, gamma;  // s = alpha*w + beta, t = gamma*w'
    bool has_g = false;
    Rat g2, g3;
};

struct SpaceCurveData {
    std::string relation;                      // plane-curve relation in (p,q)
    std::map<std::string, std::string> binds;  // e.g. S, D for the octic case
    std::string sd_relation;                   // optional auxiliary relation
    std::string s_expr, t1_expr, t2_expr;
    // radicals the substitutions refer to, when they differ from the entry's
    // own (printed forms kept alongside a reconstructed entry)
    std::string t1_sq, t2_sq;
};

struct CatalogEntry {
    std::string id;
    int lt = 0;  // 0 = unnumbered (families II, III, IV)
    std::string genus;
    std::string field;
    int b = 0, d_minus_b = 0, terms = 0;
    ThetaForm theta_table, theta_text;
    bool theta_differs = false;
    std::vector<std::string> radicals_paper;  // as printed
    std::string x_expr, u_expr;               // as printed
    std::string filiation;
    std::vector<std::string> siblings;
    std::vector<int> homographies;  // invariance column, identity omitted
    bool homographies_all = false;
    std::optional<WeierstrassData> weierstrass;
    std::optional<SpaceCurveData> space_curve;
    std::string comment;

    // derived at load time
    RadicalSetPtr rad;             // rescaled, squarefree, integer radicals
    std::vector<RatFun> t_scale;   // paper t_i = t_scale[i] * rescaled t_i
    FFElem x, u;                   // parsed with rescaled radicals

    bool is_family() const { return !theta_table.is_const(); }
    // instantiate a ParamSolution; family parameters default to (1/3, 1/5)
    ParamSolution solution(bool use_text_theta = false, const Rat& a = Rat(1, 3),
                           const Rat& b = Rat(1, 5)) const;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    const CatalogEntry& by_id(const std::string& id) const;
    bool has(const std::string& id) const;
};

Catalog load_catalog(const std::string& path);
std::string save_catalog(const Catalog& c);  // JSON text, round-trips

// PVI_CATALOG env override, else the bundled data file
std::string default_catalog_path();

// t^2 = expr, rescaled so the radical polynomial is integer, primitive up to
// a squarefree integer content, and squarefree.  Returns the new radical
// polynomial and sets scale so that  t_paper = scale(s) * t_new.
Poly1 rescale_radical(const RatFun& expr, RatFun& scale);

// genus of a squarefree hyperelliptic radical of degree d: ceil(d/2) - 1
int hyperelliptic_genus(int radical_degree);

// family parameter samples used for verification
inline std::pair<Rat, Rat> family_sample(int k) {
    return k == 0 ? std::pair{Rat(1, 3), Rat(1, 5)} : std::pair{Rat(2, 7), Rat(3, 11)};
}

}  // namespace pvi

#endif
