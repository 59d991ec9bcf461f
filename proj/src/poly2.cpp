#include "pvi/poly2.hpp"

#include <algorithm>
#include <sstream>

#include "pvi/prs.hpp"

namespace pvi {

Poly2 Poly2::term(int du, int dx, FieldScalar c) {
    Poly2 p;
    if (!c.is_zero()) p.t_.emplace_back(key(du, dx), std::move(c));
    return p;
}

Poly2 Poly2::from_x_poly(const Poly1& p) {
    Poly2 r;
    for (int k = 0; k <= p.deg(); ++k) {
        FieldScalar c = p.coeff(k);
        if (!c.is_zero()) r.t_.emplace_back(key(0, k), std::move(c));
    }
    return r;
}

Poly2 Poly2::from_u_coeffs(const std::vector<Poly1>& cj) {
    Poly2Builder b;
    for (std::size_t j = 0; j < cj.size(); ++j)
        for (int k = 0; k <= cj[j].deg(); ++k)
            if (!cj[j].coeff(k).is_zero()) b.add(static_cast<int>(j), k, cj[j].coeff(k));
    return b.build();
}

int Poly2::deg_u() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, static_cast<int>(k >> 32));
    return d;
}

int Poly2::deg_x() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, static_cast<int>(k & 0xffffffffu));
    return d;
}

int Poly2::total_deg() const {
    int d = 0;
    for (const auto& [k, c] : t_)
        d = std::max(d, static_cast<int>(k >> 32) + static_cast<int>(k & 0xffffffffu));
    return d;
}

std::vector<Poly2::Term> Poly2::terms() const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [k, c] : t_)
        out.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), c});
    return out;
}

FieldScalar Poly2::coeff(int du, int dx) const {
    std::uint64_t k = key(du, dx);
    auto it = std::lower_bound(t_.begin(), t_.end(), k,
                               [](const auto& t, std::uint64_t v) { return t.first < v; });
    if (it != t_.end() && it->first == k) return it->second;
    return FieldScalar();
}

long Poly2::field_tag() const {
    for (const auto& [k, c] : t_)
        if (c.m() != 0) return c.m();
    return 0;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
        if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
            r.t_.push_back(a.t_[i++]);
        } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
            r.t_.push_back(b.t_[j++]);
        } else {
            FieldScalar c = a.t_[i].second + b.t_[j].second;
            if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    Poly2Builder acc;
    for (const auto& [ka, ca] : a.t_) {
        int dua = static_cast<int>(ka >> 32), dxa = static_cast<int>(ka & 0xffffffffu);
        for (const auto& [kb, cb] : b.t_) {
            int dub = static_cast<int>(kb >> 32), dxb = static_cast<int>(kb & 0xffffffffu);
            acc.add(dua + dub, dxa + dxb, ca * cb);
        }
    }
    return acc.build();
}

Poly2 Poly2::operator*(const FieldScalar& k) const {
    if (k.is_zero()) return Poly2();
    Poly2 r = *this;
    for (auto& [kk, c] : r.t_) c *= k;
    return r;
}

int Poly2::cmp(const Poly2& a, const Poly2& b) {
    // compare from the lex-largest term downward
    std::size_t i = a.t_.size(), j = b.t_.size();
    while (i > 0 && j > 0) {
        --i;
        --j;
        if (a.t_[i].first != b.t_[j].first) return a.t_[i].first < b.t_[j].first ? -1 : 1;
        const FieldScalar &ca = a.t_[i].second, &cb = b.t_[j].second;
        if (ca != cb) {
            if (ca.re() != cb.re()) return ca.re() < cb.re() ? -1 : 1;
            return ca.im() < cb.im() ? -1 : 1;
        }
    }
    if (i == 0 && j == 0) return 0;
    return i == 0 ? -1 : 1;
}

Poly2 Poly2::deriv_u() const {
    Poly2 r;
    for (const auto& [k, c] : t_) {
        int du = static_cast<int>(k >> 32), dx = static_cast<int>(k & 0xffffffffu);
        if (du > 0) r.t_.emplace_back(key(du - 1, dx), c * FieldScalar(du));
    }
    return r;
}

Poly2 Poly2::deriv_x() const {
    Poly2 r;
    for (const auto& [k, c] : t_) {
        int du = static_cast<int>(k >> 32), dx = static_cast<int>(k & 0xffffffffu);
        if (dx > 0) r.t_.emplace_back(key(du, dx - 1), c * FieldScalar(dx));
    }
    // same du order, dx shifted: still sorted
    return r;
}

FieldScalar Poly2::eval(const FieldScalar& u, const FieldScalar& x) const {
    FieldScalar acc;
    for (const auto& t : terms()) {
        FieldScalar v = t.c;
        for (int i = 0; i < t.du; ++i) v *= u;
        for (int i = 0; i < t.dx; ++i) v *= x;
        acc += v;
    }
    return acc;
}

Poly1 Poly2::eval_x(const FieldScalar& x) const {
    std::vector<FieldScalar> c(deg_u() + 1, FieldScalar());
    // group by du; within each du terms are sorted by dx ascending
    std::size_t i = 0;
    while (i < t_.size()) {
        int du = static_cast<int>(t_[i].first >> 32);
        // Horner needs descending dx; collect then evaluate
        std::vector<std::pair<int, const FieldScalar*>> grp;
        while (i < t_.size() && static_cast<int>(t_[i].first >> 32) == du) {
            grp.emplace_back(static_cast<int>(t_[i].first & 0xffffffffu), &t_[i].second);
            ++i;
        }
        FieldScalar acc;
        int prev = -1;
        for (auto it = grp.rbegin(); it != grp.rend(); ++it) {
            if (prev >= 0)
                for (int k = 0; k < prev - it->first; ++k) acc *= x;
            acc += *(it->second);
            prev = it->first;
        }
        for (int k = 0; k < prev; ++k) acc *= x;
        c[du] = acc;
    }
    return Poly1(std::move(c));
}

std::vector<Poly1> Poly2::u_coeffs() const {
    std::vector<std::vector<FieldScalar>> cj(deg_u() + 1);
    for (const auto& [k, c] : t_) {
        int du = static_cast<int>(k >> 32), dx = static_cast<int>(k & 0xffffffffu);
        auto& v = cj[du];
        if (static_cast<int>(v.size()) <= dx) v.resize(dx + 1, FieldScalar());
        v[dx] = c;
    }
    std::vector<Poly1> out;
    out.reserve(cj.size());
    for (auto& v : cj) out.emplace_back(std::move(v));
    return out;
}

Poly1 Poly2::content_x() const {
    Poly1 g;
    for (const auto& cj : u_coeffs()) {
        if (cj.is_zero()) continue;
        g = gcd1(g, cj);
        if (g.deg() == 0) return g;
    }
    return g;
}

Poly2 Poly2::exact_div(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw DivisionByZeroError("bivariate division by zero");
    Poly2 r = a, q;
    const auto& [kb, cb] = b.t_.back();
    int dub = static_cast<int>(kb >> 32), dxb = static_cast<int>(kb & 0xffffffffu);
    while (!r.is_zero()) {
        const auto& [ka, ca] = r.t_.back();
        int dua = static_cast<int>(ka >> 32), dxa = static_cast<int>(ka & 0xffffffffu);
        if (dua < dub || dxa < dxb) throw Error("inexact bivariate division");
        Poly2 m = Poly2::term(dua - dub, dxa - dxb, ca / cb);
        q += m;
        r -= m * b;
    }
    return q;
}

void Poly2Builder::add(int du, int dx, const FieldScalar& c) {
    if (c.is_zero()) return;
    acc_.emplace_back((static_cast<std::uint64_t>(du) << 32) | static_cast<std::uint32_t>(dx), c);
}

Poly2 Poly2Builder::build() {
    std::sort(acc_.begin(), acc_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Poly2 p;
    std::size_t i = 0;
    while (i < acc_.size()) {
        std::uint64_t k = acc_[i].first;
        FieldScalar c = acc_[i].second;
        ++i;
        while (i < acc_.size() && acc_[i].first == k) {
            c += acc_[i].second;
            ++i;
        }
        if (!c.is_zero()) p.t_.emplace_back(k, std::move(c));
    }
    acc_.clear();
    return p;
}

std::string Poly2::str(const std::string& uvar, const std::string& xvar) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto ts = terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        std::string cs = it->c.str();
        bool needs_paren = cs.find_first_of("+*", 1) != std::string::npos ||
                           cs.find('-', 1) != std::string::npos || cs == "i" || cs == "-i";
        if (!first && !(cs[0] == '-' && !needs_paren)) os << "+";
        first = false;
        bool unit = (it->c.is_one() || (it->c == -FieldScalar(1)));
        bool has_var = it->du > 0 || it->dx > 0;
        if (!has_var) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (unit) {
            if (it->c == -FieldScalar(1)) os << "-";
        } else {
            os << (needs_paren ? "(" + cs + ")" : cs) << "*";
        }
        if (it->du > 0) {
            os << uvar;
            if (it->du > 1) os << "^" << it->du;
            if (it->dx > 0) os << "*";
        }
        if (it->dx > 0) {
            os << xvar;
            if (it->dx > 1) os << "^" << it->dx;
        }
    }
    return os.str();
}

std::uint64_t Poly2::hash() const {
    std::uint64_t h = 0xabcdef;
    for (const auto& [k, c] : t_) {
        h = hash_combine(h, k);
        h = hash_combine(h, c.hash());
    }
    return h;
}

Poly2 normalize_curve(const Poly2& p) {
    if (p.is_zero()) return p;
    // clear all denominators
    Int l(1);
    for (const auto& [k, c] : p.raw()) {
        for (const Rat* r : {&c.re(), &c.im()}) {
            Int den = r->get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
    }
    // gcd content (Gaussian when needed)
    bool gauss = p.field_tag() == -1;
    Poly2 q = p * FieldScalar(Rat(l));
    if (!gauss) {
        Int content(0);
        for (const auto& [k, c] : q.raw())
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.re().get_num().get_mpz_t());
        if (content == 0) content = 1;
        if (q.raw().back().second.re() < 0) content = -content;
        return q * FieldScalar(Rat(Int(1), content));
    }
    GaussInt content;
    for (const auto& [k, c] : q.raw())
        content = gauss_gcd(content, GaussInt(c.re().get_num(), c.im().get_num()));
    if (content.is_zero()) content = GaussInt(Int(1));
    FieldScalar cinv = FieldScalar(Rat(content.re), Rat(content.im),
                                   content.im == 0 ? 0 : -1).inv();
    q = q * cinv;
    // unit-normalize on the lex-largest term: re > 0, im >= 0
    const FieldScalar& top = q.raw().back().second;
    GaussInt t(top.re().get_num(), top.im().get_num());
    GaussInt unit;
    gauss_canonical(t, &unit);
    FieldScalar ufs(Rat(unit.re), Rat(unit.im), unit.im == 0 ? 0 : -1);
    return q * ufs;
}

CurveStats curve_stats(const Poly2& p) {
    CurveStats st;
    st.b = p.deg_u();
    st.d = p.total_deg();
    st.terms = static_cast<int>(p.term_count());
    st.gaussian = p.field_tag() == -1;
    Poly1 lead;
    auto cj = p.u_coeffs();
    if (!cj.empty()) lead = cj.back();
    st.monic_in_u = lead.deg() == 0 && lead.lc().is_one();
    return st;
}

Poly2 resultant_s(const PolyS& a, const PolyS& b) {
    Poly2Ring ring;
    std::vector<Poly2> A = a, B = b;
    prs_trim<Poly2Ring>(A, ring);
    prs_trim<Poly2Ring>(B, ring);
    if (A.empty() || B.empty()) throw Error("resultant_s of zero polynomial");
    if (prs_deg<Poly2Ring>(A) < 1 || prs_deg<Poly2Ring>(B) < 1)
        throw Error("resultant_s needs positive degree in s");
    Poly2 r = prs_resultant<Poly2Ring>(A, B, ring);
    if (r.is_zero()) return r;
    // strip polynomial content in x and numeric content, keeping the sign
    Poly1 cx = r.content_x();
    if (cx.deg() > 0) {
        Poly2 cpoly = Poly2::from_x_poly(cx);
        r = Poly2::exact_div(r, cpoly);
    }
    bool neg = r.raw().back().second.re() < 0;
    Poly2 nrm = normalize_curve(r);
    return neg ? -nrm : nrm;
}

Poly2 resultant_s_sylvester(const PolyS& a, const PolyS& b) {
    Poly2Ring ring;
    std::vector<Poly2> A = a, B = b;
    prs_trim<Poly2Ring>(A, ring);
    prs_trim<Poly2Ring>(B, ring);
    int m = prs_deg<Poly2Ring>(A), n = prs_deg<Poly2Ring>(B);
    if (m < 0 || n < 0) throw Error("resultant of zero polynomial");
    std::size_t N = m + n;
    std::vector<std::vector<Poly2>> M(N, std::vector<Poly2>(N, Poly2()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = A[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = B[n - j];
    return bareiss_det<Poly2Ring>(M, ring);
}

}  // namespace pvi
