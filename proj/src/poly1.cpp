#include "pvi/poly1.hpp"

#include <sstream>

#include "pvi/prs.hpp"

namespace pvi {

Poly1 Poly1::monomial(int deg, FieldScalar c) {
    Poly1 p;
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, FieldScalar());
    p.c_[deg] = std::move(c);
    return p;
}

const FieldScalar& Poly1::lc() const {
    static const FieldScalar zero{};
    return c_.empty() ? zero : c_.back();
}

Poly1 Poly1::operator-() const {
    Poly1 r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] = a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

Poly1 operator-(const Poly1& a, const Poly1& b) {
    Poly1 r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] = a.c_[i];
        if (i < b.c_.size()) r.c_[i] -= b.c_[i];
    }
    r.trim();
    return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    Poly1 r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldScalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly1 Poly1::operator*(const FieldScalar& k) const {
    if (k.is_zero()) return Poly1();
    Poly1 r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly1 Poly1::derivative() const {
    Poly1 r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * FieldScalar(static_cast<long>(i));
    r.trim();
    return r;
}

FieldScalar Poly1::eval(const FieldScalar& x) const {
    FieldScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::shifted(int k) const {
    if (is_zero()) return Poly1();
    Poly1 r;
    r.c_.assign(c_.size() + k, FieldScalar());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Poly1 Poly1::translate(const FieldScalar& c) const {
    // Horner: p(s+c)
    Poly1 r;
    Poly1 lin(std::vector<FieldScalar>{c, FieldScalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * lin + Poly1(*it);
    }
    return r;
}

Poly1 Poly1::reciprocal() const {
    Poly1 r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

Poly1 Poly1::make_monic() const {
    if (is_zero()) return *this;
    return *this * lc().inv();
}

long Poly1::field_tag() const {
    for (const auto& c : c_)
        if (c.m() != 0) return c.m();
    return 0;
}

std::string Poly1::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg(); k >= 0; --k) {
        const FieldScalar c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool needs_paren = cs.find('+') != std::string::npos ||
                           (cs.find('-', 1) != std::string::npos);
        if (!first) os << (cs[0] == '-' && !needs_paren ? "" : "+");
        first = false;
        if (k == 0) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (c.is_one()) {
        } else if (needs_paren) {
            os << "(" << cs << ")*";
        } else {
            os << cs << "*";
        }
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::uint64_t Poly1::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (const auto& c : c_) h = hash_combine(h, c.hash());
    return h;
}

std::pair<Poly1, Poly1> divrem(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly1 q, r = a;
    FieldScalar linv = b.lc().inv();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        FieldScalar t = r.lc() * linv;
        int k = r.deg() - b.deg();
        Poly1 m = Poly1::monomial(k, t);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

Poly1 exact_div(const Poly1& a, const Poly1& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

std::vector<Int> clear_to_int(const Poly1& p, Rat& scale) {
    std::vector<Int> out;
    if (p.is_zero()) {
        scale = 0;
        return out;
    }
    Int l(1);
    for (const auto& c : p.coeffs()) {
        if (c.m() != 0) throw FieldMismatchError("clear_to_int on non-rational polynomial");
        Int den = c.re().get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    out.reserve(p.coeffs().size());
    Int content(0);
    for (const auto& c : p.coeffs()) {
        Rat v = c.re() * Rat(l);
        out.push_back(v.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (content == 0) content = 1;
    if (out.back() < 0) content = -content;
    for (auto& v : out) v /= content;
    scale = Rat(content, l);
    scale.canonicalize();
    return out;
}

std::vector<GaussInt> clear_to_gauss(const Poly1& p, FieldScalar& scale) {
    std::vector<GaussInt> out;
    if (p.is_zero()) {
        scale = FieldScalar();
        return out;
    }
    Int l(1);
    for (const auto& c : p.coeffs()) {
        if (c.m() != 0 && c.m() != -1)
            throw FieldMismatchError("clear_to_gauss expects Q or Q(i) coefficients");
        for (const Rat* r : {&c.re(), &c.im()}) {
            Int den = r->get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
    }
    out.reserve(p.coeffs().size());
    GaussInt content;
    for (const auto& c : p.coeffs()) {
        Rat re = c.re() * Rat(l), im = c.im() * Rat(l);
        out.emplace_back(re.get_num(), im.get_num());
        content = gauss_gcd(content, out.back());
    }
    if (content.is_zero()) content = GaussInt(Int(1));
    for (auto& v : out) v = gauss_exact_div(v, content);
    // canonical sign on the leading coefficient
    GaussInt unit;
    GaussInt lead = gauss_canonical(out.back(), &unit);
    if (!(unit == GaussInt(Int(1)))) {
        for (auto& v : out) v = v * unit;
        content = gauss_exact_div(content, unit);  // content * unit^-1... adjust below
    }
    // p = scale * out with scale = content/l as a field scalar
    Rat invl(1, l);
    invl.canonicalize();
    FieldScalar cs(Rat(content.re), Rat(content.im), content.im == 0 ? 0 : -1);
    scale = cs * FieldScalar(invl);
    return out;
}

Poly1 poly_from_int(const std::vector<Int>& v) {
    std::vector<FieldScalar> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(Rat(x));
    return Poly1(std::move(c));
}

Poly1 poly_from_gauss(const std::vector<GaussInt>& v) {
    std::vector<FieldScalar> c;
    c.reserve(v.size());
    for (const auto& x : v)
        c.emplace_back(Rat(x.re), Rat(x.im), x.im == 0 ? 0 : -1);
    return Poly1(std::move(c));
}

namespace {

// deg-0 shortcut and modular gcd live in polygcd.cpp
Poly1 gcd_via_prs(const Poly1& a, const Poly1& b) {
    long tag = a.field_tag() ? a.field_tag() : b.field_tag();
    if (tag == 0) {
        Rat sa, sb;
        auto A = clear_to_int(a, sa);
        auto B = clear_to_int(b, sb);
        IntRing ring;
        auto G = prs_gcd_raw<IntRing>(A, B, ring);
        // primitive part
        Int content(0);
        for (auto& c : G) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (content != 0)
            for (auto& c : G) c /= content;
        return poly_from_int(G).make_monic();
    }
    FieldScalar sa, sb;
    auto A = clear_to_gauss(a, sa);
    auto B = clear_to_gauss(b, sb);
    GaussRing ring;
    auto G = prs_gcd_raw<GaussRing>(A, B, ring);
    GaussInt content;
    for (auto& c : G) content = gauss_gcd(content, c);
    if (!content.is_zero())
        for (auto& c : G) c = gauss_exact_div(c, content);
    return poly_from_gauss(G).make_monic();
}

}  // namespace

// implemented in polygcd.cpp: returns true + result when a fast path applies
bool gcd1_fast(const Poly1& a, const Poly1& b, Poly1& out);

Poly1 gcd1(const Poly1& a, const Poly1& b) {
    if (a.is_zero()) return b.make_monic();
    if (b.is_zero()) return a.make_monic();
    if (a.deg() == 0 || b.deg() == 0) return Poly1(FieldScalar(1));
    Poly1 fast;
    if (gcd1_fast(a, b, fast)) return fast;
    return gcd_via_prs(a, b);
}

bool is_squarefree(const Poly1& p) {
    if (p.is_zero()) return false;
    if (p.deg() <= 1) return true;
    return gcd1(p, p.derivative()).deg() == 0;
}

Poly1 squarefree_part(const Poly1& p) {
    if (p.deg() <= 1) return p.make_monic();
    return exact_div(p, gcd1(p, p.derivative())).make_monic();
}

FieldScalar resultant1(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) throw Error("resultant of zero polynomial");
    long tag = a.field_tag() ? a.field_tag() : b.field_tag();
    if (tag == 0 || tag == -1) {
        FieldScalar sa, sb;
        auto A = clear_to_gauss(a, sa);
        auto B = clear_to_gauss(b, sb);
        GaussRing ring;
        GaussInt r = prs_resultant<GaussRing>(A, B, ring);
        FieldScalar rs(Rat(r.re), Rat(r.im), r.im == 0 ? 0 : -1);
        // res(sa*A, sb*B) = sa^degB sb^degA res(A,B)
        FieldScalar fa(1), fb(1);
        for (int i = 0; i < b.deg(); ++i) fa *= sa;
        for (int i = 0; i < a.deg(); ++i) fb *= sb;
        return rs * fa * fb;
    }
    // generic tag: run PRS over the field directly
    FieldRing ring;
    std::vector<FieldScalar> A = a.coeffs(), B = b.coeffs();
    return prs_resultant<FieldRing>(A, B, ring);
}

FieldScalar discriminant1(const Poly1& p) {
    if (p.deg() < 1) throw Error("discriminant needs degree >= 1");
    FieldScalar r = resultant1(p, p.derivative());
    FieldScalar lcinv = p.lc().inv();
    int n = p.deg();
    // disc = (-1)^{n(n-1)/2} res(p, p') / lc
    FieldScalar d = r * lcinv;
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2) d = -d;
    return d;
}

std::vector<FieldScalar> rational_roots(const Poly1& p) {
    std::vector<FieldScalar> roots;
    if (p.is_zero() || p.field_tag() != 0) return roots;
    Rat scale;
    auto v = clear_to_int(p, scale);
    // strip trailing zeros => root 0
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k > 0) roots.push_back(FieldScalar(0));
    if (k >= v.size() - 0 || v.size() - k <= 1) return roots;
    std::vector<Int> w(v.begin() + k, v.end());
    Int a0 = w.front(), an = w.back();
    auto divisors = [](Int n) {
        std::vector<Int> ds;
        n = abs(n);
        for (Int d(1); d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        return ds;
    };
    Poly1 q = poly_from_int(w);
    for (const auto& pnum : divisors(a0)) {
        for (const auto& pden : divisors(an)) {
            for (int sgn : {1, -1}) {
                Rat cand(sgn * pnum, pden);
                cand.canonicalize();
                FieldScalar c(cand);
                if (q.eval(c).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), c) == roots.end())
                        roots.push_back(c);
                }
            }
        }
    }
    return roots;
}

}  // namespace pvi
