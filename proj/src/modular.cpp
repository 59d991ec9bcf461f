#include "pvi/modular.hpp"

namespace pvi {
namespace modp {

namespace {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powm(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> build_primes() {
    // primes just below 2^62, congruent to 1 mod 4
    std::vector<u64> ps;
    u64 top = (1ULL << 62) - 3;
    u64 n = top | 1;
    while (ps.size() < 64) {
        if (n % 4 == 1 && is_prime_u64(n)) ps.push_back(n);
        n -= 2;
    }
    return ps;
}

}  // namespace

const std::vector<u64> PRIMES62 = build_primes();

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 sqrt_minus1(u64 p) {
    for (u64 g = 2;; ++g) {
        if (powm(g, (p - 1) / 2, p) == p - 1) {
            return powm(g, (p - 1) / 4, p);
        }
    }
}

void trimp(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP addp(const PolyP& a, const PolyP& b, u64 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 v = i < a.size() ? a[i] : 0;
        if (i < b.size()) v = addm(v, b[i], p);
        r[i] = v;
    }
    trimp(r);
    return r;
}

PolyP subp(const PolyP& a, const PolyP& b, u64 p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 v = i < a.size() ? a[i] : 0;
        if (i < b.size()) v = subm(v, b[i], p);
        r[i] = v;
    }
    trimp(r);
    return r;
}

PolyP mulp(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
        }
    }
    trimp(r);
    return r;
}

PolyP mul_scalar(PolyP a, u64 k, u64 p) {
    for (auto& c : a) c = mulm(c, k, p);
    trimp(a);
    return a;
}

PolyP remp(PolyP a, const PolyP& b, u64 p) {
    if (b.empty()) throw DivisionByZeroError("poly mod by zero");
    u64 linv = invm(b.back(), p);
    while (degp(a) >= degp(b)) {
        u64 t = mulm(a.back(), linv, p);
        int shift = degp(a) - degp(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = subm(a[shift + i], mulm(t, b[i], p), p);
        }
        trimp(a);
    }
    return a;
}

std::pair<PolyP, PolyP> divremp(const PolyP& a, const PolyP& b, u64 p) {
    if (b.empty()) throw DivisionByZeroError("poly division by zero");
    PolyP r = a, q;
    if (degp(a) >= degp(b)) q.assign(a.size() - b.size() + 1, 0);
    u64 linv = invm(b.back(), p);
    while (degp(r) >= degp(b)) {
        u64 t = mulm(r.back(), linv, p);
        int shift = degp(r) - degp(b);
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = subm(r[shift + i], mulm(t, b[i], p), p);
        trimp(r);
    }
    trimp(q);
    return {q, r};
}

PolyP derivp(const PolyP& a, u64 p) {
    if (a.size() <= 1) return {};
    PolyP r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p, p);
    trimp(r);
    return r;
}

u64 evalp(const PolyP& a, u64 x, u64 p) {
    u64 acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = addm(mulm(acc, x, p), *it, p);
    return acc;
}

PolyP monicp(PolyP a, u64 p) {
    if (a.empty()) return a;
    u64 linv = invm(a.back(), p);
    for (auto& c : a) c = mulm(c, linv, p);
    return a;
}

PolyP gcdp(PolyP a, PolyP b, u64 p) {
    trimp(a);
    trimp(b);
    while (!b.empty()) {
        PolyP r = remp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monicp(a, p);
}

u64 resultantp(PolyP a, PolyP b, u64 p) {
    trimp(a);
    trimp(b);
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    bool neg = false;
    if (degp(a) < degp(b)) {
        if ((degp(a) & 1) && (degp(b) & 1)) neg = !neg;
        std::swap(a, b);
    }
    while (degp(b) > 0) {
        PolyP r = remp(a, b, p);
        int da = degp(a), db = degp(b), dr = degp(r);
        // res(a,b) = (-1)^{da db} lc(b)^{da-dr} res(b,r)
        if ((da & 1) && (db & 1)) neg = !neg;
        res = mulm(res, powm(b.back(), da - (dr < 0 ? 0 : dr), p), p);
        if (r.empty()) {
            // common factor unless b was the last constant
            return 0;
        }
        a = std::move(b);
        b = std::move(r);
    }
    // b constant
    res = mulm(res, powm(b[0], degp(a), p), p);
    return neg ? negm(res, p) : res;
}

PolyP squarefree_partp(const PolyP& a, u64 p) {
    if (degp(a) <= 1) return monicp(a, p);
    PolyP g = gcdp(a, derivp(a, p), p);
    if (degp(g) == 0) return monicp(a, p);
    // exact division a / g
    PolyP q;
    PolyP r = a;
    u64 linv = invm(g.back(), p);
    q.assign(a.size() - g.size() + 1, 0);
    while (degp(r) >= degp(g)) {
        u64 t = mulm(r.back(), linv, p);
        int shift = degp(r) - degp(g);
        q[shift] = t;
        for (std::size_t i = 0; i < g.size(); ++i)
            r[shift + i] = subm(r[shift + i], mulm(t, g[i], p), p);
        trimp(r);
    }
    return monicp(q, p);
}

PolyP interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    // Newton divided differences
    std::size_t n = xs.size();
    std::vector<u64> coef(ys);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            u64 num = subm(coef[i], coef[i - 1], p);
            u64 den = subm(xs[i], xs[i - j], p);
            coef[i] = mulm(num, invm(den, p), p);
            if (i == j) break;
        }
    }
    PolyP r;
    for (std::size_t i = n; i-- > 0;) {
        // r = r*(x - xs[i]) + coef[i]
        PolyP nr(r.size() + 1, 0);
        for (std::size_t k = 0; k < r.size(); ++k) {
            nr[k + 1] = addm(nr[k + 1], r[k], p);
            nr[k] = subm(nr[k], mulm(r[k], xs[i], p), p);
        }
        if (nr.empty()) nr.assign(1, 0);
        nr[0] = addm(nr[0], coef[i], p);
        r = std::move(nr);
        trimp(r);
    }
    return r;
}

Reducer::Reducer(u64 prime) : p(prime), root_i(sqrt_minus1(prime)) {}

std::optional<u64> Reducer::rat(const Rat& r) const {
    Int num = r.get_num(), den = r.get_den();
    u64 d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) return std::nullopt;
    u64 n = mpz_fdiv_ui(num.get_mpz_t(), p);  // floor-mod, already in [0,p)
    return mulm(n, invm(d, p), p);
}

std::optional<u64> Reducer::scalar(const FieldScalar& s) const {
    auto a = rat(s.re());
    if (!a) return std::nullopt;
    if (s.m() == 0) return a;
    if (s.m() != -1) throw FieldMismatchError("modular reduction only supports m in {0,-1}");
    auto b = rat(s.im());
    if (!b) return std::nullopt;
    return addm(*a, mulm(*b, root_i, p), p);
}

std::optional<PolyP> Reducer::poly(const std::vector<FieldScalar>& coeffs) const {
    PolyP r;
    r.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        auto v = scalar(c);
        if (!v) return std::nullopt;
        r.push_back(*v);
    }
    trimp(r);
    return r;
}

bool CrtAccum::add(u64 x, u64 p) {
    // value' = value + modulus * k,  k = (x - value)/modulus mod p
    Int pz(static_cast<unsigned long>(p));
    // value mod p
    Int vmod = value % pz;
    if (vmod < 0) vmod += pz;
    u64 v = mpz_get_ui(vmod.get_mpz_t());
    Int mmod = modulus % pz;
    if (mmod < 0) mmod += pz;
    u64 m = mpz_get_ui(mmod.get_mpz_t());
    u64 k = mulm(subm(x % p, v, p), invm(m, p), p);
    Int nv = value + modulus * Int(static_cast<unsigned long>(k));
    Int nm = modulus * pz;
    // symmetric representative
    if (2 * nv > nm) nv -= nm;
    if (2 * nv < -nm) nv += nm;
    bool changed = (nv != value);
    value = nv;
    modulus = nm;
    return changed;
}

}  // namespace modp
}  // namespace pvi
