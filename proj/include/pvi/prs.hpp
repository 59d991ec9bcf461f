#ifndef PVI_PRS_HPP
#define PVI_PRS_HPP

#include <utility>
#include <vector>

#include "pvi/util.hpp"

namespace pvi {

// Generic dense univariate polynomial helpers over a ring context R.
// R provides:  using E;  E zero(); E one(); bool is_zero(const E&);
//              E add(a,b); E sub(a,b); E neg(a); E mul(a,b);
//              E exact_div(a,b)   (division known to be exact).
// Vectors store coefficients in ascending degree and are kept trimmed.

template <class R>
using PolyVec = std::vector<typename R::E>;

template <class R>
void prs_trim(PolyVec<R>& a, R& ring) {
    while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <class R>
int prs_deg(const PolyVec<R>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class R>
typename R::E prs_pow(typename R::E base, long e, R& ring) {
    typename R::E r = ring.one();
    while (e > 0) {
        if (e & 1) r = ring.mul(r, base);
        e >>= 1;
        if (e) base = ring.mul(base, base);
    }
    return r;
}

// Pseudo-remainder: lc(B)^(degA-degB+1) * A  mod  B.
template <class R>
PolyVec<R> prs_prem(PolyVec<R> A, const PolyVec<R>& B, R& ring) {
    int db = prs_deg<R>(B);
    if (db < 0) throw Error("pseudo-division by zero polynomial");
    const typename R::E& lb = B.back();
    int e = prs_deg<R>(A) - db + 1;
    while (prs_deg<R>(A) >= db) {
        int da = prs_deg<R>(A);
        typename R::E la = A.back();
        for (int i = 0; i < da; ++i) A[i] = ring.mul(A[i], lb);
        A.pop_back();
        int shift = da - db;
        for (int i = 0; i < db; ++i) {
            A[shift + i] = ring.sub(A[shift + i], ring.mul(la, B[i]));
        }
        prs_trim<R>(A, ring);
        --e;
    }
    if (e > 0) {
        typename R::E f = prs_pow<R>(B.back(), e, ring);
        for (auto& c : A) c = ring.mul(c, f);
    }
    return A;
}

// Resultant by the subresultant PRS (coefficient growth stays controlled,
// divisions are exact in the ring).
template <class R>
typename R::E prs_resultant(PolyVec<R> A, PolyVec<R> B, R& ring) {
    prs_trim<R>(A, ring);
    prs_trim<R>(B, ring);
    if (A.empty() || B.empty()) throw Error("resultant of zero polynomial");
    bool negate = false;
    if (prs_deg<R>(A) < prs_deg<R>(B)) {
        std::swap(A, B);
        if ((prs_deg<R>(A) & 1) && (prs_deg<R>(B) & 1)) negate = true;
    }
    if (prs_deg<R>(B) == 0)
        return prs_pow<R>(B[0], prs_deg<R>(A), ring);

    typename R::E g = ring.one();
    typename R::E h = ring.one();
    typename R::E sign = ring.one();
    if (negate) sign = ring.neg(sign);

    for (;;) {
        int da = prs_deg<R>(A), db = prs_deg<R>(B);
        long delta = da - db;
        if ((da & 1) && (db & 1)) sign = ring.neg(sign);
        PolyVec<R> Rm = prs_prem<R>(A, B, ring);
        A = std::move(B);
        if (Rm.empty()) return ring.zero();
        typename R::E divisor = ring.mul(g, prs_pow<R>(h, delta, ring));
        for (auto& c : Rm) c = ring.exact_div(c, divisor);
        B = std::move(Rm);
        g = A.back();
        // h <- h^(1-delta) g^delta
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = ring.exact_div(prs_pow<R>(g, delta, ring), prs_pow<R>(h, delta - 1, ring));
        }
        if (prs_deg<R>(B) == 0) {
            long dA = prs_deg<R>(A);
            // res = h^(1-dA) lc(B)^dA  (times accumulated sign)
            typename R::E t = prs_pow<R>(B[0], dA, ring);
            typename R::E res =
                dA <= 1 ? t : ring.exact_div(t, prs_pow<R>(h, dA - 1, ring));
            return ring.mul(sign, res);
        }
    }
}

// Subresultant remainder sequence; returns the last nonzero element (a gcd
// up to content) or an empty vector when B | A.
template <class R>
PolyVec<R> prs_gcd_raw(PolyVec<R> A, PolyVec<R> B, R& ring) {
    prs_trim<R>(A, ring);
    prs_trim<R>(B, ring);
    if (A.empty()) return B;
    if (B.empty()) return A;
    if (prs_deg<R>(A) < prs_deg<R>(B)) std::swap(A, B);
    typename R::E g = ring.one();
    typename R::E h = ring.one();
    for (;;) {
        long delta = prs_deg<R>(A) - prs_deg<R>(B);
        PolyVec<R> Rm = prs_prem<R>(A, B, ring);
        if (Rm.empty()) return B;
        typename R::E divisor = ring.mul(g, prs_pow<R>(h, delta, ring));
        for (auto& c : Rm) c = ring.exact_div(c, divisor);
        A = std::move(B);
        B = std::move(Rm);
        if (prs_deg<R>(B) == 0) return B;
        g = A.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = ring.exact_div(prs_pow<R>(g, delta, ring), prs_pow<R>(h, delta - 1, ring));
    }
}

// Fraction-free determinant (Bareiss).  Used as the small-degree test oracle
// for resultants via the Sylvester matrix.
template <class R>
typename R::E bareiss_det(std::vector<PolyVec<R>>& M, R& ring) {
    std::size_t n = M.size();
    if (n == 0) return ring.one();
    typename R::E prev = ring.one();
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(M[k][k])) {
            std::size_t j = k + 1;
            while (j < n && ring.is_zero(M[j][k])) ++j;
            if (j == n) return ring.zero();
            std::swap(M[k], M[j]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                typename R::E t = ring.sub(ring.mul(M[i][j], M[k][k]),
                                           ring.mul(M[i][k], M[k][j]));
                M[i][j] = ring.exact_div(t, prev);
            }
            M[i][k] = ring.zero();
        }
        prev = M[k][k];
    }
    return neg ? ring.neg(M[n - 1][n - 1]) : M[n - 1][n - 1];
}

}  // namespace pvi

#endif
