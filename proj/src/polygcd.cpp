#include "pvi/modular.hpp"
#include "pvi/poly1.hpp"

namespace pvi {

namespace {

using modp::u64;

// One good prime proving the gcd is trivial: deg(gcd mod p) bounds
// deg(gcd) from above whenever p divides neither leading coefficient.
bool coprime_mod_one_prime(const Poly1& a, const Poly1& b) {
    for (std::size_t k = 0; k < 4; ++k) {
        modp::Reducer red(modp::PRIMES62[k]);
        auto A = red.poly(a.coeffs());
        auto B = red.poly(b.coeffs());
        if (!A || !B) continue;
        if (modp::degp(*A) != a.deg() || modp::degp(*B) != b.deg()) continue;
        return modp::degp(modp::gcdp(*A, *B, red.p)) == 0;
    }
    return false;
}

// Certified modular gcd over Q: CRT-lift gamma * monic-gcd images, verify by
// exact division.  Returns false when no conclusion was reached (caller
// falls back to the subresultant PRS).
bool modular_gcd_q(const Poly1& a, const Poly1& b, Poly1& out) {
    Rat sa, sb;
    std::vector<Int> A, B;
    try {
        A = clear_to_int(a, sa);
        B = clear_to_int(b, sb);
    } catch (const FieldMismatchError&) {
        return false;
    }
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
    int dmin = std::min(a.deg(), b.deg()) + 1;
    std::vector<modp::CrtAccum> acc;
    bool stable = false;
    for (std::size_t k = 0; k < modp::PRIMES62.size(); ++k) {
        u64 p = modp::PRIMES62[k];
        if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;
        modp::PolyP Ap(A.size()), Bp(B.size());
        for (std::size_t i = 0; i < A.size(); ++i) Ap[i] = mpz_fdiv_ui(A[i].get_mpz_t(), p);
        for (std::size_t i = 0; i < B.size(); ++i) Bp[i] = mpz_fdiv_ui(B[i].get_mpz_t(), p);
        auto G = modp::gcdp(Ap, Bp, p);
        int d = modp::degp(G);
        if (d == 0) {
            out = Poly1(FieldScalar(1));
            return true;
        }
        if (d > dmin) continue;  // bad prime
        if (d < dmin) {
            dmin = d;
            acc.assign(d + 1, {});
            stable = false;
        }
        u64 gmod = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        bool changed = false;
        for (int i = 0; i <= d; ++i) {
            if (acc[i].add(modp::mulm(G[i], gmod, p), p)) changed = true;
        }
        if (!changed && stable) {
            // candidate stabilized over two extra primes: verify
            std::vector<Int> C(d + 1);
            Int cont(0);
            for (int i = 0; i <= d; ++i) {
                C[i] = acc[i].value;
                mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), C[i].get_mpz_t());
            }
            if (cont != 0)
                for (auto& c : C) c /= cont;
            Poly1 cand = poly_from_int(C);
            try {
                std::ignore = exact_div(a, cand);
                std::ignore = exact_div(b, cand);
                out = cand.make_monic();
                return true;
            } catch (const Error&) {
                stable = false;  // keep adding primes
            }
        } else {
            stable = !changed;
        }
    }
    return false;
}

}  // namespace

bool gcd1_fast(const Poly1& a, const Poly1& b, Poly1& out) {
    if (coprime_mod_one_prime(a, b)) {
        out = Poly1(FieldScalar(1));
        return true;
    }
    long tag = a.field_tag() ? a.field_tag() : b.field_tag();
    if (tag == 0 && std::max(a.deg(), b.deg()) > 24) {
        if (modular_gcd_q(a, b, out)) return true;
    }
    return false;
}

}  // namespace pvi
