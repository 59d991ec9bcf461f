#ifndef PVI_MODULAR_HPP
#define PVI_MODULAR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pvi/field.hpp"
#include "pvi/gauss.hpp"

namespace pvi {
namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Fixed list of 62-bit primes, all = 1 (mod 4) so that sqrt(-1) exists and
// Q(i) coefficients reduce to plain residues.
extern const std::vector<u64> PRIMES62;

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 powm(u64 a, u64 e, u64 p);
inline u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }
inline u64 negm(u64 a, u64 p) { return a ? p - a : 0; }

// smallest-nonresidue^((p-1)/4): a square root of -1 mod p (p = 1 mod 4)
u64 sqrt_minus1(u64 p);

// ---- dense polynomials mod p, ascending coefficients ----
using PolyP = std::vector<u64>;

void trimp(PolyP& a);
inline int degp(const PolyP& a) { return static_cast<int>(a.size()) - 1; }
PolyP addp(const PolyP& a, const PolyP& b, u64 p);
PolyP subp(const PolyP& a, const PolyP& b, u64 p);
PolyP mulp(const PolyP& a, const PolyP& b, u64 p);
PolyP mul_scalar(PolyP a, u64 k, u64 p);
PolyP remp(PolyP a, const PolyP& b, u64 p);
std::pair<PolyP, PolyP> divremp(const PolyP& a, const PolyP& b, u64 p);
PolyP derivp(const PolyP& a, u64 p);
u64 evalp(const PolyP& a, u64 x, u64 p);
PolyP monicp(PolyP a, u64 p);
PolyP gcdp(PolyP a, PolyP b, u64 p);
u64 resultantp(PolyP a, PolyP b, u64 p);
// squarefree part a / gcd(a, a')
PolyP squarefree_partp(const PolyP& a, u64 p);

// Newton interpolation: nodes distinct mod p.
PolyP interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

// Reduction of exact scalars mod p (i mapped to sqrt(-1)).
// Fails (nullopt) when a denominator vanishes mod p.
struct Reducer {
    u64 p;
    u64 root_i;  // sqrt(-1) mod p
    explicit Reducer(u64 prime);
    std::optional<u64> rat(const Rat& r) const;
    std::optional<u64> scalar(const FieldScalar& s) const;
    std::optional<PolyP> poly(const std::vector<FieldScalar>& coeffs) const;
};

// CRT: combine residue x (mod p) into accumulator (value, modulus), keeping
// the symmetric representative.  Returns false if already consistent
// (i.e. the accumulator did not change).
struct CrtAccum {
    Int value{0};
    Int modulus{1};
    // returns true if the combined value changed
    bool add(u64 x, u64 p);
};

}  // namespace modp
}  // namespace pvi

#endif
