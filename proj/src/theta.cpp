#include "pvi/theta.hpp"

#include <algorithm>
#include <sstream>

namespace pvi {

std::string ThetaQuadruple::str() const {
    std::ostringstream os;
    os << "(" << rat_str(v[0]) << "," << rat_str(v[1]) << "," << rat_str(v[2]) << ","
       << rat_str(v[3]) << ")";
    return os.str();
}

SignMask SignMask::from_code(unsigned code) {
    SignMask m;
    for (int i = 0; i < 4; ++i) m.flip[i] = (code >> i) & 1u;
    return m;
}

unsigned SignMask::code() const {
    unsigned c = 0;
    for (int i = 0; i < 4; ++i)
        if (flip[i]) c |= 1u << i;
    return c;
}

std::string SignMask::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) s += flip[i] ? '-' : '+';
    return s;
}

PviCoeffs theta_to_coeffs(const ThetaQuadruple& t) {
    PviCoeffs c;
    c.alpha = t[0] * t[0] / 2;
    c.beta = -t[1] * t[1] / 2;
    c.gamma = t[2] * t[2] / 2;
    c.delta = (1 - t[3] * t[3]) / 2;
    return c;
}

ThetaQuadruple sign_change(const SignMask& m, const ThetaQuadruple& t) {
    ThetaQuadruple r = t;
    for (int i = 0; i < 4; ++i)
        if (m.flip[i]) r[i] = -r[i];
    return r;
}

ThetaQuadruple permute_theta(const std::array<int, 4>& perm, const ThetaQuadruple& t) {
    ThetaQuadruple r;
    for (int i = 0; i < 4; ++i) r[perm[i]] = t[i];
    return r;
}

ThetaQuadruple okamoto_theta(const ThetaQuadruple& t) {
    Rat shift = Rat(1, 2) - t.sum() / 2;
    ThetaQuadruple r = t;
    for (int i = 0; i < 4; ++i) r[i] += shift;
    return r;
}

ThetaQuadruple canonical_theta(const ThetaQuadruple& t) {
    ThetaQuadruple best;
    bool have = false;
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
        for (unsigned code = 0; code < 16; ++code) {
            ThetaQuadruple cand;
            bool nonneg = true;
            for (int i = 0; i < 4; ++i) {
                Rat v = t[idx[i]];
                if ((code >> i) & 1u) v = -v;
                if (v < 0) {
                    nonneg = false;
                    break;
                }
                cand[i] = v;
            }
            if (!nonneg) continue;
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

std::string LinForm::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const Rat& c, const char* sym) {
        if (c == 0) return;
        std::string cs = rat_str(c);
        if (any && cs[0] != '-') os << "+";
        if (!sym) {
            os << cs;
        } else if (c == 1) {
            os << sym;
        } else if (c == -1) {
            os << "-" << sym;
        } else {
            os << cs << "*" << sym;
        }
        any = true;
    };
    emit(c0, nullptr);
    emit(ca, "a");
    emit(cb, "b");
    if (!any) return "0";
    return os.str();
}

bool ThetaForm::is_const() const {
    return slot[0].is_const() && slot[1].is_const() && slot[2].is_const() && slot[3].is_const();
}

ThetaQuadruple ThetaForm::eval(const Rat& a, const Rat& b) const {
    ThetaQuadruple t;
    for (int i = 0; i < 4; ++i) t[i] = slot[i].eval(a, b);
    return t;
}

bool ThetaForm::uses_a() const {
    for (const auto& s : slot)
        if (s.ca != 0) return true;
    return false;
}

bool ThetaForm::uses_b() const {
    for (const auto& s : slot)
        if (s.cb != 0) return true;
    return false;
}

}  // namespace pvi
