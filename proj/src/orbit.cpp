#include "pvi/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "pvi/folding.hpp"
#include "pvi/residual.hpp"

namespace pvi {

ParamSolution apply_token(const ParamSolution& sol, const std::string& token) {
    if (token.empty()) throw Error("empty transform token");
    if (token == "ok") return okamoto_apply(sol);
    if (token == "q4") return apply_quartic(sol);
    if (token[0] == 'h') {
        int k = std::stoi(token.substr(1));
        return apply_homography(homography(k), sol);
    }
    if (token[0] == 's' && token.size() == 5) {
        SignMask m;
        for (int i = 0; i < 4; ++i) {
            if (token[1 + i] == '-')
                m.flip[i] = true;
            else if (token[1 + i] != '+')
                throw Error("bad sign mask token: " + token);
        }
        ParamSolution out = sol;
        out.theta = sign_change(m, sol.theta);
        return out;
    }
    throw Error("unknown transform token: " + token);
}

ParamSolution apply_script(const ParamSolution& sol, const std::string& script) {
    ParamSolution cur = sol;
    std::size_t i = 0;
    while (i < script.size()) {
        std::size_t j = script.find(',', i);
        if (j == std::string::npos) j = script.size();
        std::string tok = script.substr(i, j - i);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (!tok.empty()) cur = apply_token(cur, tok);
        i = j + 1;
    }
    return cur;
}

namespace {

struct DedupKey {
    ThetaQuadruple canon;
    std::uint64_t fp;
    bool operator<(const DedupKey& o) const {
        if (fp != o.fp) return fp < o.fp;
        return canon < o.canon;
    }
};

struct StateEval {
    bool ok = false;
    ModStats stats;
    std::uint64_t fp = 0;
};

StateEval eval_state(const ParamSolution& sol, int min_agree) {
    StateEval ev;
    // fingerprint from the first good prime's curve; stats voted
    try {
        ModStats st = modular_curve_stats(sol, min_agree);
        ev.stats = st;
    } catch (const Error&) {
        return ev;
    }
    for (modp::u64 p : modp::PRIMES62) {
        auto c = implicitize_modp(sol, p);
        if (c) {
            ev.fp = curve_fingerprint(*c);
            break;
        }
    }
    ev.ok = true;
    return ev;
}

bool better(const ModStats& a, const ModStats& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.terms < b.terms;
}

}  // namespace

OrbitResult orbit_search(const ParamSolution& start, const OrbitOptions& opt) {
    if (!pvi_residual_probably_zero(start, 1))
        throw Error("orbit_search: start fails the PVI residual screen");
    OrbitResult res;
    std::mt19937_64 rng(0xC0FFEE ^ start.theta.sum().get_num().get_si());
    std::set<DedupKey> seen;
    std::vector<OrbitState> layer;

    auto spot_check = [&](const ParamSolution& s) {
        if (opt.residual_spot_percent > 0 &&
            rng() % 100 < static_cast<unsigned>(opt.residual_spot_percent)) {
            if (!pvi_residual_probably_zero(s, 1))
                throw Error("orbit_search: explored state fails the residual screen");
        }
    };

    OrbitState s0;
    s0.sol = start;
    StateEval ev0 = eval_state(start, opt.stats_min_agree);
    if (!ev0.ok) throw Error("orbit_search: cannot evaluate start state");
    s0.stats = ev0.stats;
    s0.fingerprint = ev0.fp;
    ++res.evaluated;
    seen.insert({canonical_theta(start.theta), ev0.fp});
    layer.push_back(s0);
    res.best = s0;

    int expected_b = s0.stats.b;
    std::vector<OrbitState> best_ties{s0};

    auto consider = [&](const OrbitState& st) {
        if (st.stats.b != expected_b)
            throw Error("orbit_search: branch count changed inside the orbit");
        if (better(st.stats, res.best.stats)) {
            res.best = st;
            best_ties.assign(1, st);
        } else if (st.stats.d == res.best.stats.d && st.stats.terms == res.best.stats.terms &&
                   st.fingerprint != res.best.fingerprint) {
            best_ties.push_back(st);
        }
    };

    for (int depth = 0; depth < opt.max_okamoto_depth && !res.truncated; ++depth) {
        // closure of the current layer under homographies (curves change);
        // sign masks only relabel theta, so they are enumerated when expanding
        std::vector<OrbitState> closure;
        for (const auto& st : layer) {
            closure.push_back(st);
            for (const auto& h : homography_table()) {
                if (h.num == 1) continue;
                if (res.evaluated >= opt.budget) {
                    res.truncated = true;
                    break;
                }
                OrbitState child;
                child.sol = apply_homography(h, st.sol);
                child.history = st.history;
                child.history.push_back("h" + std::to_string(h.num));
                child.okamoto_depth = st.okamoto_depth;
                StateEval ev = eval_state(child.sol, opt.stats_min_agree);
                ++res.evaluated;
                if (!ev.ok) continue;
                child.stats = ev.stats;
                child.fingerprint = ev.fp;
                DedupKey key{canonical_theta(child.sol.theta), ev.fp};
                if (!seen.insert(key).second) continue;
                spot_check(child.sol);
                consider(child);
                closure.push_back(std::move(child));
            }
            if (res.truncated) break;
        }
        res.layer_summary.push_back("layer " + std::to_string(depth) + ": " +
                                    std::to_string(closure.size()) + " states, best d=" +
                                    std::to_string(res.best.stats.d) + " terms=" +
                                    std::to_string(res.best.stats.terms));
        res.layers_completed = depth;
        if (depth + 1 >= opt.max_okamoto_depth || res.truncated) break;

        // okamoto step on every sign variant of every closure state
        std::vector<OrbitState> next;
        std::set<DedupKey> next_seen;
        for (const auto& st : closure) {
            for (unsigned mask = 0; mask < 16 && !res.truncated; ++mask) {
                ParamSolution flipped = st.sol;
                flipped.theta = sign_change(SignMask::from_code(mask), st.sol.theta);
                if (flipped.theta.sum() == 1) continue;  // okamoto fixed locus
                ParamSolution child_sol;
                try {
                    child_sol = okamoto_apply(flipped);
                } catch (const DegenerateError&) {
                    continue;
                }
                if (res.evaluated >= opt.budget) {
                    res.truncated = true;
                    break;
                }
                StateEval ev = eval_state(child_sol, opt.stats_min_agree);
                ++res.evaluated;
                if (!ev.ok) continue;
                OrbitState child;
                child.sol = std::move(child_sol);
                child.history = st.history;
                if (mask) child.history.push_back("s" + SignMask::from_code(mask).str());
                child.history.push_back("ok");
                child.okamoto_depth = st.okamoto_depth + 1;
                child.stats = ev.stats;
                child.fingerprint = ev.fp;
                DedupKey key{canonical_theta(child.sol.theta), ev.fp};
                if (seen.count(key) || !next_seen.insert(key).second) continue;
                spot_check(child.sol);
                consider(child);
                next.push_back(std::move(child));
            }
            if (res.truncated) break;
        }
        seen.insert(next_seen.begin(), next_seen.end());
        if (opt.beam_width > 0 && static_cast<int>(next.size()) > opt.beam_width) {
            std::stable_sort(next.begin(), next.end(), [](const OrbitState& a, const OrbitState& b) {
                if (a.stats.d != b.stats.d) return a.stats.d < b.stats.d;
                if (a.stats.terms != b.stats.terms) return a.stats.terms < b.stats.terms;
                return a.fingerprint < b.fingerprint;
            });
            next.resize(opt.beam_width);
        }
        layer = std::move(next);
        if (layer.empty()) break;
    }

    // winner: exact residual + exact curve; ties broken lexicographically
    if (!pvi_residual_is_zero(res.best.sol))
        throw Error("orbit_search: winner fails the exact residual");
    res.best_curve = implicitize(res.best.sol);
    for (const auto& tie : best_ties) {
        if (tie.fingerprint == res.best.fingerprint) continue;
        Poly2 c = implicitize(tie.sol);
        if (Poly2::cmp(c, res.best_curve) < 0) {
            res.best = tie;
            res.best_curve = c;
        }
    }
    return res;
}

std::pair<ParamSolution, std::string> reach_theta(const ParamSolution& start,
                                                  const ThetaQuadruple& target,
                                                  int max_depth) {
    struct Node {
        ThetaQuadruple th;
        std::string script;
        int depth;
    };
    ThetaQuadruple goal = target;
    if (start.theta == goal) return {start, ""};
    std::deque<Node> queue{{start.theta, "", 0}};
    std::set<ThetaQuadruple> visited{start.theta};
    auto try_finish = [&](const Node& n) -> std::optional<std::string> {
        // close with signs and homography permutations (no curve change semantics)
        for (unsigned mask = 0; mask < 16; ++mask) {
            ThetaQuadruple f = sign_change(SignMask::from_code(mask), n.th);
            for (const auto& h : homography_table()) {
                ThetaQuadruple g = permute_theta(h.perm, f);
                if (g == goal) {
                    std::string script = n.script;
                    if (mask) script += (script.empty() ? "" : ",") +
                                        ("s" + SignMask::from_code(mask).str());
                    if (h.num != 1)
                        script += (script.empty() ? "" : ",") + ("h" + std::to_string(h.num));
                    return script;
                }
            }
        }
        return std::nullopt;
    };
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        if (auto script = try_finish(n)) {
            ParamSolution out = apply_script(start, *script);
            return {out, *script};
        }
        if (n.depth >= max_depth) continue;
        for (unsigned mask = 0; mask < 16; ++mask) {
            ThetaQuadruple f = sign_change(SignMask::from_code(mask), n.th);
            for (const auto& h : homography_table()) {
                ThetaQuadruple g = permute_theta(h.perm, f);
                if (g.sum() == 1) continue;
                ThetaQuadruple nx = okamoto_theta(g);
                if (visited.count(nx)) continue;
                visited.insert(nx);
                std::string script = n.script;
                if (mask) script += (script.empty() ? "" : ",") +
                                    ("s" + SignMask::from_code(mask).str());
                if (h.num != 1)
                    script += (script.empty() ? "" : ",") + ("h" + std::to_string(h.num));
                script += (script.empty() ? "" : ",") + std::string("ok");
                queue.push_back({nx, script, n.depth + 1});
            }
        }
    }
    throw Error("reach_theta: no route to " + target.str() + " within depth " +
                std::to_string(max_depth));
}

}  // namespace pvi
