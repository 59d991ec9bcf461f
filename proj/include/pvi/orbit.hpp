#ifndef PVI_ORBIT_HPP
#define PVI_ORBIT_HPP

#include "pvi/implicitize.hpp"
#include "pvi/okamoto.hpp"
#include "pvi/theta.hpp"

namespace pvi {

// transform script tokens: h<k>, ok, s<++-+>, q4 (composed left to right)
ParamSolution apply_token(const ParamSolution& sol, const std::string& token);
ParamSolution apply_script(const ParamSolution& sol, const std::string& script);

struct OrbitState {
    ParamSolution sol;
    std::vector<std::string> history;
    ModStats stats;
    std::uint64_t fingerprint = 0;
    int okamoto_depth = 0;
};

struct OrbitOptions {
    int max_okamoto_depth = 3;
    long budget = 100000;  // number of curve-stat evaluations
    unsigned jobs = 1;
    int stats_min_agree = 3;
    // exact residual spot-check rate (percent) on explored states
    int residual_spot_percent = 5;
    // 0 = exhaustive BFS; otherwise keep only the best `beam_width` states
    // per layer (used for the large reconstructed entries)
    int beam_width = 0;
};

struct OrbitResult {
    OrbitState best;
    Poly2 best_curve;  // exact implicitization of the winner
    bool truncated = false;
    long evaluated = 0;
    int layers_completed = 0;
    std::vector<std::string> layer_summary;
};

// Depth-limited BFS over sign flips x homographies x okamoto, minimizing
// (d, terms) of the implicit curve.  Layers count okamoto applications;
// homographies and sign flips are closure moves inside a layer.
OrbitResult orbit_search(const ParamSolution& start, const OrbitOptions& opt = {});

// Short BFS on theta alone (signs x homography slot permutations x okamoto)
// to find a transform script reaching `target`; applies and returns it.
// Throws if no route within `max_depth` okamoto steps exists.
std::pair<ParamSolution, std::string> reach_theta(const ParamSolution& start,
                                                  const ThetaQuadruple& target,
                                                  int max_depth = 3);

}  // namespace pvi

#endif
