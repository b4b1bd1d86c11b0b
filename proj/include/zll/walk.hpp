#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "zll/rng.hpp"

namespace zll {

// A bounded random walk on (center - half_width, center + half_width) whose
// step size shrinks proportionally to the distance from the nearer boundary,
// so the walk approaches the boundary without ever reaching it.
struct WalkState {
  double z = 0.0;
  double center = 0.0;
  double half_width = 1.0;
  uint64_t step_index = 0;
  Rng rng;
};

// Distance from the current position to the nearer interval boundary.
inline double walk_alpha(const WalkState& s) {
  double d = s.z - s.center;
  return s.half_width - (d < 0 ? -d : d);
}

WalkState make_walk(double center, double half_width, uint64_t seed, uint64_t trial = 0);

// One step: z += or -= alpha * delta_i with a fair coin.
// Throws std::invalid_argument unless 0 < delta_i <= delta_max.
void walk_step(WalkState& s, double delta_i, double delta_max = 0.5);

// Per-step size schedule. `next` may inspect the walk so far (an adaptive
// schedule); when absent a constant delta_max is used.
struct DeltaPolicy {
  double delta_max = 0.5;
  std::function<double(const WalkState&)> next;

  static DeltaPolicy constant(double delta);
};

struct WalkPoint {
  double z;
  double alpha;
};

// Trajectory of ell steps; entry 0 is the start (center, half_width).
std::vector<WalkPoint> run_walk(double center, double half_width, const DeltaPolicy& policy,
                                uint64_t ell, uint64_t seed, uint64_t trial = 0);

struct WalkStats {
  uint64_t ell = 0;
  uint64_t trials = 0;
  double mean_inv_alpha = 0.0;
  std::map<int, double> quantiles_inv_alpha;  // percentiles 50, 90, 99
  double mean_abs_z = 0.0;                    // mean |z_ell - center|
  double mean_z = 0.0;                        // mean z_ell - center (signed)
  double stderr_z = 0.0;
};

// Monte-Carlo estimate of E[1/alpha_ell] under a constant-delta schedule.
// Trial t draws its coins from the stream keyed by (seed, t), so trials are
// independent and may be evaluated in any order.
WalkStats estimate_inv_alpha(double center, double half_width, double delta, uint64_t ell,
                             uint64_t trials, uint64_t seed);

}  // namespace zll
