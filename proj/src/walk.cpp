#include "zll/walk.hpp"

#include <cmath>
#include <stdexcept>

#include "zll/stats.hpp"

namespace zll {

namespace {
constexpr uint64_t kWalkSalt = 0x77616c6bULL;  // stream tag
}

WalkState make_walk(double center, double half_width, uint64_t seed, uint64_t trial) {
  if (!(half_width > 0.0)) throw std::invalid_argument("walk: half_width must be positive");
  WalkState s{center, center, half_width, 0, Rng::keyed(seed, kWalkSalt, trial)};
  return s;
}

void walk_step(WalkState& s, double delta_i, double delta_max) {
  if (!(delta_i > 0.0) || delta_i > delta_max) {
    throw std::invalid_argument("walk: delta_i outside (0, delta_max]");
  }
  double move = walk_alpha(s) * delta_i;
  s.z += s.rng.coin() ? move : -move;
  s.step_index++;
}

DeltaPolicy DeltaPolicy::constant(double delta) {
  if (!(delta > 0.0) || delta > 0.5) {
    throw std::invalid_argument("walk: constant delta must lie in (0, 1/2]");
  }
  return DeltaPolicy{delta, nullptr};
}

std::vector<WalkPoint> run_walk(double center, double half_width, const DeltaPolicy& policy,
                                uint64_t ell, uint64_t seed, uint64_t trial) {
  WalkState s = make_walk(center, half_width, seed, trial);
  std::vector<WalkPoint> traj;
  traj.reserve(ell + 1);
  traj.push_back({s.z, walk_alpha(s)});
  for (uint64_t i = 0; i < ell; i++) {
    double d = policy.next ? policy.next(s) : policy.delta_max;
    walk_step(s, d, policy.delta_max);
    traj.push_back({s.z, walk_alpha(s)});
  }
  return traj;
}

WalkStats estimate_inv_alpha(double center, double half_width, double delta, uint64_t ell,
                             uint64_t trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("walk: trials must be >= 1");
  DeltaPolicy policy = DeltaPolicy::constant(delta);
  RunningStats inv_alpha;
  RunningStats offset;
  RunningStats abs_offset;
  std::vector<double> samples;
  samples.reserve(trials);
  for (uint64_t t = 0; t < trials; t++) {
    WalkState s = make_walk(center, half_width, seed, t);
    for (uint64_t i = 0; i < ell; i++) walk_step(s, delta, policy.delta_max);
    double inv = 1.0 / walk_alpha(s);
    inv_alpha.add(inv);
    offset.add(s.z - center);
    abs_offset.add(std::abs(s.z - center));
    samples.push_back(inv);
  }
  WalkStats out;
  out.ell = ell;
  out.trials = trials;
  out.mean_inv_alpha = inv_alpha.mean();
  out.mean_z = offset.mean();
  out.stderr_z = offset.stderr_mean();
  out.mean_abs_z = abs_offset.mean();
  for (int p : {50, 90, 99}) out.quantiles_inv_alpha[p] = percentile(samples, p);
  return out;
}

}  // namespace zll
