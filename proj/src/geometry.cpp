#include "zll/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zll {

SlotRange subproblem_range(int64_t m, int level, int64_t index) {
  if (m < 1) throw std::invalid_argument("subproblem_range: empty array");
  if (level < 0 || level >= 63 || (int64_t{1} << level) > m) {
    throw std::invalid_argument("subproblem_range: level too deep");
  }
  if (index < 0 || index >= (int64_t{1} << level)) {
    throw std::invalid_argument("subproblem_range: index out of range");
  }
  SlotRange r{0, m};
  for (int b = level - 1; b >= 0; b--) {
    r = ((index >> b) & 1) ? right_half(r) : left_half(r);
  }
  return r;
}

double density(int64_t count, int64_t n, int level) {
  if (n <= 0) throw std::domain_error("density: undefined for an empty array");
  return std::ldexp(static_cast<double>(count), level) / static_cast<double>(n);
}

double alpha_for(double eps, double mu) {
  double a = eps / 2.0 - std::abs(1.0 - mu);
  if (a < 0) throw std::domain_error("alpha_for: density outside the allowed band");
  return a;
}

CandidateWindow candidate_window(int64_t count, int64_t n, int level, double eps,
                                 WindowPolicy policy) {
  if (count <= 0 || n < 2) return CandidateWindow{};
  double level_avg = static_cast<double>(n) / std::ldexp(1.0, level);
  double mu = static_cast<double>(count) / level_avg;
  // Stale off-path densities may sit outside the band; a zero margin then
  // degenerates to a base case instead of tripping alpha_for.
  double margin = std::max(0.0, eps / 2.0 - std::abs(1.0 - mu));
  double log2n = std::log2(static_cast<double>(n));
  double t = policy == WindowPolicy::zeno ? level_avg * margin / std::sqrt(log2n)
                                          : level_avg / log2n;
  double center = static_cast<double>(count) / 2.0;
  int64_t lo = static_cast<int64_t>(std::ceil(center - t));
  int64_t hi = static_cast<int64_t>(std::floor(center + t));

  // Pivot positions must leave both children inside [1-eps/2, 1+eps/2].
  double child_avg = level_avg / 2.0;
  double band_lo = (1.0 - eps / 2.0) * child_avg;
  double band_hi = (1.0 + eps / 2.0) * child_avg;
  lo = std::max(lo, static_cast<int64_t>(std::ceil(std::max(band_lo, count - band_hi))));
  hi = std::min(hi, static_cast<int64_t>(std::floor(std::min(band_hi, count - band_lo))));

  lo = std::max<int64_t>(lo, 1);
  hi = std::min(hi, count);
  if (hi < lo) return CandidateWindow{};
  return CandidateWindow{lo, hi};
}

}  // namespace zll
