#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace zll {

struct RunningStats {
  uint64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    count++;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double variance() const {
    if (count < 2) return 0.0;
    double m = mean();
    return std::max(0.0, sum_sq / static_cast<double>(count) - m * m);
  }
  double stderr_mean() const {
    return count ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
  }
};

// p in [0, 100]; nearest-rank on a copy.
inline double percentile(std::vector<double> xs, double p) {
  if (xs.empty()) return 0.0;
  double pos = p / 100.0 * static_cast<double>(xs.size() - 1);
  size_t idx = static_cast<size_t>(pos + 0.5);
  idx = std::min(idx, xs.size() - 1);
  std::nth_element(xs.begin(), xs.begin() + static_cast<ptrdiff_t>(idx), xs.end());
  return xs[idx];
}

// Pearson statistic for observed counts against uniform expectation.
inline double chi_square_uniform(const std::vector<uint64_t>& counts) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  if (counts.empty() || total == 0) return 0.0;
  double expect = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (uint64_t c : counts) {
    double d = static_cast<double>(c) - expect;
    stat += d * d / expect;
  }
  return stat;
}

}  // namespace zll
