#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zll {

// Text snapshot: one header line `m=<m> n=<n> eps=<eps>` followed by a
// length-m string of '0'/'1' occupancy.
struct Snapshot {
  int64_t m = 0;
  int64_t n = 0;
  double eps = 0.0;
  std::vector<uint8_t> occ;

  double eps_free() const {
    return m > 0 ? 1.0 - static_cast<double>(n) / static_cast<double>(m) : 0.0;
  }

  std::string serialize() const;
  static Snapshot parse(const std::string& text);
  static Snapshot load(const std::string& path);
  void save(const std::string& path) const;
};

std::string format_snapshot(int64_t m, int64_t n, double eps, const std::vector<uint8_t>& occ);

// Largest run of empty slots strictly between two occupied slots.
int64_t max_interior_gap(const std::vector<uint8_t>& occ);

}  // namespace zll
