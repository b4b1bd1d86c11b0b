#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zll/label_array.hpp"

namespace zll {

// Wraps a 2m-slot embedding holding m dummy elements so that a user-facing
// operation at any rank lands at a uniformly shifted rank of the inner
// structure. The shift q is drawn once at construction, never redrawn; q
// dummies sit below every real element and m-q above.
class ShiftedArray {
 public:
  // `initial` real elements (ranks 1..initial) may be bulk-loaded into the
  // from-scratch construction; their placements count toward setup_cost.
  ShiftedArray(int64_t m, double eps, uint64_t seed, PivotMode mode = PivotMode::reservoir,
               int64_t initial = 0);

  uint64_t insert(int64_t rank);
  uint64_t erase(int64_t rank);

  int64_t size() const { return n_; }
  int64_t slots() const { return m_; }
  double eps() const { return eps_; }
  int64_t capacity() const;
  int64_t shift() const { return q_; }
  uint64_t setup_cost() const { return setup_cost_; }

  // User-visible occupancy of the m-slot window (real elements only).
  std::vector<uint8_t> view() const;
  int64_t view_max_gap() const;
  std::string snapshot_text() const;

  std::vector<Violation> check_invariants() const { return inner_.check_invariants(); }
  void check_real_containment() const;

  LabelArray& inner() { return inner_; }
  const LabelArray& inner() const { return inner_; }
  bool is_dummy(uint64_t id) const { return id <= static_cast<uint64_t>(m_); }
  int64_t inner_user_slot(int64_t inner_slot) const { return inner_slot - q_; }

  // Inner slack parameter: user capacity floor(m/(1+eps)) is exactly the
  // inner capacity of the 2m-slot structure carrying m extra dummies.
  static double inner_eps(double eps) { return eps / (2.0 + eps); }

 private:
  int64_t m_;
  double eps_;
  int64_t q_;
  int64_t n_ = 0;
  uint64_t setup_cost_ = 0;
  LabelArray inner_;

  static LabelArray build_inner(int64_t m, double eps, uint64_t seed, PivotMode mode,
                                int64_t q, int64_t initial);
};

}  // namespace zll
