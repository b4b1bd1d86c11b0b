#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zll/cost.hpp"
#include "zll/geometry.hpp"
#include "zll/snapshot.hpp"

namespace zll {

// Deterministic weight-balanced scheme: a dyadic tree over the array with
// leaves of width about log2(n). After placing into a leaf, the highest
// sibling pair whose densities diverge by more than a 1/log2(n) fraction is
// rebuilt by spreading the union evenly. Leaf width is recomputed by a global
// rebuild whenever n doubles or halves.
class ClassicalArray {
 public:
  explicit ClassicalArray(int64_t m, double balance_c = 1.0);

  uint64_t insert(int64_t rank);
  uint64_t erase(int64_t rank);

  int64_t size() const { return n_; }
  int64_t slots() const { return m_; }
  int64_t capacity() const { return m_; }
  int64_t max_gap() const { return max_interior_gap(occ_); }
  int leaf_level() const { return leaf_level_; }

  std::string snapshot_text() const;
  const std::vector<uint8_t>& occupancy() const { return occ_; }

  // Sibling-balance violations anywhere in the tree; empty when healthy.
  std::vector<std::string> check_balance() const;

  CostLedger& ledger() { return ledger_; }
  const CostLedger& ledger() const { return ledger_; }

 private:
  struct Cursor {
    int level;
    int64_t index;
    SlotRange range;
  };
  Cursor root_cursor() const { return {0, 0, {0, m_}}; }
  static Cursor child(const Cursor& c, bool right) {
    return {c.level + 1, c.index * 2 + (right ? 1 : 0),
            right ? right_half(c.range) : left_half(c.range)};
  }
  size_t key(int level, int64_t index) const {
    return (size_t{1} << level) + static_cast<size_t>(index);
  }
  int64_t count(const Cursor& c) const { return counts_[key(c.level, c.index)]; }

  bool violated(const Cursor& parent) const;
  void relayout(const Cursor& c);          // spread evenly, refresh counts
  void recompute_counts(const Cursor& c);  // from occupancy
  void maybe_global_rebuild();
  int pick_leaf_level(int64_t n) const;
  Cursor descend_to_leaf(int64_t rank, int64_t* local) const;

  int64_t m_;
  double balance_c_;
  int64_t n_ = 0;
  int64_t n_build_ = 1;
  int leaf_level_ = 0;
  std::vector<uint8_t> occ_;
  std::vector<int32_t> counts_;
  CostLedger ledger_;
};

}  // namespace zll
