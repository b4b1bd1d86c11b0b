#pragma once

#include <cstdint>
#include <vector>

namespace zll {

// Move accounting. Every slot write of an element counts 1, even when the
// destination equals the source during a rebuild; a deletion additionally
// counts the removed element once, so per-op cost is always >= 1.
struct CostLedger {
  uint64_t moves_total = 0;
  uint64_t removals_total = 0;
  std::vector<uint64_t> per_level_rebuilds;
  std::vector<uint64_t> per_op_costs;

  void note_rebuild(int level) {
    if (per_level_rebuilds.size() <= static_cast<size_t>(level)) {
      per_level_rebuilds.resize(level + 1, 0);
    }
    per_level_rebuilds[level]++;
  }

  uint64_t total_cost() const { return moves_total + removals_total; }

  void reset() {
    moves_total = 0;
    removals_total = 0;
    per_level_rebuilds.clear();
    per_op_costs.clear();
  }
};

}  // namespace zll
