#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zll/cost.hpp"
#include "zll/geometry.hpp"
#include "zll/rng.hpp"
#include "zll/snapshot.hpp"

namespace zll {

enum class PivotMode {
  reservoir,  // incremental pivot maintenance, no per-element memory
  hash,       // pivot = argmin of fixed per-element per-level tags
};

struct Violation {
  enum class Kind {
    overflow,         // count exceeds floor(m / 2^level)
    density_band,     // density outside [1 - eps/2, 1 + eps/2]
    depth_condition,  // non-base node with eps * n / 2^level < 2
    count_mismatch,   // stored count disagrees with occupied slots
    pivot_window,     // stored pivot rank outside the current window
  };
  Kind kind;
  int level;
  int64_t index;
  std::string detail;
};

// Standalone reservoir-pivot state over an anonymous candidate list;
// candidates are addressed by 1-based position.
struct PivotReservoir {
  int64_t count = 0;
  int64_t pivot = 0;  // position in [1, count], 0 when empty
};

enum class PivotEventKind { candidate_added, candidate_removed, pivot_removed, window_shift };

// Applies one event; returns whether the pivot changed. candidate_added
// appends at the back and takes over with probability 1/count'.
// candidate_removed / pivot_removed remove position `pos`.
bool apply_reservoir(PivotReservoir& r, PivotEventKind kind, int64_t pos, Rng& rng);

// Sorted-order m-slot array maintained by a recursive dyadic embedding.
// Ranks are 1-based; slots are 0-based. Rebuild decisions descend from the
// root and touch only the nodes on the operation path.
class LabelArray {
 public:
  LabelArray(int64_t m, double eps, PivotMode mode, uint64_t seed,
             WindowPolicy policy = WindowPolicy::zeno);

  // From-scratch construction over ids listed in rank order.
  static LabelArray build_static(std::span<const uint64_t> ids, int64_t m, double eps,
                                 PivotMode mode, uint64_t seed,
                                 WindowPolicy policy = WindowPolicy::zeno);
  // Convenience: n fresh ids 1..n.
  static LabelArray build_static(int64_t n, int64_t m, double eps, PivotMode mode, uint64_t seed,
                                 WindowPolicy policy = WindowPolicy::zeno);

  uint64_t insert(int64_t rank);  // returns slot writes performed
  uint64_t erase(int64_t rank);   // returns slot writes + 1 for the removed element

  int64_t locate(int64_t rank) const;  // 0-based slot of the rank-th element
  int64_t max_gap() const;

  uint64_t rebuild_node(int level, int64_t index);  // from-scratch subtree rebuild
  uint64_t rebuild_all() { return rebuild_node(0, 0); }

  std::vector<Violation> check_invariants() const;

  std::vector<uint8_t> occupancy() const;
  std::string snapshot_text() const;

  int64_t size() const { return n_; }
  int64_t slots() const { return m_; }
  double eps() const { return eps_; }
  PivotMode mode() const { return mode_; }
  WindowPolicy policy() const { return policy_; }
  int64_t capacity() const;  // largest n with m >= (1+eps) n

  uint64_t id_at(int64_t slot) const { return slots_[slot]; }
  bool occupied(int64_t slot) const { return slots_[slot] != 0; }

  CostLedger& ledger() { return ledger_; }
  const CostLedger& ledger() const { return ledger_; }

  // Fixed per-element tag for the given level (hash mode).
  uint64_t tag(uint64_t id, int level) const { return mix64(make_key({tag_seed_, id, (uint64_t)level})); }
  std::vector<uint64_t> tags_for(uint64_t id) const;

  // Called for every element placement (id, slot).
  void set_placement_observer(std::function<void(uint64_t, int64_t)> obs) {
    observer_ = std::move(obs);
  }

  struct NodeInfo {
    int64_t count = 0;
    int64_t left_count = 0;
    bool base = false;
    bool initialized = false;
    SlotRange range;
  };
  NodeInfo node_info(int level, int64_t index) const;

  uint64_t next_element_id() const { return next_id_; }

 private:
  struct Node {
    int32_t count = 0;
    int32_t left_count = 0;
    uint8_t flags = 0;  // bit0 initialized, bit1 base
  };
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
  size_t node_key(int level, int64_t index) const {
    return (size_t{1} << level) + static_cast<size_t>(index);
  }
  Node& node(const Cursor& c) { return nodes_[node_key(c.level, c.index)]; }
  const Node& node(const Cursor& c) const { return nodes_[node_key(c.level, c.index)]; }

  bool fits(int64_t n) const;
  void place(uint64_t id, int64_t slot);
  uint64_t do_op(int64_t rank, uint64_t id, bool inserting);
  uint64_t rebuild_with(const Cursor& c, int64_t local_rank, uint64_t id, bool inserting);
  void build_range(const Cursor& c, std::span<uint64_t> ids);
  bool pivot_changed(const Cursor& c, const Node& nd, const CandidateWindow& w_old,
                     const CandidateWindow& w_new, int64_t local_rank, bool inserting);
  bool hash_pivot_changed(const Cursor& c, const Node& nd, const CandidateWindow& w_new,
                          int64_t local_rank, bool inserting, uint64_t new_id);
  std::vector<uint64_t> collect_range(SlotRange r) const;
  std::vector<uint64_t> collect_ranks(const Cursor& c, int64_t lo, int64_t hi) const;
  int64_t locate_in(Cursor c, int64_t local_rank) const;
  void check_node(const Cursor& c, std::vector<Violation>& out) const;

  int64_t m_;
  double eps_;
  int64_t n_ = 0;
  PivotMode mode_;
  WindowPolicy policy_;
  uint64_t tag_seed_;
  Rng rng_;
  uint64_t next_id_ = 1;
  int max_level_ = 0;
  std::vector<Node> nodes_;
  std::vector<uint64_t> slots_;
  CostLedger ledger_;
  std::function<void(uint64_t, int64_t)> observer_;
};

}  // namespace zll
