#include "zll/label_array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zll {

namespace {

constexpr uint64_t kTagSalt = 0x746167ULL;
constexpr uint64_t kPivotSalt = 0x706976ULL;

int ceil_log2(int64_t m) {
  int l = 0;
  while ((int64_t{1} << l) < m) l++;
  return l;
}

int64_t overlap(int64_t a, int64_t b, int64_t c, int64_t d) {
  int64_t lo = std::max(a, c), hi = std::min(b, d);
  return hi < lo ? 0 : hi - lo + 1;
}

}  // namespace

bool apply_reservoir(PivotReservoir& r, PivotEventKind kind, int64_t pos, Rng& rng) {
  switch (kind) {
    case PivotEventKind::candidate_added:
      r.count++;
      if (rng.below(static_cast<uint64_t>(r.count)) == 0) {
        r.pivot = r.count;
        return true;
      }
      return false;
    case PivotEventKind::candidate_removed:
      if (pos == r.pivot) return apply_reservoir(r, PivotEventKind::pivot_removed, pos, rng);
      r.count--;
      if (pos < r.pivot) r.pivot--;
      return false;
    case PivotEventKind::pivot_removed: {
      r.count--;
      if (r.count <= 0) {
        r.pivot = 0;
        r.count = 0;
        return true;
      }
      r.pivot = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(r.count)));
      return true;
    }
    case PivotEventKind::window_shift:
      throw std::invalid_argument("apply_reservoir: decompose window_shift into edge events");
  }
  return false;
}

LabelArray::LabelArray(int64_t m, double eps, PivotMode mode, uint64_t seed, WindowPolicy policy)
    : m_(m),
      eps_(eps),
      mode_(mode),
      policy_(policy),
      tag_seed_(make_key({seed, kTagSalt})),
      rng_(Rng::keyed(seed, kPivotSalt)) {
  if (m < 1) throw std::invalid_argument("label array: m must be >= 1");
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("label array: eps must be in (0,1)");
  max_level_ = ceil_log2(m);
  nodes_.assign(size_t{1} << (max_level_ + 1), Node{});
  slots_.assign(static_cast<size_t>(m), 0);
}

LabelArray LabelArray::build_static(std::span<const uint64_t> ids, int64_t m, double eps,
                                    PivotMode mode, uint64_t seed, WindowPolicy policy) {
  LabelArray a(m, eps, mode, seed, policy);
  if (!a.fits(static_cast<int64_t>(ids.size()))) {
    throw std::length_error("build_static: capacity exceeded (m < (1+eps) n)");
  }
  uint64_t max_id = 0;
  for (uint64_t id : ids) {
    if (id == 0) throw std::invalid_argument("build_static: element ids must be nonzero");
    max_id = std::max(max_id, id);
  }
  a.n_ = static_cast<int64_t>(ids.size());
  a.next_id_ = max_id + 1;
  std::vector<uint64_t> work(ids.begin(), ids.end());
  a.build_range(a.root_cursor(), work);
  return a;
}

LabelArray LabelArray::build_static(int64_t n, int64_t m, double eps, PivotMode mode,
                                    uint64_t seed, WindowPolicy policy) {
  std::vector<uint64_t> ids(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; i++) ids[static_cast<size_t>(i)] = static_cast<uint64_t>(i + 1);
  return build_static(ids, m, eps, mode, seed, policy);
}

bool LabelArray::fits(int64_t n) const {
  return static_cast<double>(m_) + 1e-9 >= (1.0 + eps_) * static_cast<double>(n);
}

int64_t LabelArray::capacity() const {
  int64_t k = static_cast<int64_t>(static_cast<double>(m_) / (1.0 + eps_) + 1e-9);
  while (k > 0 && !fits(k)) k--;
  return k;
}

void LabelArray::place(uint64_t id, int64_t slot) {
  slots_[static_cast<size_t>(slot)] = id;
  ledger_.moves_total++;
  if (observer_) observer_(id, slot);
}

uint64_t LabelArray::insert(int64_t rank) {
  if (rank < 1 || rank > n_ + 1) throw std::out_of_range("insert: rank out of range");
  if (!fits(n_ + 1)) throw std::length_error("insert: capacity exceeded");
  uint64_t id = next_id_++;
  n_++;
  uint64_t cost = do_op(rank, id, true);
  ledger_.per_op_costs.push_back(cost);
  return cost;
}

uint64_t LabelArray::erase(int64_t rank) {
  if (n_ < 1) throw std::out_of_range("erase: empty array");
  if (rank < 1 || rank > n_) throw std::out_of_range("erase: rank out of range");
  n_--;
  uint64_t cost = do_op(rank, 0, false) + 1;
  ledger_.removals_total++;
  ledger_.per_op_costs.push_back(cost);
  return cost;
}

uint64_t LabelArray::do_op(int64_t rank, uint64_t id, bool inserting) {
  Cursor c = root_cursor();
  int64_t r = rank;
  int64_t delta = inserting ? 1 : -1;
  while (true) {
    Node& nd = node(c);
    bool init = nd.flags & 1;
    bool was_base = nd.flags & 2;
    int64_t c_old = init ? nd.count : 0;
    int64_t c_new = c_old + delta;
    CandidateWindow w_new = candidate_window(c_new, n_, c.level, eps_, policy_);
    bool rebuild = true;
    if (init && !was_base && !w_new.base_case()) {
      CandidateWindow w_old = candidate_window(c_old, n_ - delta, c.level, eps_, policy_);
      rebuild = pivot_changed(c, nd, w_old, w_new, r, inserting, id);
    }
    if (rebuild) return rebuild_with(c, r, id, inserting);
    nd.count = static_cast<int32_t>(c_new);
    if (r <= nd.left_count) {
      nd.left_count += inserting ? 1 : -1;
      c = child(c, false);
    } else {
      r -= nd.left_count;
      c = child(c, true);
    }
  }
}

uint64_t LabelArray::rebuild_with(const Cursor& c, int64_t local_rank, uint64_t id,
                                  bool inserting) {
  std::vector<uint64_t> ids = collect_range(c.range);
  if (inserting) {
    ids.insert(ids.begin() + (local_rank - 1), id);
  } else {
    ids.erase(ids.begin() + (local_rank - 1));
  }
  std::fill(slots_.begin() + c.range.begin, slots_.begin() + c.range.end, 0);
  ledger_.note_rebuild(c.level);
  build_range(c, ids);
  return ids.size();
}

uint64_t LabelArray::rebuild_node(int level, int64_t index) {
  Cursor c{level, index, subproblem_range(m_, level, index)};
  std::vector<uint64_t> ids = collect_range(c.range);
  std::fill(slots_.begin() + c.range.begin, slots_.begin() + c.range.end, 0);
  ledger_.note_rebuild(level);
  build_range(c, ids);
  return ids.size();
}

void LabelArray::build_range(const Cursor& c, std::span<uint64_t> ids) {
  Node& nd = node(c);
  int64_t k = static_cast<int64_t>(ids.size());
  nd.count = static_cast<int32_t>(k);
  nd.left_count = 0;
  nd.flags = 1;
  CandidateWindow w = candidate_window(k, n_, c.level, eps_, policy_);
  if (w.base_case()) {
    nd.flags = 3;
    int64_t q = c.range.width();
    if (k > q) throw std::logic_error("layout: subproblem overflow");
    for (int64_t j = 1; j <= k; j++) {
      place(ids[static_cast<size_t>(j - 1)], c.range.begin + base_offset(j, k, q) - 1);
    }
    return;
  }
  int64_t p;
  if (mode_ == PivotMode::reservoir) {
    p = w.lo + static_cast<int64_t>(rng_.below(static_cast<uint64_t>(w.size())));
  } else {
    p = w.lo;
    uint64_t best_tag = tag(ids[static_cast<size_t>(w.lo - 1)], c.level);
    uint64_t best_id = ids[static_cast<size_t>(w.lo - 1)];
    for (int64_t i = w.lo + 1; i <= w.hi; i++) {
      uint64_t cand_id = ids[static_cast<size_t>(i - 1)];
      uint64_t t = tag(cand_id, c.level);
      if (t < best_tag || (t == best_tag && cand_id < best_id)) {
        best_tag = t;
        best_id = cand_id;
        p = i;
      }
    }
  }
  nd.left_count = static_cast<int32_t>(p);
  build_range(child(c, false), ids.first(static_cast<size_t>(p)));
  build_range(child(c, true), ids.subspan(static_cast<size_t>(p)));
}

bool LabelArray::pivot_changed(const Cursor& c, const Node& nd, const CandidateWindow& w_old,
                               const CandidateWindow& w_new, int64_t r, bool inserting,
                               uint64_t new_id) {
  int64_t lc = nd.left_count;
  if (!inserting && r == lc) return true;  // the pivot itself is being removed
  int64_t piv_new = lc + (inserting ? (r <= lc ? 1 : 0) : (r < lc ? -1 : 0));
  if (!w_new.contains(piv_new)) return true;

  if (mode_ == PivotMode::hash) return hash_pivot_changed(c, nd, w_new, r, inserting, new_id);

  // Count the post-op window elements that were already candidates pre-op;
  // each other entrant takes over with reservoir probability.
  int64_t kept;
  if (inserting) {
    kept = overlap(w_new.lo, std::min(w_new.hi, r - 1), w_old.lo, w_old.hi) +
           overlap(std::max(w_new.lo, r + 1) - 1, w_new.hi - 1, w_old.lo, w_old.hi);
  } else {
    kept = overlap(w_new.lo, std::min(w_new.hi, r - 1), w_old.lo, w_old.hi) +
           overlap(std::max(w_new.lo, r) + 1, w_new.hi + 1, w_old.lo, w_old.hi);
  }
  int64_t additions = w_new.size() - kept;
  int64_t csize = kept;
  bool changed = false;
  for (int64_t i = 0; i < additions; i++) {
    csize++;
    if (rng_.below(static_cast<uint64_t>(csize)) == 0) changed = true;
  }
  return changed;
}

bool LabelArray::hash_pivot_changed(const Cursor& c, const Node& nd, const CandidateWindow& w_new,
                                    int64_t r, bool inserting, uint64_t new_id) {
  int64_t lc = nd.left_count;
  // Pre-op ranks covered by the post-op window.
  int64_t a, b;
  bool new_in_window = false;
  if (inserting) {
    new_in_window = w_new.contains(r);
    a = r < w_new.lo ? w_new.lo - 1 : w_new.lo;
    b = r <= w_new.hi ? w_new.hi - 1 : w_new.hi;
  } else {
    a = r < w_new.lo ? w_new.lo + 1 : w_new.lo;
    b = r <= w_new.hi ? w_new.hi + 1 : w_new.hi;
  }
  std::vector<uint64_t> cand = collect_ranks(c, a, b);
  bool hole = !inserting && r >= a && r <= b;
  if (hole) cand.erase(cand.begin() + (r - a));
  uint64_t pivot_id = 0;
  {
    // lc lies in [a, b] because the shifted pivot stays inside the window
    int64_t at = lc - a;
    if (hole && r < lc) at--;
    if (at < 0 || at >= static_cast<int64_t>(cand.size())) return true;
    pivot_id = cand[static_cast<size_t>(at)];
  }
  uint64_t best_tag = ~uint64_t{0};
  uint64_t best_id = 0;
  auto consider = [&](uint64_t id) {
    uint64_t t = tag(id, c.level);
    if (t < best_tag || (t == best_tag && id < best_id)) {
      best_tag = t;
      best_id = id;
    }
  };
  for (uint64_t id : cand) consider(id);
  if (new_in_window) consider(new_id);
  return best_id != pivot_id;
}

std::vector<uint64_t> LabelArray::collect_range(SlotRange r) const {
  std::vector<uint64_t> out;
  for (int64_t s = r.begin; s < r.end; s++) {
    if (slots_[static_cast<size_t>(s)]) out.push_back(slots_[static_cast<size_t>(s)]);
  }
  return out;
}

int64_t LabelArray::locate_in(Cursor c, int64_t local_rank) const {
  while (true) {
    const Node& nd = node(c);
    if (nd.flags & 2) {
      int64_t seen = 0;
      for (int64_t s = c.range.begin; s < c.range.end; s++) {
        if (slots_[static_cast<size_t>(s)] && ++seen == local_rank) return s;
      }
      throw std::logic_error("locate: rank not found in base case");
    }
    if (local_rank <= nd.left_count) {
      c = child(c, false);
    } else {
      local_rank -= nd.left_count;
      c = child(c, true);
    }
  }
}

std::vector<uint64_t> LabelArray::collect_ranks(const Cursor& c, int64_t lo, int64_t hi) const {
  std::vector<uint64_t> out;
  if (hi < lo) return out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  int64_t start = locate_in(c, lo);
  int64_t need = hi - lo + 1;
  for (int64_t s = start; s < c.range.end && static_cast<int64_t>(out.size()) < need; s++) {
    if (slots_[static_cast<size_t>(s)]) out.push_back(slots_[static_cast<size_t>(s)]);
  }
  if (static_cast<int64_t>(out.size()) != need) {
    throw std::logic_error("collect_ranks: rank range exceeds subproblem");
  }
  return out;
}

int64_t LabelArray::locate(int64_t rank) const {
  if (rank < 1 || rank > n_) throw std::out_of_range("locate: rank out of range");
  return locate_in(root_cursor(), rank);
}

int64_t LabelArray::max_gap() const {
  if (n_ < 2) return 0;
  int64_t best = 0, prev = -1;
  for (int64_t s = 0; s < m_; s++) {
    if (!slots_[static_cast<size_t>(s)]) continue;
    if (prev >= 0) best = std::max(best, s - prev - 1);
    prev = s;
  }
  return best;
}

std::vector<uint8_t> LabelArray::occupancy() const {
  std::vector<uint8_t> occ(static_cast<size_t>(m_));
  for (int64_t s = 0; s < m_; s++) occ[static_cast<size_t>(s)] = slots_[static_cast<size_t>(s)] != 0;
  return occ;
}

std::string LabelArray::snapshot_text() const { return format_snapshot(m_, n_, eps_, occupancy()); }

std::vector<uint64_t> LabelArray::tags_for(uint64_t id) const {
  int levels = ceil_log2(m_) + 1;
  std::vector<uint64_t> out(static_cast<size_t>(levels));
  for (int l = 0; l < levels; l++) out[static_cast<size_t>(l)] = tag(id, l);
  return out;
}

LabelArray::NodeInfo LabelArray::node_info(int level, int64_t index) const {
  Cursor c{level, index, subproblem_range(m_, level, index)};
  const Node& nd = node(c);
  return NodeInfo{nd.count, nd.left_count, (nd.flags & 2) != 0, (nd.flags & 1) != 0, c.range};
}

void LabelArray::check_node(const Cursor& c, std::vector<Violation>& out) const {
  const Node& nd = node(c);
  if (!(nd.flags & 1)) {
    out.push_back({Violation::Kind::count_mismatch, c.level, c.index, "uninitialized node"});
    return;
  }
  int64_t actual;
  if (nd.flags & 2) {
    actual = 0;
    for (int64_t s = c.range.begin; s < c.range.end; s++) actual += slots_[static_cast<size_t>(s)] != 0;
  } else {
    Cursor l = child(c, false), r = child(c, true);
    check_node(l, out);
    check_node(r, out);
    actual = node(l).count + node(r).count;
    if (eps_ * static_cast<double>(n_) / std::ldexp(1.0, c.level) < 2.0 - 1e-9) {
      out.push_back({Violation::Kind::depth_condition, c.level, c.index,
                     "non-base node below the depth bound"});
    }
    CandidateWindow w = candidate_window(nd.count, n_, c.level, eps_, policy_);
    if (!w.contains(nd.left_count)) {
      out.push_back({Violation::Kind::pivot_window, c.level, c.index,
                     "stored pivot outside the current window"});
    }
  }
  if (actual != nd.count) {
    out.push_back({Violation::Kind::count_mismatch, c.level, c.index,
                   "stored count " + std::to_string(nd.count) + " actual " + std::to_string(actual)});
  }
  if (n_ > 0) {
    if (nd.count > (m_ >> c.level)) {
      out.push_back({Violation::Kind::overflow, c.level, c.index,
                     "count " + std::to_string(nd.count) + " exceeds " + std::to_string(m_ >> c.level)});
    }
    double mu = density(nd.count, n_, c.level);
    if (mu < 1.0 - eps_ / 2.0 - 1e-9 || mu > 1.0 + eps_ / 2.0 + 1e-9) {
      out.push_back({Violation::Kind::density_band, c.level, c.index,
                     "density " + std::to_string(mu)});
    }
  }
}

std::vector<Violation> LabelArray::check_invariants() const {
  std::vector<Violation> out;
  const Node& root = nodes_[node_key(0, 0)];
  if (!(root.flags & 1)) {
    if (n_ != 0) {
      out.push_back({Violation::Kind::count_mismatch, 0, 0, "array has elements but no root state"});
    }
    return out;
  }
  check_node(root_cursor(), out);
  if (root.count != n_) {
    out.push_back({Violation::Kind::count_mismatch, 0, 0, "root count differs from n"});
  }
  return out;
}

}  // namespace zll
