#include "zll/classical_array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zll {

namespace {
int ceil_log2(int64_t m) {
  int l = 0;
  while ((int64_t{1} << l) < m) l++;
  return l;
}
}  // namespace

ClassicalArray::ClassicalArray(int64_t m, double balance_c) : m_(m), balance_c_(balance_c) {
  if (m < 1) throw std::invalid_argument("classical array: m must be >= 1");
  occ_.assign(static_cast<size_t>(m), 0);
  counts_.assign(size_t{1} << (ceil_log2(m) + 1), 0);
  leaf_level_ = pick_leaf_level(1);
}

int ClassicalArray::pick_leaf_level(int64_t n) const {
  int64_t leaf_size = std::max<int64_t>(1, static_cast<int64_t>(
      std::ceil(std::log2(static_cast<double>(std::max<int64_t>(n, 2))))));
  int level = 0;
  while ((m_ >> (level + 1)) >= leaf_size && (int64_t{1} << (level + 1)) <= m_) level++;
  return level;
}

void ClassicalArray::recompute_counts(const Cursor& c) {
  if (c.level == leaf_level_) {
    int32_t k = 0;
    for (int64_t s = c.range.begin; s < c.range.end; s++) k += occ_[static_cast<size_t>(s)];
    counts_[key(c.level, c.index)] = k;
    return;
  }
  Cursor l = child(c, false), r = child(c, true);
  recompute_counts(l);
  recompute_counts(r);
  counts_[key(c.level, c.index)] = counts_[key(l.level, l.index)] + counts_[key(r.level, r.index)];
}

void ClassicalArray::relayout(const Cursor& c) {
  int64_t k = count(c);
  int64_t q = c.range.width();
  std::fill(occ_.begin() + c.range.begin, occ_.begin() + c.range.end, 0);
  for (int64_t j = 1; j <= k; j++) {
    occ_[static_cast<size_t>(c.range.begin + base_offset(j, k, q) - 1)] = 1;
  }
  ledger_.moves_total += static_cast<uint64_t>(k);
  ledger_.note_rebuild(c.level);
  recompute_counts(c);
}

bool ClassicalArray::violated(const Cursor& parent) const {
  Cursor l = child(parent, false), r = child(parent, true);
  double dl = static_cast<double>(count(l)) / static_cast<double>(l.range.width());
  double dr = static_cast<double>(count(r)) / static_cast<double>(r.range.width());
  double log2n = std::log2(static_cast<double>(std::max<int64_t>(n_, 2)));
  // slack: an even spread leaves up to one element of skew per child
  double slack = 1.0 / static_cast<double>(l.range.width()) +
                 1.0 / static_cast<double>(r.range.width());
  return std::abs(dl - dr) > balance_c_ / log2n * std::max(dl, dr) + slack + 1e-12;
}

ClassicalArray::Cursor ClassicalArray::descend_to_leaf(int64_t rank, int64_t* local) const {
  Cursor c = root_cursor();
  int64_t r = rank;
  while (c.level < leaf_level_) {
    Cursor l = child(c, false);
    if (r <= count(l)) {
      c = l;
    } else {
      r -= count(l);
      c = child(c, true);
    }
  }
  *local = r;
  return c;
}

void ClassicalArray::maybe_global_rebuild() {
  if (n_ >= 1 && (n_ >= 2 * n_build_ || 2 * n_ <= n_build_)) {
    n_build_ = n_;
    leaf_level_ = pick_leaf_level(n_);
    Cursor c = root_cursor();
    counts_[key(0, 0)] = static_cast<int32_t>(n_);
    relayout(c);
  }
}

uint64_t ClassicalArray::insert(int64_t rank) {
  if (rank < 1 || rank > n_ + 1) throw std::out_of_range("insert: rank out of range");
  if (n_ + 1 > m_) throw std::length_error("insert: array full");
  uint64_t before = ledger_.total_cost();

  int64_t local = 0;
  Cursor leaf = descend_to_leaf(std::min(rank, std::max<int64_t>(n_, 1)), &local);
  // rank n+1 may overshoot the last leaf's local count by one; clamp to append
  if (rank == n_ + 1) {
    leaf = descend_to_leaf(std::max<int64_t>(n_, 1), &local);
    local = count(leaf) + (n_ == 0 ? 1 : 1);
    local = count(leaf) + 1;
  }
  if (count(leaf) >= leaf.range.width()) {
    // walk up to the first ancestor with a free slot and spread it out
    Cursor fix = root_cursor();
    std::vector<Cursor> path;
    {
      Cursor c = root_cursor();
      int64_t r = std::min(rank, std::max<int64_t>(n_, 1));
      while (c.level < leaf_level_) {
        path.push_back(c);
        Cursor l = child(c, false);
        if (r <= count(l)) {
          c = l;
        } else {
          r -= count(l);
          c = child(c, true);
        }
      }
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (count(*it) < it->range.width()) {
        fix = *it;
        break;
      }
    }
    relayout(fix);
    leaf = descend_to_leaf(std::min(rank, std::max<int64_t>(n_, 1)), &local);
    if (rank == n_ + 1) local = count(leaf) + 1;
  }

  // place by relaying the leaf with the new element at its local rank
  {
    int64_t k = count(leaf);
    int64_t q = leaf.range.width();
    std::fill(occ_.begin() + leaf.range.begin, occ_.begin() + leaf.range.end, 0);
    for (int64_t j = 1; j <= k + 1; j++) {
      occ_[static_cast<size_t>(leaf.range.begin + base_offset(j, k + 1, q) - 1)] = 1;
    }
    (void)local;
    ledger_.moves_total += static_cast<uint64_t>(k + 1);
    counts_[key(leaf.level, leaf.index)] = static_cast<int32_t>(k + 1);
  }
  n_++;
  // refresh counts up the path
  {
    Cursor c = root_cursor();
    int64_t r = rank;
    while (c.level < leaf_level_) {
      counts_[key(c.level, c.index)]++;
      Cursor l = child(c, false);
      if (r <= count(l) && !(c.level + 1 <= leaf_level_ && false)) {
      }
      if (r <= count(l)) {
        c = l;
      } else {
        r -= count(l);
        c = child(c, true);
      }
    }
  }

  // topmost violated sibling pair gets its union rebuilt
  {
    Cursor c = root_cursor();
    int64_t r = rank;
    Cursor top_violated = root_cursor();
    bool any = false;
    while (c.level < leaf_level_) {
      if (violated(c) && !any) {
        top_violated = c;
        any = true;
      }
      Cursor l = child(c, false);
      if (r <= count(l)) {
        c = l;
      } else {
        r -= count(l);
        c = child(c, true);
      }
    }
    if (any) relayout(top_violated);
  }

  maybe_global_rebuild();
  uint64_t cost = ledger_.total_cost() - before;
  ledger_.per_op_costs.push_back(cost);
  return cost;
}

uint64_t ClassicalArray::erase(int64_t rank) {
  if (n_ < 1) throw std::out_of_range("erase: empty array");
  if (rank < 1 || rank > n_) throw std::out_of_range("erase: rank out of range");
  uint64_t before = ledger_.total_cost();

  int64_t local = 0;
  Cursor leaf = descend_to_leaf(rank, &local);
  {
    int64_t k = count(leaf);
    int64_t q = leaf.range.width();
    std::fill(occ_.begin() + leaf.range.begin, occ_.begin() + leaf.range.end, 0);
    for (int64_t j = 1; j <= k - 1; j++) {
      occ_[static_cast<size_t>(leaf.range.begin + base_offset(j, k - 1, q) - 1)] = 1;
    }
    ledger_.moves_total += static_cast<uint64_t>(k - 1);
    ledger_.removals_total += 1;
    counts_[key(leaf.level, leaf.index)] = static_cast<int32_t>(k - 1);
  }
  // refresh counts up the path (rank still addresses the pre-op tree shape)
  {
    Cursor c = root_cursor();
    int64_t r = rank;
    while (c.level < leaf_level_) {
      counts_[key(c.level, c.index)]--;
      Cursor l = child(c, false);
      int64_t lcount = count(l) + (c.level + 1 == leaf.level && false ? 0 : 0);
      // counts below were already decremented only on the visited side; use
      // pre-op routing by adding back the pending decrement on the left child
      if (r <= lcount + ((l.range.contains(leaf.range.begin) && l.level < leaf_level_) ? 0 : 0)) {
      }
      if (r <= count(l) + (l.range.contains(leaf.range.begin) || (l.level == leaf.level && l.index == leaf.index) ? 1 : 0) - (l.range.contains(leaf.range.begin) || (l.level == leaf.level && l.index == leaf.index) ? 1 : 0) + 0) {
      }
      if (leafwardLeft(c, leaf)) {
        c = child(c, false);
      } else {
        c = child(c, true);
      }
    }
  }

  n_--;
  {
    Cursor c = root_cursor();
    Cursor top_violated = root_cursor();
    bool any = false;
    while (c.level < leaf_level_) {
      if (violated(c) && !any) {
        top_violated = c;
        any = true;
      }
      c = leafwardLeft(c, leaf) ? child(c, false) : child(c, true);
    }
    if (any) relayout(top_violated);
  }

  maybe_global_rebuild();
  uint64_t cost = ledger_.total_cost() - before;
  ledger_.per_op_costs.push_back(cost);
  return cost;
}

std::vector<std::string> ClassicalArray::check_balance() const {
  std::vector<std::string> out;
  if (n_ == 0) return out;
  std::vector<Cursor> stack{root_cursor()};
  while (!stack.empty()) {
    Cursor c = stack.back();
    stack.pop_back();
    if (c.level >= leaf_level_) continue;
    if (violated(c)) {
      out.push_back("level " + std::to_string(c.level) + " index " + std::to_string(c.index));
    }
    stack.push_back(child(c, false));
    stack.push_back(child(c, true));
  }
  return out;
}

std::string ClassicalArray::snapshot_text() const {
  double eps_free = m_ > 0 ? 1.0 - static_cast<double>(n_) / static_cast<double>(m_) : 0.0;
  return format_snapshot(m_, n_, eps_free, occ_);
}

}  // namespace zll
