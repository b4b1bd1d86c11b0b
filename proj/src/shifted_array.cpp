#include "zll/shifted_array.hpp"

#include <stdexcept>

namespace zll {

namespace {
constexpr uint64_t kShiftSalt = 0x736866ULL;
constexpr uint64_t kInnerSalt = 0x696e72ULL;
}  // namespace

LabelArray ShiftedArray::build_inner(int64_t m, double eps, uint64_t seed, PivotMode mode,
                                     int64_t q, int64_t initial) {
  // Rank order: q low dummies, `initial` real elements, m-q high dummies.
  // Dummy ids are 1..m; real ids start at m+1.
  std::vector<uint64_t> ids;
  ids.reserve(static_cast<size_t>(m + initial));
  for (int64_t i = 1; i <= q; i++) ids.push_back(static_cast<uint64_t>(i));
  for (int64_t i = 0; i < initial; i++) ids.push_back(static_cast<uint64_t>(m + 1 + i));
  for (int64_t i = q + 1; i <= m; i++) ids.push_back(static_cast<uint64_t>(i));
  return LabelArray::build_static(ids, 2 * m, inner_eps(eps), mode,
                                  make_key({seed, kInnerSalt}));
}

ShiftedArray::ShiftedArray(int64_t m, double eps, uint64_t seed, PivotMode mode, int64_t initial)
    : m_(m),
      eps_(eps),
      q_(static_cast<int64_t>(Rng::keyed(seed, kShiftSalt).below(static_cast<uint64_t>(m) + 1))),
      n_(initial),
      inner_(build_inner(m, eps, seed, mode, q_, initial)) {
  if (m < 1) throw std::invalid_argument("shifted array: m must be >= 1");
  if (initial > capacity()) throw std::length_error("shifted array: initial load exceeds capacity");
  setup_cost_ = inner_.ledger().moves_total;
  inner_.ledger().reset();
}

int64_t ShiftedArray::capacity() const {
  int64_t k = static_cast<int64_t>(static_cast<double>(m_) / (1.0 + eps_) + 1e-9);
  while (k > 0 && static_cast<double>(m_) + 1e-9 < (1.0 + eps_) * static_cast<double>(k)) k--;
  return k;
}

uint64_t ShiftedArray::insert(int64_t rank) {
  if (rank < 1 || rank > n_ + 1) throw std::out_of_range("insert: rank out of range");
  if (n_ + 1 > capacity()) throw std::length_error("insert: capacity exceeded");
  uint64_t cost = inner_.insert(rank + q_);
  n_++;
  check_real_containment();
  return cost;
}

uint64_t ShiftedArray::erase(int64_t rank) {
  if (rank < 1 || rank > n_) throw std::out_of_range("erase: rank out of range");
  uint64_t cost = inner_.erase(rank + q_);
  n_--;
  check_real_containment();
  return cost;
}

void ShiftedArray::check_real_containment() const {
  if (n_ == 0) return;
  int64_t first = inner_.locate(q_ + 1);
  int64_t last = inner_.locate(q_ + n_);
  if (first < q_ || last >= q_ + m_) {
    throw std::logic_error("shifted array: real elements escaped the user window");
  }
}

std::vector<uint8_t> ShiftedArray::view() const {
  std::vector<uint8_t> occ(static_cast<size_t>(m_), 0);
  if (n_ == 0) return occ;
  int64_t first = inner_.locate(q_ + 1);
  int64_t last = inner_.locate(q_ + n_);
  for (int64_t s = first; s <= last; s++) {
    if (inner_.occupied(s)) occ[static_cast<size_t>(s - q_)] = 1;
  }
  return occ;
}

int64_t ShiftedArray::view_max_gap() const {
  if (n_ < 2) return 0;
  int64_t first = inner_.locate(q_ + 1);
  int64_t last = inner_.locate(q_ + n_);
  int64_t best = 0, prev = first;
  for (int64_t s = first + 1; s <= last; s++) {
    if (!inner_.occupied(s)) continue;
    best = std::max(best, s - prev - 1);
    prev = s;
  }
  return best;
}

std::string ShiftedArray::snapshot_text() const { return format_snapshot(m_, n_, eps_, view()); }

}  // namespace zll
