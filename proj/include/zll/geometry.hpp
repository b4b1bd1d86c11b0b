#pragma once

#include <cstdint>

namespace zll {

// Half-open slot interval, 0-based.
struct SlotRange {
  int64_t begin = 0;
  int64_t end = 0;
  int64_t width() const { return end - begin; }
  bool contains(int64_t slot) const { return slot >= begin && slot < end; }
};

// The left child takes the ceil half, the right child the floor half.
inline SlotRange left_half(SlotRange r) { return {r.begin, r.begin + (r.width() + 1) / 2}; }
inline SlotRange right_half(SlotRange r) { return {r.begin + (r.width() + 1) / 2, r.end}; }

// Slots of the subproblem at (level, index) in an m-slot array. Widths at
// level L are always floor(m/2^L) or ceil(m/2^L). Throws when 2^level > m
// or the index is out of range.
SlotRange subproblem_range(int64_t m, int level, int64_t index);

// Subproblem density: count / (n / 2^level). May exceed 1; the level average
// is taken over n live elements, not slots. Requires n > 0.
double density(int64_t count, int64_t n, int level);

// Distance from mu to the nearer edge of [1 - eps/2, 1 + eps/2].
// Throws std::domain_error when mu lies outside the band.
double alpha_for(double eps, double mu);

enum class WindowPolicy {
  zeno,            // half-width (n/2^L) * alpha / sqrt(log2 n)
  fixed_fraction,  // half-width (n/2^L) / log2 n
};

// Inclusive 1-based rank window within a subproblem; empty when hi < lo.
struct CandidateWindow {
  int64_t lo = 1;
  int64_t hi = 0;
  int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool base_case() const { return size() <= 4; }
  bool contains(int64_t rank) const { return rank >= lo && rank <= hi; }
};

// Pivot candidate ranks for a subproblem with `count` elements at `level` of
// an embedding over n elements. Centered on count/2, clamped to [1, count]
// and to pivot positions that keep both children inside the density band for
// the current n (the band clamp only binds for very small n).
CandidateWindow candidate_window(int64_t count, int64_t n, int level, double eps,
                                 WindowPolicy policy = WindowPolicy::zeno);

// Even spread: 1-based offset of the j-th of k elements in a width-q interval.
// The last element always lands on the last slot.
inline int64_t base_offset(int64_t j, int64_t k, int64_t q) {
  return (j * q + k - 1) / k;  // ceil(j*q/k)
}

}  // namespace zll
