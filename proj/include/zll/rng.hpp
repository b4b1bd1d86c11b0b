#pragma once

#include <cstdint>
#include <initializer_list>

namespace zll {

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr uint64_t combine(uint64_t h, uint64_t v) {
  return mix64(h ^ (v + kGolden + (h << 6) + (h >> 2)));
}

constexpr uint64_t make_key(std::initializer_list<uint64_t> parts) {
  uint64_t h = kGolden;
  for (uint64_t p : parts) h = combine(h, p);
  return h;
}

// Counter-based generator: draw i of a stream keyed by k is mix64(k + i*golden),
// so streams with distinct keys are independent and replayable in any order.
class Rng {
 public:
  explicit Rng(uint64_t key) : key_(key) {}

  static Rng keyed(uint64_t seed, uint64_t s1 = 0, uint64_t s2 = 0, uint64_t s3 = 0) {
    return Rng(make_key({seed, s1, s2, s3}));
  }

  uint64_t next() {
    counter_ += kGolden;
    return mix64(key_ + counter_);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1) != 0; }

  // Uniform in [0, bound), unbiased by rejection on a power-of-two mask.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace zll
