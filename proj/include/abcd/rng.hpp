#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace abcd {

// splitmix64 finalizer
inline uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Counter-based generator. Streams derived from (seed, salt, id) are
// independent, so work items can run on any thread in any order and still
// reproduce the single-threaded result.
class Rng {
 public:
  explicit Rng(uint64_t state) : state_(state) {}

  static Rng stream(uint64_t seed, uint64_t salt, uint64_t id) {
    uint64_t a = mix64(seed + 0x9e3779b97f4a7c15ULL * (salt + 1));
    uint64_t b = mix64(id + 0x632be59bd9b4e019ULL);
    return Rng(mix64(a ^ (b + 0x9e3779b97f4a7c15ULL)));
  }

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // unbiased draw in [0, n), Lemire's method
  uint64_t bounded(uint64_t n) {
    __uint128_t m = (__uint128_t)next() * n;
    uint64_t lo = (uint64_t)m;
    if (lo < n) {
      uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = (__uint128_t)next() * n;
        lo = (uint64_t)m;
      }
    }
    return (uint64_t)(m >> 64);
  }

  bool coin() { return next() >> 63; }

  template <typename T>
  void shuffle(T* data, size_t n) {
    for (size_t i = n; i > 1; --i) {
      std::swap(data[i - 1], data[bounded(i)]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace abcd
