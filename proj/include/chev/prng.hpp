#pragma once
#include <cstdint>

namespace chev {

// splitmix64. Hand-rolled so that seeded runs are byte-identical across
// platforms and standard-library versions.
struct Prng {
  uint64_t state;
  explicit Prng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, n); the tiny modulo bias is irrelevant here, the
  // contract is determinism, not statistical quality.
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Independent child stream; used to hand each subtask its own generator so
  // parallel evaluation order cannot change the sampled values.
  Prng fork() { return Prng(next() ^ 0xd1b54a32d192ed03ull); }
};

}  // namespace chev
