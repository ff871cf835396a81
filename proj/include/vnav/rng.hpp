#pragma once

#include <cstdint>

namespace vnav {

// Deterministic random stream (splitmix64 seeding + xoshiro256**).
// Every piece of randomness in the project flows through this type so that
// a run is reproducible bit-for-bit from its seed, independent of the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi);
  // Standard normal via Box-Muller (no cached spare, keeps state flat).
  double normal();

  // Derive an independent stream, e.g. one per episode worker.
  Rng fork(std::uint64_t stream) const;

 private:
  std::uint64_t s_[4];
};

// Stateless 64-bit mix, used to combine seeds with indices.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace vnav
