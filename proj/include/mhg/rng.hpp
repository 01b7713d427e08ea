#pragma once

#include <cstdint>
#include <random>

#include "mhg/bigint.hpp"

namespace mhg {

/// 64-bit Mersenne Twister (std::mt19937_64, whose output sequence is fixed
/// by the standard) with bounded draws by rejection, so results are
/// identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, bound) for arbitrary-precision bound > 0.
  BigInt below(const BigInt& bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of worker `index` for a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace mhg
