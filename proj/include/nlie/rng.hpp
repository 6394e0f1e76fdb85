#pragma once

#include <cstdint>
#include <random>

namespace nlie {

// Deterministic RNG for reproducible randomized checks. Raw engine outputs
// reduced by modulo (uniform_int_distribution is implementation-defined and
// would break byte-identical reports across standard libraries).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform-ish integer in [lo, hi], inclusive
  long pick(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace nlie
