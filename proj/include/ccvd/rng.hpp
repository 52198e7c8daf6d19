#pragma once

#include <cstdint>
#include <random>

namespace ccvd {

/// Seeded deterministic random source (identical across platforms).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// uniform in [0, 1)
  double next_double() { return (engine_() >> 11) * 0x1.0p-53; }

  /// uniform integer in [lo, hi]
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool next_bool(double probability) { return next_double() < probability; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ccvd
