#pragma once

#include <cstdint>
#include <random>

namespace hs {

// Bit-reproducible across standard libraries: only the engine output is used.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  double uniform() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(g_() % static_cast<uint64_t>(hi - lo + 1)); }
  uint64_t bits() { return g_(); }

 private:
  std::mt19937_64 g_;
};

}  // namespace hs
