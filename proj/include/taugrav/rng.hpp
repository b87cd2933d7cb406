#pragma once

#include <cmath>
#include <cstdint>

namespace taugrav {

// Counter-based random stream: every draw is a pure function of
// (seed, stream, counter), so parallel consumers stay deterministic.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  // Uniform in (0, 1).
  double uniform() { return to_unit(next()); }

  // Standard normal via Box-Muller; consumes two counters per call, no
  // cached spare so the counter position stays a pure function of draws.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::uint64_t counter() const { return counter_; }
  void seek(std::uint64_t counter) { counter_ = counter; }

 private:
  std::uint64_t next() { return mix(seed_, stream_, counter_++); }

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
    // splitmix64 finalizer over a combined key
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1) +
                      0xBF58476D1CE4E5B9ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static double to_unit(std::uint64_t x) {
    // 53-bit mantissa, shifted into (0,1)
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace taugrav
