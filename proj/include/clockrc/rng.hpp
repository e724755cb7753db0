#pragma once

#include <cstdint>

namespace clockrc {

// Counter-based splittable generator: a 64-bit state advanced by the golden
// gamma, pushed through the splitmix64 finalizer. Substreams are derived by
// hashing (seed, stream id), so replica results never depend on which thread
// ran them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(mix(seed + 0x9E3779B97F4A7C15ull * (stream_id + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // uniform in [0,1), 53 significant bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0,n), n >= 1; Lemire multiply-shift with rejection
  std::uint32_t next_below(std::uint32_t n) {
    std::uint64_t x = next_u64() >> 32;
    std::uint64_t m = x * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      std::uint32_t threshold = (0u - n) % n;
      while (lo < threshold) {
        x = next_u64() >> 32;
        m = x * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace clockrc
