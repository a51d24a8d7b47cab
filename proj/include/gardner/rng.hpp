#pragma once

// Deterministic random number generation.
//
// The generator is splitmix64 (Vigna's fixed-increment SplittableRandom);
// independent streams for parallel work are derived with the splitmix64
// finalizer applied to (master, stream, index) with golden-ratio offsets, so
// any worker can reconstruct any trial's stream without shared state.
// std::normal_distribution and friends are implementation-defined, so the
// samplers here are hand-rolled to keep runs bit-identical.

#include <cstdint>

#include <cmath>

namespace gardner {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (mixing function).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream seed for (master, stream, index): two finalizer rounds with
// golden-ratio offsets. Documented contract: this is the only seed-derivation
// path, so runs are reproducible across worker counts.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  const std::uint64_t a = mix64(master + kGoldenGamma * (stream + 1));
  return mix64(a + kGoldenGamma * (index + 1));
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // +1 with probability p, else -1.
  double pm1(double p) { return uniform() < p ? 1.0 : -1.0; }

  // Standard normal via the polar (Marsaglia) method; uses only sqrt/log so
  // the stream is stable for a fixed libm.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gardner
