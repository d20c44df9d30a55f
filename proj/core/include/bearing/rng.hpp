#pragma once

#include <cmath>
#include <cstdint>

namespace bearing {

// Counter-free splitmix64 generator. The standard <random> engines are
// portable but the distributions are not; every sampled value in this
// project must be bit-identical across platforms, so uniform/normal are
// derived here by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  int uniform_int(int lo, int hi_inclusive) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi_inclusive - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  // Box-Muller; one value per call keeps the stream layout obvious.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

  // Derives an independent stream; mixing constants differ from the
  // state update so stream(k) never collides with the parent sequence.
  Rng stream(std::uint64_t key) const {
    std::uint64_t z = state_ ^ (0x9e3779b97f4a7c15ULL * (key + 0x632be59bd9b4e019ULL));
    z = (z ^ (z >> 29)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 32)) * 0xc4ceb9fe1a85ec53ULL;
    return Rng(z ^ (z >> 29));
  }

 private:
  std::uint64_t state_;
};

// 64-bit FNV-1a, used for dataset split bucketing and file fingerprints.
inline std::uint64_t fnv1a64(const void* bytes, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64_u64(std::uint64_t v, std::uint64_t h = 0xcbf29ce484222325ULL) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  return fnv1a64(b, 8, h);
}

}  // namespace bearing
