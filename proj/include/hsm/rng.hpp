#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hsm {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 output function (Stafford mix13).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fixed 64-bit mixer for deriving child stream keys, e.g. the per-instance
// seed of disorder sample i is hash_combine(master_seed, i).
constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + kGoldenGamma));
}

// Counter-based generator: draw k is mix64(key + (k+1)*kGoldenGamma), the
// splitmix64 stream with initial state `key`. Gaussians are Box-Muller on
// consecutive uniforms with the second value cached, so a (key, draw index)
// pair maps to the same bits on every run and worker count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return mix64(key_ + state_);
  }

  // Uniform on (0, 1]; never 0, so log(u) stays finite.
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t key_;
  std::uint64_t state_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace hsm
