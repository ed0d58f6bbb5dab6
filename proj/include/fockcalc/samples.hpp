#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fockcalc/series.hpp"

namespace fockcalc {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Seeded source of uniform reals in [0, 1) built directly on mt19937_64 bits,
/// so sample sets are identical across standard library implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform with respect to area on the disk |z| <= radius.
  Complex in_disk(double radius);
  Complex on_circle(double radius);

 private:
  std::mt19937_64 engine_;
};

// 10 points on |z| = 0.4 and 10 on |z| = 0.8, equally spaced with a seeded
// angular offset per circle.
std::vector<Complex> default_samples(std::uint64_t seed = kDefaultSeed);

std::vector<Complex> random_disk_points(std::size_t count, double radius, std::uint64_t seed);

}  // namespace fockcalc
