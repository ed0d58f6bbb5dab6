#include "fockcalc/samples.hpp"

#include <cmath>
#include <numbers>

namespace fockcalc {

Complex SampleRng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Complex SampleRng::on_circle(double radius) { return std::polar(radius, 2.0 * std::numbers::pi * uniform()); }

std::vector<Complex> default_samples(std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<Complex> out;
  out.reserve(20);
  for (double radius : {0.4, 0.8}) {
    const double offset = rng.uniform();
    for (int k = 0; k < 10; ++k) out.push_back(std::polar(radius, 2.0 * std::numbers::pi * (k + offset) / 10.0));
  }
  return out;
}

std::vector<Complex> random_disk_points(std::size_t count, double radius, std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<Complex> out(count);
  for (auto& z : out) z = rng.in_disk(radius);
  return out;
}

}  // namespace fockcalc
