#pragma once

#include <array>

#include "fockcalc/series.hpp"

namespace fockcalc {

inline constexpr double kPoleMargin = 1e-6;

/// z -> slope * z + offset.
struct AffineMap {
  Complex slope{1.0};
  Complex offset{0.0};

  AffineMap() = default;
  /// Throws NonFiniteValue on non-finite entries.
  AffineMap(Complex slope, Complex offset);

  static AffineMap identity() { return {}; }

  Complex operator()(Complex z) const noexcept { return slope * z + offset; }
};

// outer(inner(z)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// z -> (p z + q) / (r z + s) with p s - q r != 0.
class LinearFractionalMap {
 public:
  /// Non-degeneracy is checked as |ps - qr| / max(|p||s|, |q||r|, 1) > 1e-14.
  LinearFractionalMap(Complex p, Complex q, Complex r, Complex s);

  static LinearFractionalMap from_affine(const AffineMap& map);

  Complex p() const noexcept { return c_[0]; }
  Complex q() const noexcept { return c_[1]; }
  Complex r() const noexcept { return c_[2]; }
  Complex s() const noexcept { return c_[3]; }
  const std::array<Complex, 4>& coefficients() const noexcept { return c_; }

  bool has_pole() const noexcept { return c_[2] != Complex{}; }
  // -s/r; only meaningful when has_pole().
  Complex pole() const noexcept { return -c_[3] / c_[2]; }

  /// Throws PoleProximity when z lies within `margin` of the pole.
  Complex eval(Complex z, double margin = kPoleMargin) const;
  Complex operator()(Complex z) const { return eval(z); }

 private:
  std::array<Complex, 4> c_;
};

// outer(inner(z)) as a 2x2 coefficient product; no normalisation is applied.
LinearFractionalMap compose(const LinearFractionalMap& outer, const LinearFractionalMap& inner);

// Sine-type distance between two coefficient 4-tuples viewed as points of
// projective space: max_{i<j} |u_i v_j - u_j v_i| / (|u| |v|). Zero iff proportional.
double projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v);

}  // namespace fockcalc
