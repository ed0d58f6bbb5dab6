#include "fockcalc/maps.hpp"

#include <algorithm>
#include <cmath>

#include "fockcalc/errors.hpp"

namespace fockcalc {

AffineMap::AffineMap(Complex slope_, Complex offset_)
    : slope(require_finite(slope_, "affine slope")), offset(require_finite(offset_, "affine offset")) {}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.slope * inner.slope, outer.slope * inner.offset + outer.offset};
}

LinearFractionalMap::LinearFractionalMap(Complex p, Complex q, Complex r, Complex s) : c_{p, q, r, s} {
  for (const Complex& x : c_) require_finite(x, "linear fractional coefficient");
  const double det = std::abs(p * s - q * r);
  const double scale = std::max({std::abs(p) * std::abs(s), std::abs(q) * std::abs(r), 1.0});
  if (det / scale <= 1e-14) throw PreconditionError("linear fractional map is degenerate (ps - qr = 0)");
}

LinearFractionalMap LinearFractionalMap::from_affine(const AffineMap& map) {
  return {map.slope, map.offset, 0.0, 1.0};
}

Complex LinearFractionalMap::eval(Complex z, double margin) const {
  if (has_pole() && std::abs(z - pole()) < margin) {
    throw PoleProximity("evaluation point within pole margin of a linear fractional map");
  }
  return require_finite((p() * z + q()) / (r() * z + s()), "linear fractional value");
}

LinearFractionalMap compose(const LinearFractionalMap& outer, const LinearFractionalMap& inner) {
  return {outer.p() * inner.p() + outer.q() * inner.r(), outer.p() * inner.q() + outer.q() * inner.s(),
          outer.r() * inner.p() + outer.s() * inner.r(), outer.r() * inner.q() + outer.s() * inner.s()};
}

double projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v) {
  double nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
  }
  if (nu == 0.0 || nv == 0.0) return nu == nv ? 0.0 : 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) worst = std::max(worst, std::abs(u[i] * v[j] - u[j] * v[i]));
  }
  return worst / std::sqrt(nu * nv);
}

}  // namespace fockcalc
