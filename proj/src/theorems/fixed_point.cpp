#include <algorithm>
#include <cmath>

#include "fockcalc/errors.hpp"
#include "fockcalc/json_io.hpp"
#include "fockcalc/theorems.hpp"

namespace fockcalc {

namespace {

void require_away_from_pole(Complex denominator, const char* what) {
  if (std::abs(denominator) < kSampleMargin) throw PoleProximity(std::string("sample too close to pole of ") + what);
}

}  // namespace

Complex fixed_point(const AffineMap& map) {
  constexpr double tol = 1e-14;
  if (std::abs(map.slope - 1.0) <= tol) {
    if (std::abs(map.offset) <= tol) throw PreconditionError("fixed_point: identity map, every point is fixed");
    throw PreconditionError("fixed_point: translation has no fixed point");
  }
  return map.offset / (1.0 - map.slope);
}

CheckReport check_fixed_point(const AffineMap& map) {
  const Complex b = fixed_point(map);
  CheckReport report("fixed-point", {{"map", to_json(map)}, {"fixed_point", complex_to_json(b)}});
  report.add_residual(0, std::abs(map(b) - b) / std::max(1.0, std::abs(b)), "|phi(b) - b| / max(1, |b|)", 1e-15);
  return report.finalize();
}

Complex conjugating_map(Complex b, Complex z) { return (z - b) / (std::conj(b) * z - 1.0); }

Complex conjugation_factor(const AffineMap& map, Complex b, Complex z) {
  const Complex bc = std::conj(b);
  return map.slope * (bc * z - 1.0) / (bc * map.slope * z + bc * map.offset - 1.0);
}

CheckReport check_h_conjugation(const AffineMap& map, std::span<const Complex> samples, double tol) {
  const Complex b = fixed_point(map);
  double worst = 0.0;
  for (Complex z : samples) {
    require_away_from_pole(std::conj(b) * z - 1.0, "h");
    require_away_from_pole(std::conj(b) * map(z) - 1.0, "h o phi");
    const Complex gap = conjugating_map(b, map(z)) - conjugation_factor(map, b, z) * conjugating_map(b, z);
    worst = std::max(worst, std::abs(gap));
  }
  CheckReport report("h-conjugation",
                     {{"map", to_json(map)}, {"fixed_point", complex_to_json(b)}, {"samples", samples.size()}});
  report.add_residual(0, worst, "max |h(phi(z)) - factor(z) h(z)|", tol);
  report.note("factor(z) = a1 (conj(b) z - 1) / (conj(b) a1 z + conj(b) a0 - 1) is z-dependent; pointwise identity");
  return report.finalize();
}

Complex eigen_candidate(Complex b, double alpha, int j, Complex z) {
  return std::exp(alpha * std::conj(b) * z - 0.5 * alpha * std::norm(b)) * std::pow(conjugating_map(b, z), j);
}

CheckReport check_eigen_identity(const SelfAdjointSymbolParams& p, int j_max, std::span<const Complex> samples,
                                 int kernel_order, double tol, double kernel_tol) {
  p.validate();
  if (j_max < 0) throw PreconditionError("eigen-identity: j_max must be non-negative");
  const double r = std::abs(p.a0);
  if (std::abs(p.a1.imag()) > kIdentityTol || !(p.a1.real() >= -1.0 + r - kIdentityTol) || !(p.a1.real() < 1.0 - r)) {
    throw PreconditionError("eigen-identity: requires real a1 with -1 + |a0| <= a1 < 1 - |a0|");
  }
  const WcoSymbol sym = p.symbol();
  const AffineMap phi = p.map();
  const Complex b = fixed_point(phi);
  const Complex fb = sym.weight.eval(b);

  CheckReport report("eigen-identity", {{"symbol", p.to_json()},
                                        {"fixed_point", complex_to_json(b)},
                                        {"j_max", j_max},
                                        {"samples", samples.size()},
                                        {"kernel_order", kernel_order}});
  for (Complex z : samples) {
    require_away_from_pole(std::conj(b) * z - 1.0, "e_j");
    require_away_from_pole(std::conj(b) * phi(z) - 1.0, "e_j o phi");
  }
  for (int j = 0; j <= j_max; ++j) {
    double worst = 0.0;
    for (Complex z : samples) {
      const Complex lhs = sym.weight.eval(z) * eigen_candidate(b, p.alpha, j, phi(z));
      const Complex rhs = std::conj(fb) * std::pow(conjugation_factor(phi, b, z), j) * eigen_candidate(b, p.alpha, j, z);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    report.add_residual(0, worst, "j=" + std::to_string(j) + ": max |f e_j(phi) - conj(f(b)) factor^j e_j|", tol);
  }

  const FockParams params(p.alpha, kernel_order);
  const auto kb = kernel_series(b, params);
  const double kernel_gap =
      max_orthonormal_diff(apply_wco(sym, kb), series_scale(kb, std::conj(fb)), params.size());
  report.add_residual(kernel_order, kernel_gap, "W K_b = conj(f(b)) K_b, max orthonormal coefficient gap",
                      kernel_tol);
  report.note("factor(z) is z-dependent as displayed, so e_j is checked as a pointwise identity only");
  return report.finalize();
}

CheckReport check_fixed_point_transfer(const SelfAdjointSymbolParams& f_params, const CompositionMap& psi,
                                       const WcoWeight& g, std::span<const Complex> samples, double tol) {
  f_params.validate();
  const AffineMap phi = f_params.map();
  const Complex b = fixed_point(phi);
  for (Complex z : samples) {
    if (!(std::abs(g.eval(z)) > 0.0)) throw PreconditionError("fixed-point-transfer: g vanishes on the sample set");
  }
  double commute_gap = 0.0;
  for (Complex z : samples) {
    commute_gap = std::max(commute_gap, std::abs(phi(eval_map(psi, z)) - eval_map(psi, phi(z))));
  }
  const double transfer = std::abs(eval_map(psi, b) - b);
  const bool commuting = commute_gap <= tol;

  CheckReport report("fixed-point-transfer", {{"symbol", f_params.to_json()},
                                              {"psi", to_json(psi)},
                                              {"g", to_json(g)},
                                              {"fixed_point", complex_to_json(b)},
                                              {"maps_commute", commuting}});
  report.add_residual(0, commute_gap, "max |phi(psi(z)) - psi(phi(z))|", tol, Bound::Measured);
  report.add_residual(0, transfer, "|psi(b) - b|", tol, commuting ? Bound::AtMost : Bound::Measured);
  report.note(commuting ? "maps commute on the samples, so psi(b) = b is asserted"
                        : "maps do not commute on the samples; |psi(b) - b| recorded only");
  return report.finalize(true);
}

}  // namespace fockcalc
