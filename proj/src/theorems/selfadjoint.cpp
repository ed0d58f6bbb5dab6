#include <algorithm>
#include <cmath>
#include <numbers>

#include "fockcalc/errors.hpp"
#include "fockcalc/json_io.hpp"
#include "fockcalc/theorems.hpp"

namespace fockcalc {

void SelfAdjointSymbolParams::validate() const {
  for (Complex x : {c, a0, a1, exponent_offset}) require_finite(x, "self-adjoint symbol parameter");
  if (c == Complex{}) throw PreconditionError("self-adjoint symbol: c must be nonzero");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw PreconditionError("self-adjoint symbol: alpha must be positive");
}

WcoWeight SelfAdjointSymbolParams::weight() const {
  return WcoWeight::exp_linear(c, alpha * std::conj(a0) + exponent_offset);
}

nlohmann::ordered_json SelfAdjointSymbolParams::to_json() const {
  nlohmann::ordered_json j{{"c", complex_to_json(c)},
                           {"a0", complex_to_json(a0)},
                           {"a1", complex_to_json(a1)},
                           {"alpha", alpha}};
  if (exponent_offset != Complex{}) j["exponent_offset"] = complex_to_json(exponent_offset);
  return j;
}

CheckReport check_selfadjoint_forward(const SelfAdjointSymbolParams& p, std::span<const int> orders,
                                      std::uint64_t seed, double tol) {
  p.validate();
  if (orders.empty()) throw PreconditionError("selfadjoint-forward: no truncation orders given");

  CheckReport report("selfadjoint-forward",
                     {{"symbol", p.to_json()}, {"orders", std::vector<int>(orders.begin(), orders.end())}, {"seed", seed}});

  const bool real_slope = std::abs(p.a1.imag()) <= kIdentityTol;
  if (!real_slope || !disk_selfmap_criterion(p.a0, p.a1.real())) {
    report.note("warning: map does not send the unit disk into itself");
  }

  const WcoSymbol sym = p.symbol();
  for (int order : orders) {
    const auto m = assemble_matrix(sym, FockParams(p.alpha, order));
    report.add_residual(order, hermitian_residual(m), "hermitian residual ||M - M^H||_F / max(||M||_F, 1)", tol);
  }

  // W K_beta(z) = f(z) exp(alpha conj(beta) phi(z)),  W* K_beta(z) = conj(f(beta)) exp(alpha conj(phi(beta)) z)
  SampleRng rng(seed);
  const AffineMap phi = p.map();
  double kernel_gap = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.in_disk(0.9);
    const Complex beta = rng.in_disk(0.9);
    const Complex lhs = sym.weight.eval(z) * std::exp(p.alpha * std::conj(beta) * phi(z));
    const Complex rhs = std::conj(sym.weight.eval(beta)) * std::exp(p.alpha * std::conj(phi(beta)) * z);
    kernel_gap = std::max(kernel_gap, std::abs(lhs - rhs));
  }
  report.add_residual(0, kernel_gap, "kernel identity |W K_beta - W* K_beta| over 20 pairs", 1e-10);
  return report.finalize();
}

CheckReport check_selfadjoint_reverse(const WcoWeight& weight, const CompositionMap& map, FockParams params,
                                      double tol) {
  const auto* affine = std::get_if<AffineMap>(&map);
  if (!affine) throw PreconditionError("selfadjoint-reverse: map must be affine");

  const Complex c = weight.eval(0.0);
  const Complex a0 = affine->offset;
  const Complex a1 = affine->slope;
  const auto expected = exp_linear(params.alpha() * std::conj(a0), c, params);
  const double mismatch = max_coeff_diff(weight.materialize(params), expected);

  CheckReport report("selfadjoint-reverse", {{"weight", to_json(weight)},
                                             {"map", to_json(map)},
                                             {"alpha", params.alpha()},
                                             {"order", params.order()},
                                             {"extracted", {{"c", complex_to_json(c)},
                                                            {"a0", complex_to_json(a0)},
                                                            {"a1", complex_to_json(a1)}}}});
  report.add_residual(0, std::abs(c.imag()), "|Im c|, c = f(0)", tol)
      .add_residual(0, std::abs(a1.imag()), "|Im a1|, a1 = phi'(0)", tol)
      .add_residual(params.order(), mismatch, "max |f_k - coeff_k(c exp(alpha conj(a0) z))|", tol);
  return report.finalize();
}

bool disk_selfmap_criterion(Complex a0, double a1) {
  const double r = std::abs(a0);
  return r < 1.0 && a1 >= -1.0 + r - kIdentityTol && a1 <= 1.0 - r + kIdentityTol;
}

CheckReport check_disk_selfmap(Complex a0, double a1) {
  const bool inside = disk_selfmap_criterion(a0, a1);
  const AffineMap phi(a1, a0);
  double boundary_max = 0.0;
  constexpr int kBoundaryPoints = 1000;
  for (int k = 0; k < kBoundaryPoints; ++k) {
    boundary_max = std::max(boundary_max, std::abs(phi(std::polar(1.0, 2.0 * std::numbers::pi * k / kBoundaryPoints))));
  }
  CheckReport report("disk-selfmap", {{"a0", complex_to_json(a0)}, {"a1", a1}, {"criterion", inside}});
  report.add_residual(0, boundary_max, "max |phi(z)| over 1000 points of |z| = 1", 1.0, Bound::Measured);
  report.note(inside ? "phi maps the open unit disk into itself" : "phi does not map the open unit disk into itself");
  return report.finalize(true);
}

}  // namespace fockcalc
