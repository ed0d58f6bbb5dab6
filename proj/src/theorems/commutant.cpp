#include <algorithm>
#include <cmath>
#include <functional>

#include "fockcalc/errors.hpp"
#include "fockcalc/json_io.hpp"
#include "fockcalc/theorems.hpp"

namespace fockcalc {

namespace {

bool near(Complex x, Complex y) { return std::abs(x - y) <= kIdentityTol; }

nlohmann::ordered_json tuple_json(const std::array<Complex, 4>& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const Complex& c : t) j.push_back(complex_to_json(c));
  return j;
}

}  // namespace

CommutantParams CommutantParams::make(Complex eta, Complex b) {
  require_finite(eta, "eta");
  require_finite(b, "b");
  if (b == Complex{}) throw PreconditionError("commutant symbols: fixed point b must be nonzero");
  const double nb = std::norm(b);
  const Complex den = nb * eta - 1.0;
  if (std::abs(den) <= kIdentityTol) throw PreconditionError("commutant symbols: |b|^2 eta = 1");
  CommutantParams cp;
  cp.eta = eta;
  cp.b = b;
  cp.d0 = (eta - 1.0) * b / den;
  cp.d1 = (eta - 1.0) * std::conj(b) / den;
  cp.d2 = eta * (nb - 1.0) * (nb - 1.0) / (den * den);
  cp.d3 = (nb - eta) / den;
  return cp;
}

Complex CommutantParams::d_form(Complex z) const {
  const Complex den = 1.0 - d1 * z;
  if (std::abs(den) < kPoleMargin) throw PoleProximity("d-form of psi evaluated at its pole");
  return d0 + d2 * z / den;
}

nlohmann::ordered_json CommutantParams::to_json() const {
  return {{"eta", complex_to_json(eta)}, {"b", complex_to_json(b)},   {"d0", complex_to_json(d0)},
          {"d1", complex_to_json(d1)},   {"d2", complex_to_json(d2)}, {"d3", complex_to_json(d3)}};
}

CommutantSymbols commutant_symbols(Complex eta, Complex b, std::span<const Complex> samples, double alpha) {
  const CommutantParams cp = CommutantParams::make(eta, b);
  const double nb = std::norm(b);
  const LinearFractionalMap psi(nb - eta, (eta - 1.0) * b, std::conj(b) * (1.0 - eta), nb * eta - 1.0);
  // g(z) = g(b) exp(alpha conj(b) (z - psi(z))) with g(b) = 1.
  WcoWeight g = WcoWeight::exp_moebius(1.0, alpha * std::conj(b), psi);

  double agreement = 0.0;
  for (Complex z : samples) {
    if (psi.has_pole() && std::abs(z - psi.pole()) < kSampleMargin) continue;
    const Complex mobius = psi.eval(z);
    agreement = std::max(agreement, std::abs(cp.d_form(z) - mobius) / std::max(1.0, std::abs(mobius)));
  }
  return {psi, std::move(g), cp, agreement};
}

CheckReport check_commutant_symbols(const SelfAdjointSymbolParams& f_params, Complex eta,
                                    std::span<const Complex> samples, double tol) {
  f_params.validate();
  const AffineMap phi = f_params.map();
  const Complex b = fixed_point(phi);
  const CommutantSymbols cs = commutant_symbols(eta, b, samples, f_params.alpha);
  const WcoWeight f = f_params.weight();
  const auto& cp = cs.params;

  CheckReport report("commutant-symbols",
                     {{"symbol", f_params.to_json()}, {"commutant", cp.to_json()}, {"psi", to_json(cs.psi)}});
  report.add_residual(0, cs.form_agreement, "d-form vs Moebius form of psi, max relative gap", tol);
  report.add_residual(0, std::abs(cs.psi.eval(0.0) - cp.d0), "|psi(0) - d0|", tol);
  report.add_residual(0, std::abs(cs.psi.eval(b) - b) / std::max(1.0, std::abs(b)), "|psi(b) - b|", tol);
  report.add_residual(0, std::abs(cs.g.eval(b) - 1.0), "|g(b) - 1|", tol);

  // W_{f,phi} W_{g,psi} h = f (g o phi) (h o psi o phi);  W_{g,psi} W_{f,phi} h = g (f o psi) (h o phi o psi)
  const std::array<std::function<Complex(Complex)>, 4> tests{
      [](Complex) { return Complex{1.0}; }, [](Complex w) { return w; }, [](Complex w) { return w * w; },
      [](Complex w) { return std::exp(0.3 * w); }};
  double commutation = 0.0;
  std::size_t skipped = 0;
  for (Complex z : samples) {
    try {
      const Complex pz = cs.psi.eval(z, kSampleMargin);
      const Complex ppz = cs.psi.eval(phi(z), kSampleMargin);
      const Complex lead = f.eval(z) * cs.g.eval(phi(z));
      const Complex trail = cs.g.eval(z) * f.eval(pz);
      for (const auto& h : tests) commutation = std::max(commutation, std::abs(lead * h(ppz) - trail * h(phi(pz))));
    } catch (const PoleProximity&) {
      ++skipped;
    }
  }
  report.add_residual(0, commutation, "max |f g(phi) h(psi(phi)) - g f(psi) h(phi(psi))|, h in {1, z, z^2, e^{0.3z}}",
                      tol, Bound::Measured);
  if (skipped > 0) report.note(std::to_string(skipped) + " samples skipped near a pole of psi");
  if (std::abs(cp.d0) >= 1.0) report.note("psi(0) = d0 lies outside the unit disk");
  if (near(eta, 1.0)) report.note("eta = 1: psi is the identity and g is constant");
  report.note("g built from g(z) = g(b) exp(conj(b)(z - psi(z))); the two printed closed forms disagree on the "
              "denominator (1 - d0 z) vs (1 - d1 z)");
  report.note("commutation with W_{f,phi} is measured, not asserted");
  return report.finalize();
}

CheckReport check_moebius_conjugation(const LinearFractionalMap& psi, Complex b, Complex eta,
                                      std::span<const Complex> samples, double tol) {
  const Complex bc = std::conj(b);
  double worst = 0.0;
  for (Complex z : samples) {
    const Complex den_z = bc * z - 1.0;
    if (std::abs(den_z) < kSampleMargin) throw PoleProximity("moebius-conjugation: sample near 1/conj(b)");
    const Complex w = psi.eval(z, kSampleMargin);
    const Complex den_w = bc * w - 1.0;
    if (std::abs(den_w) < kSampleMargin) throw PoleProximity("moebius-conjugation: psi(z) near 1/conj(b)");
    worst = std::max(worst, std::abs((w - b) / den_w - eta * (z - b) / den_z));
  }
  CheckReport report("moebius-conjugation", {{"psi", to_json(psi)},
                                             {"b", complex_to_json(b)},
                                             {"eta", complex_to_json(eta)},
                                             {"samples", samples.size()}});
  report.add_residual(0, worst, "max |(psi - b)/(conj(b) psi - 1) - eta (z - b)/(conj(b) z - 1)|", tol);
  return report.finalize();
}

std::array<Complex, 4> printed_phi_after_psi(Complex eta) {
  return {7.0 / 36.0 - eta / 3.0, 2.0 / 9.0 * eta - 7.0 / 24.0, (1.0 - eta) / 6.0, eta / 9.0 - 0.25};
}

std::array<Complex, 4> printed_psi_after_phi(Complex eta) {
  return {1.0 / 9.0 - eta / 4.0, eta / 6.0 - 4.0 / 9.0, (1.0 - eta) / 6.0, eta / 9.0 - 2.0 / 3.0};
}

CheckReport reproduce_counterexample(Complex eta, double tol) {
  require_finite(eta, "eta");
  for (Complex bad : {Complex{0.0}, Complex{9.0 / 4.0}, Complex{6.0}}) {
    if (near(eta, bad)) throw PreconditionError("counterexample: eta makes psi or a composed denominator degenerate");
  }
  const AffineMap phi(0.25, 0.5);
  const Complex b = fixed_point(phi);
  const LinearFractionalMap psi = commutant_symbols(eta, b, {}).psi;
  const auto phi_lft = LinearFractionalMap::from_affine(phi);
  const LinearFractionalMap phi_psi = compose(phi_lft, psi);
  const LinearFractionalMap psi_phi = compose(psi, phi_lft);
  const auto printed_pp = printed_phi_after_psi(eta);
  const auto printed_sp = printed_psi_after_phi(eta);
  // 1/2 + psi(z), without the 1/4 from phi.
  const std::array<Complex, 4> half_plus_psi{psi.p() + 0.5 * psi.r(), psi.q() + 0.5 * psi.s(), psi.r(), psi.s()};

  const Complex at0_phi_psi = phi_psi.eval(0.0);
  const Complex at0_psi_phi = psi_phi.eval(0.0);
  const Complex at0_printed = printed_pp[1] / printed_pp[3];

  CheckReport report("counterexample", {{"eta", complex_to_json(eta)},
                                        {"b", complex_to_json(b)},
                                        {"phi_after_psi", tuple_json(phi_psi.coefficients())},
                                        {"psi_after_phi", tuple_json(psi_phi.coefficients())},
                                        {"printed_phi_after_psi", tuple_json(printed_pp)},
                                        {"printed_psi_after_phi", tuple_json(printed_sp)},
                                        {"phi_psi_at_0", complex_to_json(at0_phi_psi)},
                                        {"psi_phi_at_0", complex_to_json(at0_psi_phi)},
                                        {"printed_phi_psi_at_0", complex_to_json(at0_printed)}});

  const double gap_pp = projective_distance(phi_psi.coefficients(), printed_pp);
  const double gap_sp = projective_distance(psi_phi.coefficients(), printed_sp);
  report.add_residual(0, gap_pp, "phi o psi vs printed tuple (projective)", tol);
  report.add_residual(0, gap_sp, "psi o phi vs printed tuple (projective)", tol);
  report.add_residual(0, projective_distance(printed_pp, half_plus_psi), "printed phi o psi tuple vs 1/2 + psi", tol,
                      Bound::Measured);

  if (near(eta, 1.0)) {
    const bool collapse = projective_distance(phi_psi.coefficients(), phi_lft.coefficients()) <= tol &&
                          projective_distance(psi_phi.coefficients(), phi_lft.coefficients()) <= tol;
    report.add_condition("eta = 1: phi o psi = psi o phi = phi", collapse);
  } else {
    report.add_condition("phi(psi(0)) != psi(phi(0))", std::abs(at0_phi_psi - at0_psi_phi) > tol);
  }
  if (gap_pp > tol && projective_distance(printed_pp, half_plus_psi) <= tol) {
    report.note("printed phi o psi tuple equals the tuple of 1/2 + psi(z); the true composition is 1/2 + psi(z)/4");
  }
  return report.finalize();
}

}  // namespace fockcalc
