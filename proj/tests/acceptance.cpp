// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fockcalc/cli/app.hpp"
#include "fockcalc/errors.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/theorems.hpp"
#include "golden/normality_floor.hpp"
#include "support.hpp"

using namespace fockcalc;
using testing_support::Gen;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

SelfAdjointSymbolParams symbol(Complex c, Complex a0, Complex a1) {
  SelfAdjointSymbolParams p;
  p.c = c;
  p.a0 = a0;
  p.a1 = a1;
  return p;
}

SelfAdjointSymbolParams worked() { return symbol(1.0, 0.5, 0.25); }

double residual(const CheckReport& r, const std::string& prefix) {
  for (const auto& x : r.residuals()) {
    if (x.label.rfind(prefix, 0) == 0) return x.value;
  }
  return NAN;
}

double max_residual(const CheckReport& r, const std::string& prefix = "") {
  double m = 0.0;
  for (const auto& x : r.residuals()) {
    if (x.label.rfind(prefix, 0) == 0) m = std::max(m, x.value);
  }
  return m;
}

double hermitian_min(const SelfAdjointSymbolParams& p) {
  double m = INFINITY;
  for (int order : kDefaultOrders) {
    m = std::min(m, hermitian_residual(assemble_matrix(p.symbol(), FockParams(p.alpha, order))));
  }
  return m;
}

Outcome criterion1() {
  double worst = 0.0;
  for (int order : kDefaultOrders) {
    worst = std::max(worst, hermitian_residual(assemble_matrix(worked().symbol(), FockParams(1.0, order))));
  }
  return {worst <= 1e-12, "max hermitian residual over N=16,32,64 " + fmt("%.3g", worst)};
}

Outcome criterion2() {
  Gen g(2024);
  double weakest = INFINITY;
  for (int draw = 0; draw < 100; ++draw) {
    const Complex a0 = g.in_disk(0.95);
    const double r = std::abs(a0);
    auto p = symbol(g.real(0.2, 2.0) * (g.integer(0, 1) ? 1.0 : -1.0), a0, g.real(-1.0 + r, 1.0 - r));
    const double delta = g.integer(0, 1) ? 0.1 : -0.1;
    switch (draw % 3) {
      case 0: p.c += Complex(0.0, delta); break;
      case 1: p.a1 += Complex(0.0, delta); break;
      default: p.exponent_offset = g.integer(0, 1) ? Complex(delta, 0.0) : Complex(0.0, delta); break;
    }
    weakest = std::min(weakest, hermitian_min(p));
  }
  return {weakest >= 1e-3, "smallest perturbed residual over 100 draws " + fmt("%.3g", weakest)};
}

Outcome criterion3() {
  const AffineMap phi(0.25, 0.5);
  const double b_err = std::abs(fixed_point(phi) - 2.0 / 3.0);
  const double h = max_residual(check_h_conjugation(phi, default_samples()));
  return {b_err <= 1e-15 && h <= 1e-12, "|b - 2/3| " + fmt("%.3g", b_err) + ", h conjugation " + fmt("%.3g", h)};
}

Outcome criterion4() {
  Gen g(404);
  int disagreements = 0;
  for (int draw = 0; draw < 200; ++draw) {
    const Complex a0 = g.in_disk(1.2);
    const double a1 = g.real(-1.2, 1.2);
    double boundary_max = 0.0;
    for (int k = 0; k < 1000; ++k) {
      boundary_max = std::max(boundary_max, std::abs(a0 + a1 * std::polar(1.0, 2.0 * M_PI * k / 1000.0)));
    }
    if ((boundary_max <= 1.0) != disk_selfmap_criterion(a0, a1)) ++disagreements;
  }
  return {disagreements == 0, std::to_string(disagreements) + " disagreements in 200 draws"};
}

Outcome criterion5() {
  const auto r = check_eigen_identity(worked(), 5, default_samples(), 32);
  const double pointwise = max_residual(r, "j=");
  const double kernel = residual(r, "W K_b");
  return {pointwise <= 1e-10 && kernel <= 1e-11,
          "pointwise j<=5 " + fmt("%.3g", pointwise) + ", kernel at N=32 " + fmt("%.3g", kernel)};
}

Outcome criterion6() {
  const auto samples = default_samples();
  const auto deg = commutant_symbols(1.0, 2.0 / 3.0, samples);
  const bool degenerate = deg.params.d0 == Complex(0.0) && deg.params.d1 == Complex(0.0) &&
                          deg.params.d2 == Complex(1.0) &&
                          projective_distance(deg.psi.coefficients(), {1.0, 0.0, 0.0, 1.0}) == 0.0;

  Gen g(606);
  double conj_worst = 0.0;
  int done = 0;
  while (done < 50) {
    const Complex b = g.annulus(0.05, 0.9);
    const Complex eta = g.in_disk(3.0);
    if (std::abs(std::norm(b) * eta - 1.0) < 0.05) continue;
    try {
      conj_worst = std::max(conj_worst, max_residual(check_moebius_conjugation(
                                            commutant_symbols(eta, b, samples).psi, b, eta, samples)));
      ++done;
    } catch (const PoleProximity&) {
    }
  }

  const auto ce = reproduce_counterexample(2.0);
  const double psi_phi = residual(ce, "psi o phi vs printed");
  const double phi_psi = residual(ce, "phi o psi vs printed");
  const double at0_phi_psi = ce.params()["phi_psi_at_0"]["re"].get<double>();
  const double at0_psi_phi = ce.params()["psi_phi_at_0"]["re"].get<double>();
  const double printed_at0 = ce.params()["printed_phi_psi_at_0"]["re"].get<double>();
  const bool noncommuting = std::abs(at0_phi_psi - at0_psi_phi) > 1e-3;

  const bool ok = degenerate && conj_worst <= 1e-12 && psi_phi <= 1e-12 && phi_psi <= 1e-12 && noncommuting;
  std::string d = std::string("eta=1 degeneration ") + (degenerate ? "exact" : "WRONG") + ", moebius conjugation " +
                  fmt("%.3g", conj_worst) + " over 50 draws, psi o phi tuple " + fmt("%.3g", psi_phi) +
                  ", phi o psi tuple " + fmt("%.3g", phi_psi) + "; phi o psi(0) = " + fmt("%.6g", at0_phi_psi) +
                  " (printed tuple gives " + fmt("%.6g", printed_at0) + "), psi o phi(0) = " +
                  fmt("%.6g", at0_psi_phi);
  if (!ok && phi_psi > 1e-12) {
    d += "\n    the printed phi o psi tuple equals 1/2 + psi(z), not phi(psi(z)) = 1/2 + psi(z)/4;"
         " non-commutation still holds";
  }
  return {ok, d};
}

Outcome criterion7() {
  const auto r = check_degenerate_commutant(2.0 / 3.0, worked(), kDefaultOrders);
  const double g = r.params()["g"].get<double>();
  const double g_err = std::abs(g - std::exp(-2.0 / 9.0));
  const double scalar = max_residual(r, "max |M - g I|");
  const double comm = max_residual(r, "commutator");
  const double normal = max_residual(r, "||M^H M");
  const bool ok = g_err <= 1e-15 && scalar <= 1e-14 && comm <= 1e-12 && normal <= 1e-14;
  return {ok, "|g - e^{-2/9}| " + fmt("%.3g", g_err) + ", scalar " + fmt("%.3g", scalar) + ", commutator " +
                  fmt("%.3g", comm) + ", normality " + fmt("%.3g", normal)};
}

Outcome criterion8() {
  Gen g(808);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const AffineMap phi(g.in_disk(0.95), g.in_disk(1.0));
    const auto betas = random_disk_points(20, 0.9, 1000 + i);
    worst = std::max(worst, max_residual(check_cphi_adjoint_factorization(phi, betas, FockParams(1.0, 64))));
  }
  return {worst <= 1e-11, "max kernel identity residual over 20 maps x 20 beta " + fmt("%.3g", worst)};
}

Outcome criterion9() {
  constexpr double kFloor = 1e-10;
  const std::vector<int> orders{32, 64};
  Gen g(909);
  double normal_worst = 0.0;
  double skew_least = INFINITY;
  bool monotone = true;
  for (int draw = 0; draw < 50; ++draw) {
    const auto n = assemble_matrix({WcoWeight::one(), AffineMap(g.in_disk(0.95), 0.0)}, FockParams(1.0, 64));
    normal_worst = std::max(normal_worst, normality_residual(n, default_block(FockParams(1.0, 64))));

    Complex a;
    do a = g.in_disk(0.95);
    while (std::abs(a - 1.0) < 0.1);
    const Complex b = g.annulus(0.1, 1.0);
    double prev = 0.0;
    for (int order : orders) {
      const FockParams p(1.0, order);
      const double r = normality_residual(assemble_matrix({WcoWeight::one(), AffineMap(a, b)}, p), default_block(p));
      skew_least = std::min(skew_least, r);
      if (r < prev * (1.0 - 1e-12)) monotone = false;
      prev = r;
    }
  }
  const FockParams p32(1.0, 32);
  const double golden_gap =
      std::abs(normality_residual(assemble_matrix({WcoWeight::one(), AffineMap(0.5, 0.3)}, p32), default_block(p32)) -
               golden::kNormalityN32);
  const bool ok = normal_worst <= kFloor && skew_least >= 100.0 * kFloor && monotone && golden_gap <= 1e-12;
  return {ok, "b=0 worst " + fmt("%.3g", normal_worst) + ", b!=0 least " + fmt("%.3g", skew_least) +
                  (monotone ? ", non-decreasing" : ", NOT monotone") + ", golden gap " + fmt("%.3g", golden_gap)};
}

Outcome criterion10() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const FockParams p(alpha, 16);
    const QuadratureGrid grid(p);
    std::vector<TruncatedSeries> z;
    std::vector<GridValues> values;
    for (int n = 0; n <= 16; ++n) {
      z.push_back(TruncatedSeries::monomial(p, n));
      values.push_back(sample_on_grid(z.back(), grid));
    }
    for (int n = 0; n <= 16; ++n) {
      for (int m = 0; m <= 16; ++m) {
        const double scale = std::sqrt(monomial_norm_sq(n, alpha) * monomial_norm_sq(m, alpha));
        const Complex q = quad_inner_product(values[n], values[m], grid);
        worst = std::max(worst, std::abs(q - inner_product(z[n], z[m])) / scale);
      }
    }
  }
  return {worst <= 1e-8, "max normalised gap over n,m <= 16, alpha in {0.5,1,2} " + fmt("%.3g", worst)};
}

Outcome criterion11() {
  const cli::RunConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = cli::run_suite(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto second = cli::run_suite(cfg);
  const bool identical = cli::render(first, cfg, cli::OutputFormat::Json) ==
                         cli::render(second, cfg, cli::OutputFormat::Json);
  std::string failing;
  for (const auto& r : first.reports) {
    if (r.verdict() == Verdict::Fail) failing += (failing.empty() ? "" : ", ") + r.check();
  }
  const bool ok = seconds < 30.0 && identical && failing.empty();
  std::string d = fmt("%.2f", seconds) + " s, " + (identical ? "byte-identical" : "OUTPUT DIFFERS") +
                  ", failing checks: " + (failing.empty() ? "none" : failing);
  if (!failing.empty()) d += "\n    the counterexample check fails on the printed phi o psi tuple, see criterion 6";
  return {ok, d};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  const double budget[] = {1.0, 5.0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget[i] > 0 && seconds >= budget[i]) {
      o.ok = false;
      o.detail += ", over the " + fmt("%.0f", budget[i]) + " s budget";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2zu: %s  %s  [%.3f s]\n", i + 1, o.ok ? "PASS" : "FAIL", o.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
