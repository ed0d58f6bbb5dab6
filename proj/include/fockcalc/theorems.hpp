#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fockcalc/report.hpp"
#include "fockcalc/samples.hpp"
#include "fockcalc/wco.hpp"

namespace fockcalc {

inline constexpr double kIdentityTol = 1e-12;   // pure arithmetic identities
inline constexpr double kSampleMargin = 1e-3;   // pole exclusion for sample sets
inline const std::vector<int> kDefaultOrders{16, 32, 64};

/// Symbols of the self-adjoint family: weight c * exp((alpha conj(a0) + exponent_offset) z),
/// map a0 + a1 z. The theorem requires c and a1 real and exponent_offset = 0;
/// those fields stay complex so perturbed (non self-adjoint) members can be
/// expressed and falsified.
struct SelfAdjointSymbolParams {
  Complex c{1.0};
  Complex a0{0.0};
  Complex a1{0.5};
  double alpha = kDefaultAlpha;
  Complex exponent_offset{0.0};

  /// Throws PreconditionError for c = 0 or alpha <= 0.
  void validate() const;
  WcoWeight weight() const;
  AffineMap map() const { return {a1, a0}; }
  WcoSymbol symbol() const { return {weight(), map()}; }
  nlohmann::ordered_json to_json() const;
};

// ---- Self-adjointness ------------------------------------------------------

/// Hermitian residual of the finite section at each order, plus the kernel
/// identity W K_beta = W* K_beta at 20 seeded (z, beta) pairs in |.| <= 0.9.
CheckReport check_selfadjoint_forward(const SelfAdjointSymbolParams& p, std::span<const int> orders,
                                      std::uint64_t seed = kDefaultSeed, double tol = kIdentityTol);

/// Reads c = weight(0), a0 = map offset, a1 = map slope off a given symbol and
/// checks c, a1 real and weight == c exp(alpha conj(a0) z) coefficientwise.
CheckReport check_selfadjoint_reverse(const WcoWeight& weight, const CompositionMap& map,
                                      FockParams params = FockParams(kDefaultAlpha, kDefaultOrder),
                                      double tol = kIdentityTol);

// ---- Fixed point and the conjugating map h -------------------------------

/// b = offset / (1 - slope). Throws PreconditionError when slope = 1 (either
/// no fixed point, or the identity map where every point is fixed).
Complex fixed_point(const AffineMap& map);

// b together with |phi(b) - b| relative to max(1, |b|), limit 1e-15.
CheckReport check_fixed_point(const AffineMap& map);

// h(z) = (z - b) / (conj(b) z - 1)
Complex conjugating_map(Complex b, Complex z);

// a1 (conj(b) z - 1) / (conj(b) a1 z + conj(b) a0 - 1), z-dependent exactly as printed.
Complex conjugation_factor(const AffineMap& map, Complex b, Complex z);

CheckReport check_h_conjugation(const AffineMap& map, std::span<const Complex> samples, double tol = kIdentityTol);

// |a0| < 1 and -1 + |a0| <= a1 <= 1 - |a0|, with 1e-12 slack on the a1 bounds.
bool disk_selfmap_criterion(Complex a0, double a1);

CheckReport check_disk_selfmap(Complex a0, double a1);

// ---- Eigen-identity -------------------------------------------------------

// e_j(z) = exp(alpha conj(b) z - alpha |b|^2 / 2) h(z)^j
Complex eigen_candidate(Complex b, double alpha, int j, Complex z);

/// Pointwise f(z) e_j(phi(z)) = conj(f(b)) factor(z)^j e_j(z) for j <= j_max, and
/// the kernel relation W K_b = conj(f(b)) K_b coefficientwise at `kernel_order`.
CheckReport check_eigen_identity(const SelfAdjointSymbolParams& p, int j_max, std::span<const Complex> samples,
                                 int kernel_order = 32, double tol = 1e-10, double kernel_tol = 1e-11);

CheckReport check_fixed_point_transfer(const SelfAdjointSymbolParams& f_params, const CompositionMap& psi,
                                       const WcoWeight& g, std::span<const Complex> samples, double tol = 1e-10);

// ---- Commutant generator ---------------------------------------------------

struct CommutantParams {
  Complex eta, b;
  Complex d0, d1, d2, d3;

  /// Throws PreconditionError for b = 0 or |b|^2 eta = 1.
  static CommutantParams make(Complex eta, Complex b);
  // d0 + d2 z / (1 - d1 z)
  Complex d_form(Complex z) const;
  nlohmann::ordered_json to_json() const;
};

struct CommutantSymbols {
  LinearFractionalMap psi;  // ((|b|^2 - eta) z + (eta - 1) b) / (conj(b)(1 - eta) z + |b|^2 eta - 1)
  WcoWeight g;              // exp(conj(b) (z - psi(z))), normalised so g(b) = 1
  CommutantParams params;
  double form_agreement;    // max relative gap between d-form and Moebius form on the samples
};

/// With alpha != 1 the weight exponent picks up the factor alpha (g = exp(alpha conj(b) (z - psi(z)))).
CommutantSymbols commutant_symbols(Complex eta, Complex b, std::span<const Complex> samples,
                                   double alpha = kDefaultAlpha);

/// Consistency of the generated (psi, g) and the measured pointwise commutation
/// residual with W_{f,phi}, b being the fixed point of f_params.
CheckReport check_commutant_symbols(const SelfAdjointSymbolParams& f_params, Complex eta,
                                    std::span<const Complex> samples, double tol = kIdentityTol);

CheckReport check_moebius_conjugation(const LinearFractionalMap& psi, Complex b, Complex eta,
                                      std::span<const Complex> samples, double tol = kIdentityTol);

// Coefficient tuples (p, q, r, s) as printed for the worked example phi(z) = 1/2 + z/4.
std::array<Complex, 4> printed_phi_after_psi(Complex eta);
std::array<Complex, 4> printed_psi_after_phi(Complex eta);

CheckReport reproduce_counterexample(Complex eta, double tol = kIdentityTol);

// ---- Degenerate commutant, adjoint factorisation, normality ---------------

CheckReport check_degenerate_commutant(Complex b, const SelfAdjointSymbolParams& f_params,
                                       std::span<const int> orders);

CheckReport check_cphi_adjoint_factorization(const AffineMap& map, std::span<const Complex> samples,
                                             FockParams params, double tol = 1e-11);

// Printed predicate: a = 1 or b = 0 (1e-12 tolerance).
bool normality_criterion(const AffineMap& map);

/// Pass iff the printed predicate and the measured residual agree: residual
/// <= tol when the predicate holds, >= 10 tol and non-decreasing in N otherwise.
CheckReport check_normality(const WcoWeight& weight, const AffineMap& map, std::span<const int> orders,
                            double alpha = kDefaultAlpha, double tol = 1e-9);

// Classification plus sup over a radial grid of exp(|phi(z)|^2 - |z|^2).
CheckReport check_boundedness(const AffineMap& map);

}  // namespace fockcalc
