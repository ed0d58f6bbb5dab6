#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fockcalc {

using Complex = std::complex<double>;

inline constexpr int kMaxOrder = 170;  // n! overflows double beyond this
inline constexpr int kDefaultOrder = 32;
inline constexpr double kDefaultAlpha = 1.0;

bool is_finite(Complex z) noexcept;

// Throws NonFiniteValue naming `what` when z is NaN or infinite.
Complex require_finite(Complex z, const char* what);

/// Gaussian weight parameter alpha and truncation degree N shared by every
/// series and matrix that takes part in one computation.
class FockParams {
 public:
  /// Throws PreconditionError unless alpha > 0 and 1 <= order <= 170.
  FockParams(double alpha, int order);

  static FockParams with_order(int order) { return {kDefaultAlpha, order}; }

  double alpha() const noexcept { return alpha_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(order_) + 1; }

  friend bool operator==(const FockParams&, const FockParams&) = default;

 private:
  double alpha_;
  int order_;
};

// n! for 0 <= n <= 170, iterated in double precision.
double factorial(int n);

// ||z^n||^2 = n! / alpha^n in F^2_alpha.
double monomial_norm_sq(int n, double alpha);

/// Taylor coefficients c_0..c_N of an entire function truncated at degree N.
/// Immutable; every coefficient is finite.
class TruncatedSeries {
 public:
  /// Coefficients beyond the supplied ones are zero. More than N+1
  /// coefficients is a PreconditionError.
  TruncatedSeries(FockParams params, std::span<const Complex> coeffs);
  TruncatedSeries(FockParams params, std::initializer_list<Complex> coeffs);

  static TruncatedSeries zero(FockParams params);
  static TruncatedSeries constant(FockParams params, Complex value);
  static TruncatedSeries monomial(FockParams params, int degree, Complex scale = 1.0);

  const FockParams& params() const noexcept { return params_; }
  int order() const noexcept { return params_.order(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Horner evaluation of the truncated polynomial.
  Complex eval(Complex z) const;

  /// Same coefficients re-tagged with `params`: zero-padded or cut to the new order.
  TruncatedSeries resized(FockParams params) const;

  /// Coordinates against the orthonormal basis e_k = sqrt(alpha^k/k!) z^k.
  std::vector<Complex> orthonormal_coords() const;
  static TruncatedSeries from_orthonormal_coords(FockParams params, std::span<const Complex> coords);

 private:
  FockParams params_;
  std::vector<Complex> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, Complex factor);

// Cauchy product truncated at degree N.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// scale * exp(w z), coefficients scale * w^k / k!.
TruncatedSeries exp_linear(Complex w, Complex scale, FockParams params);

/// p(a z + b) truncated at degree N. Computed by a Taylor shift (p(z + b))
/// followed by the dilation z -> a z, both exact for a degree-N polynomial.
TruncatedSeries compose_affine(const TruncatedSeries& p, Complex a, Complex b);

// <f, g> = sum_k f_k conj(g_k) k!/alpha^k.
Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g);

double norm(const TruncatedSeries& f);

// K_w(z) = exp(alpha conj(w) z).
TruncatedSeries kernel_series(Complex w, FockParams params);

// e_n = sqrt(alpha^n / n!) z^n, 0 <= n <= N.
TruncatedSeries orthonormal_basis_element(int n, FockParams params);

// max_k |a_k - b_k| over raw coefficients.
double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b);

// max_k over the leading `count` orthonormal coordinates.
double max_orthonormal_diff(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t count);

}  // namespace fockcalc
