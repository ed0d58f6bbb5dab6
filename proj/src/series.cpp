#include "fockcalc/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fockcalc/errors.hpp"

namespace fockcalc {

namespace {

const std::array<double, kMaxOrder + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxOrder + 1> t{};
    t[0] = 1.0;
    for (int k = 1; k <= kMaxOrder; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table;
}

void require_same_params(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (!(a.params() == b.params())) {
    throw ParamsMismatch(std::string(op) + ": operands have different (alpha, order)");
  }
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw NonFiniteValue(std::string(what) + " is not finite");
  return z;
}

FockParams::FockParams(double alpha, int order) : alpha_(alpha), order_(order) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw PreconditionError("FockParams: alpha must be a positive finite number");
  }
  if (order < 1 || order > kMaxOrder) {
    throw PreconditionError("FockParams: order must lie in [1, " + std::to_string(kMaxOrder) + "]");
  }
}

double factorial(int n) {
  if (n < 0 || n > kMaxOrder) throw PreconditionError("factorial: argument out of range");
  return factorial_table()[static_cast<std::size_t>(n)];
}

double monomial_norm_sq(int n, double alpha) { return factorial(n) / std::pow(alpha, n); }

TruncatedSeries::TruncatedSeries(FockParams params, std::span<const Complex> coeffs)
    : params_(params), coeffs_(params.size(), Complex{}) {
  if (coeffs.size() > params.size()) {
    throw PreconditionError("TruncatedSeries: more coefficients than order + 1");
  }
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
  for (const Complex& c : coeffs_) require_finite(c, "series coefficient");
}

TruncatedSeries::TruncatedSeries(FockParams params, std::initializer_list<Complex> coeffs)
    : TruncatedSeries(params, std::span<const Complex>(coeffs.begin(), coeffs.size())) {}

TruncatedSeries TruncatedSeries::zero(FockParams params) {
  return TruncatedSeries(params, std::vector<Complex>(params.size()));
}

TruncatedSeries TruncatedSeries::constant(FockParams params, Complex value) {
  std::vector<Complex> c(params.size());
  c[0] = value;
  return TruncatedSeries(params, std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(FockParams params, int degree, Complex scale) {
  if (degree < 0 || degree > params.order()) {
    throw PreconditionError("monomial: degree outside [0, order]");
  }
  std::vector<Complex> c(params.size());
  c[static_cast<std::size_t>(degree)] = scale;
  return TruncatedSeries(params, std::move(c));
}

Complex TruncatedSeries::eval(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return require_finite(acc, "series value");
}

TruncatedSeries TruncatedSeries::resized(FockParams params) const {
  std::vector<Complex> c(params.size());
  const std::size_t n = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, c.begin());
  return TruncatedSeries(params, std::move(c));
}

std::vector<Complex> TruncatedSeries::orthonormal_coords() const {
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * std::sqrt(monomial_norm_sq(static_cast<int>(k), params_.alpha()));
  }
  return out;
}

TruncatedSeries TruncatedSeries::from_orthonormal_coords(FockParams params,
                                                         std::span<const Complex> coords) {
  if (coords.size() > params.size()) {
    throw PreconditionError("from_orthonormal_coords: more coordinates than order + 1");
  }
  std::vector<Complex> c(params.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    c[k] = coords[k] / std::sqrt(monomial_norm_sq(static_cast<int>(k), params.alpha()));
  }
  return TruncatedSeries(params, std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_params(a, b, "series_add");
  std::vector<Complex> c(a.params().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(a.params(), c);
}

TruncatedSeries series_scale(const TruncatedSeries& a, Complex factor) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= factor;
  return TruncatedSeries(a.params(), c);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_params(a, b, "series_mul");
  const std::size_t n = a.params().size();
  std::vector<Complex> c(n);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < n; ++i) {
    if (ac[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += ac[i] * bc[j];
  }
  return TruncatedSeries(a.params(), c);
}

TruncatedSeries exp_linear(Complex w, Complex scale, FockParams params) {
  require_finite(w, "exp_linear rate");
  require_finite(scale, "exp_linear scale");
  std::vector<Complex> c(params.size());
  Complex term = scale;
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = term;
    term *= w / static_cast<double>(k + 1);
  }
  return TruncatedSeries(params, c);
}

TruncatedSeries compose_affine(const TruncatedSeries& p, Complex a, Complex b) {
  require_finite(a, "affine slope");
  require_finite(b, "affine offset");
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = c.size();
  // Taylor shift: c <- coefficients of p(z + b).
  if (b != Complex{}) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) c[j - 1] += b * c[j];
    }
  }
  Complex power = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    c[j] *= power;
    power *= a;
  }
  return TruncatedSeries(p.params(), c);
}

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_params(f, g, "inner_product");
  const double alpha = f.params().alpha();
  Complex acc{};
  for (std::size_t k = 0; k < f.params().size(); ++k) {
    acc += f[k] * std::conj(g[k]) * monomial_norm_sq(static_cast<int>(k), alpha);
  }
  return require_finite(acc, "inner product");
}

double norm(const TruncatedSeries& f) { return std::sqrt(inner_product(f, f).real()); }

TruncatedSeries kernel_series(Complex w, FockParams params) {
  return exp_linear(params.alpha() * std::conj(w), 1.0, params);
}

TruncatedSeries orthonormal_basis_element(int n, FockParams params) {
  if (n < 0 || n > params.order()) {
    throw PreconditionError("orthonormal_basis_element: index outside [0, order]");
  }
  return TruncatedSeries::monomial(params, n, 1.0 / std::sqrt(monomial_norm_sq(n, params.alpha())));
}

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_params(a, b, "max_coeff_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.params().size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

double max_orthonormal_diff(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t count) {
  require_same_params(a, b, "max_orthonormal_diff");
  const auto ua = a.orthonormal_coords();
  const auto ub = b.orthonormal_coords();
  count = std::min(count, ua.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < count; ++k) worst = std::max(worst, std::abs(ua[k] - ub[k]));
  return worst;
}

}  // namespace fockcalc
