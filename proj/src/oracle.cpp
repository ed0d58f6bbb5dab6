#include "fockcalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fockcalc/errors.hpp"

namespace fockcalc {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw PreconditionError("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

QuadratureGrid::QuadratureGrid(FockParams params, int panels, int points_per_panel, int angular_count)
    : params_(params), panels_(panels), points_(points_per_panel) {
  const int n = params.order();
  const double alpha = params.alpha();
  angular_ = angular_count > 0 ? angular_count : std::max(64, 2 * n + 2);
  if (angular_ < 64) throw PreconditionError("quadrature grid: angular count must be at least 64");
  if (angular_ <= 2 * n) throw PreconditionError("quadrature grid: too coarse, angular count must exceed 2N");
  if (panels < 1 || points_per_panel < 1) throw PreconditionError("quadrature grid: empty radial rule");

  cutoff_ = std::sqrt(16.0 * n * std::numbers::ln10 / alpha);
  // log(e^{-alpha R^2} R^{2N}) <= log(1e-16)
  while (-alpha * cutoff_ * cutoff_ + 2.0 * n * std::log(cutoff_) > -16.0 * std::numbers::ln10) cutoff_ *= 1.1;

  std::vector<double> x, w;
  gauss_legendre(points_per_panel, x, w);
  const double h = cutoff_ / panels;
  const double scale = alpha / std::numbers::pi * (2.0 * std::numbers::pi / angular_);
  nodes_.reserve(static_cast<std::size_t>(panels) * points_per_panel);
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < points_per_panel; ++i) {
      const double r = mid + 0.5 * h * x[i];
      const double weight = 0.5 * h * w[i] * r * std::exp(-alpha * r * r) * scale;
      if (weight > 0.0) nodes_.push_back({r, weight});
    }
  }
}

QuadratureGrid QuadratureGrid::refined() const { return QuadratureGrid(params_, 2 * panels_, points_, angular_); }

Complex QuadratureGrid::point(std::size_t k) const {
  const auto m = static_cast<std::size_t>(angular_);
  return std::polar(nodes_[k / m].radius, 2.0 * std::numbers::pi * static_cast<double>(k % m) / angular_);
}

GridValues sample_on_grid(const TruncatedSeries& f, const QuadratureGrid& grid) {
  GridValues out(grid.point_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.eval(grid.point(k));
  return out;
}

Complex quad_inner_product(const GridValues& f, const GridValues& g, const QuadratureGrid& grid) {
  if (f.size() != grid.point_count() || g.size() != grid.point_count()) {
    throw PreconditionError("quad_inner_product: values were not sampled on this grid");
  }
  const auto m = static_cast<std::size_t>(grid.angular_count());
  Complex total{};
  for (std::size_t i = 0; i < grid.radial_nodes().size(); ++i) {
    Complex ring{};
    for (std::size_t k = i * m; k < (i + 1) * m; ++k) ring += f[k] * std::conj(g[k]);
    total += ring * grid.radial_nodes()[i].weight;
  }
  return total;
}

Complex quad_inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const QuadratureGrid& grid) {
  if (!(f.params() == grid.params()) || !(g.params() == grid.params())) {
    throw ParamsMismatch("quad_inner_product: series and grid params differ");
  }
  return quad_inner_product(sample_on_grid(f, grid), sample_on_grid(g, grid), grid);
}

Complex quad_matrix_entry(const WcoSymbol& sym, int n, int m, const QuadratureGrid& grid) {
  if (!sym.is_affine()) throw PreconditionError("quad_matrix_entry: map must be affine");
  const FockParams& params = grid.params();
  const auto en = orthonormal_basis_element(n, params);
  const auto em = orthonormal_basis_element(m, params);
  GridValues image(grid.point_count());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = eval_wco_at(sym, en, grid.point(k));
  return quad_inner_product(image, sample_on_grid(em, grid), grid);
}

double oracle_monomial_error(const QuadratureGrid& grid, int up_to) {
  if (up_to < 0 || up_to > grid.params().order()) throw PreconditionError("oracle_monomial_error: degree out of range");
  std::vector<GridValues> values;
  for (int n = 0; n <= up_to; ++n) values.push_back(sample_on_grid(orthonormal_basis_element(n, grid.params()), grid));
  double worst = 0.0;
  for (int n = 0; n <= up_to; ++n) {
    for (int m = 0; m <= up_to; ++m) {
      const Complex q = quad_inner_product(values[n], values[m], grid);
      worst = std::max(worst, std::abs(q - (n == m ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace fockcalc
