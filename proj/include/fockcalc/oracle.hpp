#pragma once

#include <vector>

#include "fockcalc/series.hpp"
#include "fockcalc/wco.hpp"

namespace fockcalc {

// One radial node: radius and the full weight for the (alpha/pi) e^{-alpha r^2} r dr dtheta
// measure, already multiplied by the angular step 2 pi / M.
struct RadialNode {
  double radius;
  double weight;
};

/// Polar product rule for integrals against the Gaussian probability measure:
/// composite Gauss-Legendre in r on [0, R], equally spaced trapezoid in angle.
/// Built from (alpha, N) only, independent of the exact coefficient formulas.
class QuadratureGrid {
 public:
  /// R starts at sqrt(16 N ln 10 / alpha) and is enlarged until
  /// e^{-alpha R^2} R^{2N} <= 1e-16. Throws PreconditionError when
  /// angular_count < 64 or angular_count <= 2N, or for empty panels.
  explicit QuadratureGrid(FockParams params, int panels = 32, int points_per_panel = 16, int angular_count = 0);

  const FockParams& params() const noexcept { return params_; }
  const std::vector<RadialNode>& radial_nodes() const noexcept { return nodes_; }
  int angular_count() const noexcept { return angular_; }
  double cutoff_radius() const noexcept { return cutoff_; }
  int panels() const noexcept { return panels_; }
  int points_per_panel() const noexcept { return points_; }

  // Same R and M with twice the panels, i.e. twice the radial nodes.
  QuadratureGrid refined() const;

  std::size_t point_count() const noexcept { return nodes_.size() * static_cast<std::size_t>(angular_); }
  // Point k of the flattened grid, radial index major.
  Complex point(std::size_t k) const;

 private:
  FockParams params_;
  int panels_;
  int points_;
  int angular_;
  double cutoff_;
  std::vector<RadialNode> nodes_;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Values of a function on every grid point, in point() order.
using GridValues = std::vector<Complex>;

GridValues sample_on_grid(const TruncatedSeries& f, const QuadratureGrid& grid);

// sum f conj(g) w over the grid; both value sets must come from `grid`.
Complex quad_inner_product(const GridValues& f, const GridValues& g, const QuadratureGrid& grid);

/// Quadrature value of <f, g>. Both series must carry the grid's params.
Complex quad_inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const QuadratureGrid& grid);

/// <W e_n, e_m> with W e_n evaluated pointwise as weight(z) e_n(map(z)).
/// Requires an affine map and n, m <= N.
Complex quad_matrix_entry(const WcoSymbol& sym, int n, int m, const QuadratureGrid& grid);

/// Largest |<e_n, e_m>_quad - delta_nm| over 0 <= n, m <= up_to. Normalised
/// basis elements keep the comparison on a unit scale for every alpha.
double oracle_monomial_error(const QuadratureGrid& grid, int up_to);

}  // namespace fockcalc
