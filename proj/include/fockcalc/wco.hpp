#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <variant>

#include "fockcalc/maps.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc {

// scale * exp(rate * z)
struct ExpLinearWeight {
  Complex scale;
  Complex rate;
};

// scale * exp(rate * (z - map(z))). Not entire when the map has a pole, so it
// can only be evaluated pointwise.
struct ExpMoebiusWeight {
  Complex scale;
  Complex rate;
  LinearFractionalMap map;
};

/// Multiplier of a weighted composition operator. ExpLinear and Series
/// weights can be materialised to a TruncatedSeries at any order; the
/// ExpMoebius form (the generated commutant weight) is pointwise only.
class WcoWeight {
 public:
  using Form = std::variant<ExpLinearWeight, TruncatedSeries, ExpMoebiusWeight>;

  /// scale * exp(rate z). A zero scale is rejected: weights never vanish.
  static WcoWeight exp_linear(Complex scale, Complex rate = 0.0);
  static WcoWeight constant(Complex value) { return exp_linear(value, 0.0); }
  static WcoWeight one() { return constant(1.0); }
  static WcoWeight series(TruncatedSeries s);
  static WcoWeight exp_moebius(Complex scale, Complex rate, LinearFractionalMap map);

  const Form& form() const noexcept { return form_; }
  bool is_materializable() const noexcept { return !std::holds_alternative<ExpMoebiusWeight>(form_); }

  Complex eval(Complex z) const;

  /// Coefficients at `params`; Series weights are zero-padded or cut to the
  /// requested order. Throws PreconditionError for ExpMoebius.
  TruncatedSeries materialize(FockParams params) const;

 private:
  explicit WcoWeight(Form f) : form_(std::move(f)) {}
  Form form_;
};

using CompositionMap = std::variant<AffineMap, LinearFractionalMap>;

Complex eval_map(const CompositionMap& map, Complex z);

/// W f = weight * (f o map).
struct WcoSymbol {
  WcoWeight weight = WcoWeight::one();
  CompositionMap map = AffineMap::identity();

  static WcoSymbol identity() { return {}; }
  bool is_affine() const noexcept { return std::holds_alternative<AffineMap>(map); }
  // Throws PreconditionError for a linear fractional map.
  const AffineMap& affine_map() const;
};

/// Finite section of an operator: entry (m, n) = <W e_n, e_m> for
/// 0 <= m, n <= N, so the dimension is N + 1.
class OperatorMatrix {
 public:
  OperatorMatrix(Eigen::MatrixXcd entries, FockParams params);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  const FockParams& params() const noexcept { return params_; }
  Eigen::Index dim() const noexcept { return entries_.rows(); }
  Complex operator()(Eigen::Index m, Eigen::Index n) const { return entries_(m, n); }

  // Row-major, one matrix row per line, "re,im" pairs with 17 significant digits.
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;

 private:
  Eigen::MatrixXcd entries_;
  FockParams params_;
};

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

TruncatedSeries apply_wco(const WcoSymbol& sym, const TruncatedSeries& f);

// weight(z) * f(map(z)); throws PoleProximity near a pole of the map or weight.
Complex eval_wco_at(const WcoSymbol& sym, const TruncatedSeries& f, Complex z);

OperatorMatrix assemble_matrix(const WcoSymbol& sym, FockParams params);

OperatorMatrix adjoint_matrix(const OperatorMatrix& m);

// Matrix acting on orthonormal coordinates of f, result re-expressed as a series.
TruncatedSeries apply_matrix(const OperatorMatrix& m, const TruncatedSeries& f);

/// Symbol of W_{f,phi} W_{g,psi} = M_{f (g o phi)} C_{psi o phi}. When both
/// weights are exp-linear the product weight stays in closed form; otherwise
/// it is a Series at the largest order among the series weights.
WcoSymbol product_symbol(const WcoSymbol& first, const WcoSymbol& second);

// W* K_z = conj(weight(z)) K_{map(z)}.
TruncatedSeries adjoint_on_kernel(const WcoSymbol& sym, Complex z, FockParams params);

enum class Boundedness { BoundedStrict, BoundedUnitary, Unbounded };

std::string to_string(Boundedness b);

/// |a| < 1 -> BoundedStrict; |a| = 1, b = 0 -> BoundedUnitary; otherwise
/// Unbounded. Both equalities use a 1e-12 tolerance.
Boundedness boundedness_check(const AffineMap& map);

// ||M - M^H||_F / max(||M||_F, 1)
double hermitian_residual(const OperatorMatrix& m);

// ||(AB - BA) restricted to the leading block x block corner||_F
double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b, Eigen::Index block);

// ||(M^H M - M M^H) restricted to the leading block||_F
double normality_residual(const OperatorMatrix& m, Eigen::Index block);

// Default leading block for truncation-sensitive residuals: N / 2.
inline Eigen::Index default_block(const FockParams& p) { return p.order() / 2; }

}  // namespace fockcalc
