#include "fockcalc/wco.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "fockcalc/errors.hpp"

namespace fockcalc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_same_params(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
  if (!(a.params() == b.params()) || a.dim() != b.dim()) {
    throw ParamsMismatch(std::string(op) + ": matrices have different (alpha, order)");
  }
}

}  // namespace

WcoWeight WcoWeight::exp_linear(Complex scale, Complex rate) {
  require_finite(scale, "weight scale");
  require_finite(rate, "weight rate");
  if (scale == Complex{}) throw PreconditionError("exp-linear weight with zero scale vanishes identically");
  return WcoWeight(ExpLinearWeight{scale, rate});
}

WcoWeight WcoWeight::series(TruncatedSeries s) { return WcoWeight(std::move(s)); }

WcoWeight WcoWeight::exp_moebius(Complex scale, Complex rate, LinearFractionalMap map) {
  require_finite(scale, "weight scale");
  require_finite(rate, "weight rate");
  if (scale == Complex{}) throw PreconditionError("exp-moebius weight with zero scale vanishes identically");
  return WcoWeight(ExpMoebiusWeight{scale, rate, map});
}

Complex WcoWeight::eval(Complex z) const {
  return std::visit(overloaded{
                        [z](const ExpLinearWeight& w) { return w.scale * std::exp(w.rate * z); },
                        [z](const TruncatedSeries& s) { return s.eval(z); },
                        [z](const ExpMoebiusWeight& w) { return w.scale * std::exp(w.rate * (z - w.map.eval(z))); },
                    },
                    form_);
}

TruncatedSeries WcoWeight::materialize(FockParams params) const {
  return std::visit(overloaded{
                        [&](const ExpLinearWeight& w) { return fockcalc::exp_linear(w.rate, w.scale, params); },
                        [&](const TruncatedSeries& s) { return s.resized(params); },
                        [](const ExpMoebiusWeight&) -> TruncatedSeries {
                          throw PreconditionError("exp-moebius weight has no power series representation");
                        },
                    },
                    form_);
}

Complex eval_map(const CompositionMap& map, Complex z) {
  return std::visit(overloaded{
                        [z](const AffineMap& m) { return m(z); },
                        [z](const LinearFractionalMap& m) { return m.eval(z); },
                    },
                    map);
}

const AffineMap& WcoSymbol::affine_map() const {
  if (const auto* m = std::get_if<AffineMap>(&map)) return *m;
  throw PreconditionError("operation requires an affine composition map");
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries, FockParams params)
    : entries_(std::move(entries)), params_(params) {
  if (entries_.rows() != entries_.cols() || entries_.rows() != static_cast<Eigen::Index>(params_.size())) {
    throw PreconditionError("OperatorMatrix: dimension must equal order + 1");
  }
  if (!entries_.allFinite()) throw NonFiniteValue("OperatorMatrix entry is not finite");
}

void OperatorMatrix::write_csv(std::ostream& out) const {
  char buf[64];
  for (Eigen::Index m = 0; m < dim(); ++m) {
    for (Eigen::Index n = 0; n < dim(); ++n) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", entries_(m, n).real(), entries_(m, n).imag());
      if (n > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

std::string OperatorMatrix::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_params(lhs, rhs, "matrix product");
  return {lhs.entries() * rhs.entries(), lhs.params()};
}

TruncatedSeries apply_wco(const WcoSymbol& sym, const TruncatedSeries& f) {
  const AffineMap& map = sym.affine_map();
  return series_mul(sym.weight.materialize(f.params()), compose_affine(f, map.slope, map.offset));
}

Complex eval_wco_at(const WcoSymbol& sym, const TruncatedSeries& f, Complex z) {
  return require_finite(sym.weight.eval(z) * f.eval(eval_map(sym.map, z)), "operator value");
}

OperatorMatrix assemble_matrix(const WcoSymbol& sym, FockParams params) {
  const AffineMap& map = sym.affine_map();
  const TruncatedSeries weight = sym.weight.materialize(params);
  const auto dim = static_cast<Eigen::Index>(params.size());
  Eigen::MatrixXcd entries(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    const auto column = series_mul(
        weight, compose_affine(orthonormal_basis_element(static_cast<int>(n), params), map.slope, map.offset));
    const auto coords = column.orthonormal_coords();
    for (Eigen::Index m = 0; m < dim; ++m) entries(m, n) = coords[static_cast<std::size_t>(m)];
  }
  return {std::move(entries), params};
}

OperatorMatrix adjoint_matrix(const OperatorMatrix& m) { return {m.entries().adjoint(), m.params()}; }

TruncatedSeries apply_matrix(const OperatorMatrix& m, const TruncatedSeries& f) {
  if (!(m.params() == f.params())) throw ParamsMismatch("apply_matrix: matrix and series differ in (alpha, order)");
  const auto coords = f.orthonormal_coords();
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(coords.data(), m.dim());
  const Eigen::VectorXcd out = m.entries() * v;
  return TruncatedSeries::from_orthonormal_coords(f.params(), std::span<const Complex>(out.data(), out.size()));
}

WcoSymbol product_symbol(const WcoSymbol& first, const WcoSymbol& second) {
  if (!first.is_affine() || !second.is_affine()) {
    throw PreconditionError("product_symbol: linear fractional maps compose only pointwise");
  }
  const AffineMap& phi = first.affine_map();
  const AffineMap& psi = second.affine_map();
  const AffineMap map = compose(psi, phi);

  const auto* f = std::get_if<ExpLinearWeight>(&first.weight.form());
  const auto* g = std::get_if<ExpLinearWeight>(&second.weight.form());
  if (f && g) {
    // c1 e^{w1 z} * c2 e^{w2 (a z + b)}
    return {WcoWeight::exp_linear(f->scale * g->scale * std::exp(g->rate * phi.offset), f->rate + g->rate * phi.slope),
            map};
  }

  const TruncatedSeries* widest = nullptr;
  for (const WcoWeight* w : {&first.weight, &second.weight}) {
    if (const auto* s = std::get_if<TruncatedSeries>(&w->form())) {
      if (!widest || s->order() > widest->order()) widest = s;
    }
  }
  if (!widest) throw PreconditionError("product_symbol: weights cannot be materialised as series");
  const FockParams params = widest->params();
  const auto weight = series_mul(first.weight.materialize(params),
                                 compose_affine(second.weight.materialize(params), phi.slope, phi.offset));
  return {WcoWeight::series(weight), map};
}

TruncatedSeries adjoint_on_kernel(const WcoSymbol& sym, Complex z, FockParams params) {
  const Complex image = eval_map(sym.map, z);
  return series_scale(kernel_series(image, params), std::conj(sym.weight.eval(z)));
}

std::string to_string(Boundedness b) {
  switch (b) {
    case Boundedness::BoundedStrict: return "BoundedStrict";
    case Boundedness::BoundedUnitary: return "BoundedUnitary";
    case Boundedness::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

Boundedness boundedness_check(const AffineMap& map) {
  constexpr double tol = 1e-12;
  const double modulus = std::abs(map.slope);
  if (modulus < 1.0 - tol) return Boundedness::BoundedStrict;
  if (modulus > 1.0 + tol) return Boundedness::Unbounded;
  return std::abs(map.offset) <= tol ? Boundedness::BoundedUnitary : Boundedness::Unbounded;
}

double hermitian_residual(const OperatorMatrix& m) {
  const double diff = (m.entries() - m.entries().adjoint()).norm();
  return diff / std::max(m.entries().norm(), 1.0);
}

double commutator_residual(const OperatorMatrix& a, const OperatorMatrix& b, Eigen::Index block) {
  require_same_params(a, b, "commutator_residual");
  if (block < 1 || block > a.dim()) throw PreconditionError("commutator_residual: block outside [1, dim]");
  const Eigen::MatrixXcd c = a.entries() * b.entries() - b.entries() * a.entries();
  return c.topLeftCorner(block, block).norm();
}

double normality_residual(const OperatorMatrix& m, Eigen::Index block) {
  return commutator_residual(adjoint_matrix(m), m, block);
}

}  // namespace fockcalc
