#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fockcalc/errors.hpp"
#include "fockcalc/json_io.hpp"
#include "fockcalc/wco.hpp"
#include "support.hpp"

using namespace fockcalc;
using testing_support::Gen;

namespace {

const FockParams P8(1.0, 8);
const FockParams P32(1.0, 32);
const FockParams P64(1.0, 64);

// weight e^{z/2}, map 1/2 + z/4
WcoSymbol worked_symbol() { return {WcoWeight::exp_linear(1.0, 0.5), AffineMap(0.25, 0.5)}; }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("affine maps") {
  const AffineMap phi(0.25, 0.5);
  CHECK(phi(Complex(2.0 / 3.0)) == Complex(0.25 * 2.0 / 3.0 + 0.5));
  const AffineMap sq = compose(phi, phi);
  CHECK(std::abs(sq.slope - 1.0 / 16.0) == 0.0);
  CHECK(std::abs(sq.offset - 5.0 / 8.0) == 0.0);
  CHECK_THROWS_AS(AffineMap(Complex(INFINITY), 0.0), NonFiniteValue);
}

TEST_CASE("linear fractional maps") {
  CHECK_THROWS_AS(LinearFractionalMap(1.0, 2.0, 2.0, 4.0), PreconditionError);
  CHECK_NOTHROW(LinearFractionalMap(1.0, 0.0, 0.0, 1.0));
  const LinearFractionalMap m(1.0, 1.0, 1.0, -2.0);
  CHECK(m.has_pole());
  CHECK(m.pole() == Complex(2.0));
  CHECK_THROWS_AS(m.eval(2.0 + 1e-8), PoleProximity);
  CHECK(std::abs(m.eval(0.0) + 0.5) <= 1e-16);

  Gen g(21);
  for (int i = 0; i < 50; ++i) {
    const LinearFractionalMap a(g.in_disk(2), g.in_disk(2), g.in_disk(2), 3.0 + g.in_disk(1));
    const LinearFractionalMap b(2.0 + g.in_disk(1), g.in_disk(1), g.in_disk(0.2), 1.0 + g.in_disk(0.2));
    const Complex z = g.in_disk(0.3);
    try {
      CHECK(std::abs(compose(a, b).eval(z) - a.eval(b.eval(z))) <= 1e-12 * (1.0 + std::abs(a.eval(b.eval(z)))));
    } catch (const PoleProximity&) {
    }
  }
  const std::array<Complex, 4> u{1.0, 2.0, 3.0, 4.0};
  std::array<Complex, 4> v = u;
  for (auto& x : v) x *= Complex(-2.0, 1.0);
  CHECK(projective_distance(u, v) <= 1e-16);
  v[3] += 1.0;
  CHECK(projective_distance(u, v) > 1e-3);
}

TEST_CASE("apply_wco") {
  Gen g(22);
  const auto f = TruncatedSeries(P8, g.coeffs(9, 1.0));
  CHECK(max_coeff_diff(apply_wco(WcoSymbol::identity(), f), f) == 0.0);

  // W K_beta = c e^{conj(a0) z} e^{(a0 + a1 z) conj(beta)}
  const Complex beta(0.3, -0.2);
  const auto got = apply_wco(worked_symbol(), kernel_series(beta, P32));
  const auto want = exp_linear(0.5 + 0.25 * std::conj(beta), std::exp(0.5 * std::conj(beta)), P32);
  CHECK(max_coeff_diff(got, want) <= 1e-15);

  const auto zf = apply_wco(worked_symbol(), TruncatedSeries::monomial(P8, 1));
  CHECK(std::abs(zf[0] - 0.5) <= 1e-16);
  CHECK(std::abs(zf[1] - 0.5) <= 1e-16);

  const LinearFractionalMap psi(1.0, 0.0, 0.5, 1.0);
  CHECK_THROWS_AS(apply_wco({WcoWeight::one(), psi}, f), PreconditionError);
}

TEST_CASE("eval_wco_at") {
  const auto f = exp_linear(0.7, 1.0, P32);
  CHECK(eval_wco_at(WcoSymbol::identity(), f, Complex(0.3, 0.1)) == f.eval(Complex(0.3, 0.1)));
  const LinearFractionalMap psi(1.0, 0.0, 1.0, -2.0);
  CHECK_THROWS_AS(eval_wco_at({WcoWeight::one(), psi}, f, 2.0), PoleProximity);
  const WcoSymbol sym = worked_symbol();
  CHECK(std::abs(eval_wco_at(sym, f, 0.2) - std::exp(0.1) * f.eval(0.55)) <= 1e-15);
}

TEST_CASE("assemble_matrix examples") {
  const auto id = assemble_matrix(WcoSymbol::identity(), P8);
  CHECK(id.dim() == 9);
  CHECK(max_abs(id.entries() - Eigen::MatrixXcd::Identity(9, 9)) <= 1e-15);

  const auto m = assemble_matrix(worked_symbol(), P32);
  CHECK(std::abs(m(1, 0) - 0.5) <= 1e-16);
  CHECK(std::abs(m(0, 1) - 0.5) <= 1e-16);

  const auto d = assemble_matrix({WcoWeight::one(), AffineMap(0.5, 0.0)}, P8);
  for (int r = 0; r <= 8; ++r) {
    for (int c = 0; c <= 8; ++c) CHECK(std::abs(d(r, c) - (r == c ? std::pow(0.5, c) : 0.0)) <= 1e-16);
  }
  CHECK_THROWS_AS(assemble_matrix({WcoWeight::one(), LinearFractionalMap(1.0, 0.0, 0.5, 1.0)}, P8), PreconditionError);
  CHECK_THROWS_AS(OperatorMatrix(Eigen::MatrixXcd::Identity(8, 8), P8), PreconditionError);
}

TEST_CASE("property: entry exactness against binomial sums") {
  Gen g(23);
  for (int trial = 0; trial < 40; ++trial) {
    const double alpha = g.real(0.5, 2.0);
    const FockParams p(alpha, g.integer(4, 20));
    const Complex c = g.annulus(0.5, 2.0);
    const Complex w = g.in_disk(1.0);
    const Complex a = g.in_disk(1.0);
    const Complex b = g.in_disk(1.0);
    const auto m = assemble_matrix({WcoWeight::exp_linear(c, w), AffineMap(a, b)}, p);
    const auto ref = testing_support::brute_matrix(c, w, a, b, alpha, p.order());
    for (int r = 0; r <= p.order(); ++r) {
      for (int col = 0; col <= p.order(); ++col) {
        CHECK(std::abs(m(r, col) - ref[r][col]) <= 1e-12 * std::max(1.0, std::abs(ref[r][col])));
      }
    }
  }
}

TEST_CASE("adjoint_matrix") {
  Gen g(24);
  const auto m = assemble_matrix({WcoWeight::exp_linear(g.annulus(0.5, 1.0), g.in_disk(1)), AffineMap(0.3, 0.2)}, P8);
  CHECK(max_abs(adjoint_matrix(adjoint_matrix(m)).entries() - m.entries()) == 0.0);
  const auto h = assemble_matrix(worked_symbol(), P32);
  CHECK(max_abs(adjoint_matrix(h).entries() - h.entries()) <= 1e-16);
  const auto d = assemble_matrix({WcoWeight::one(), AffineMap(0.5, 0.0)}, P8);
  CHECK(max_abs(adjoint_matrix(d).entries() - d.entries()) == 0.0);
}

TEST_CASE("product_symbol") {
  const WcoSymbol s1 = worked_symbol();
  const auto same = product_symbol(s1, WcoSymbol::identity());
  CHECK(max_abs(assemble_matrix(same, P32).entries() - assemble_matrix(s1, P32).entries()) <= 1e-15);

  const WcoSymbol lin1{WcoWeight::exp_linear(1.0, 0.3), AffineMap(0.4, 0.0)};
  const WcoSymbol lin2{WcoWeight::exp_linear(2.0, -0.2), AffineMap(-0.7, 0.0)};
  const auto p12 = product_symbol(lin1, lin2);
  const auto p21 = product_symbol(lin2, lin1);
  CHECK(std::abs(p12.affine_map().slope - (-0.28)) <= 1e-16);
  CHECK(std::abs(p21.affine_map().slope - (-0.28)) <= 1e-16);
  CHECK(std::abs(p12.weight.eval(0.5) - p21.weight.eval(0.5)) > 1e-3);

  const auto sq = product_symbol(s1, s1);
  CHECK(std::abs(sq.affine_map().slope - 1.0 / 16.0) <= 1e-16);
  CHECK(std::abs(sq.affine_map().offset - 5.0 / 8.0) <= 1e-16);
  for (Complex z : {Complex(0.0), Complex(0.3, 0.4), Complex(-1.0, 0.2)}) {
    CHECK(std::abs(sq.weight.eval(z) - std::exp(0.25 + 0.625 * z)) <= 1e-14);
  }
  const auto prod = assemble_matrix(s1, P64) * assemble_matrix(s1, P64);
  const auto direct = assemble_matrix(sq, P64);
  CHECK(max_abs((prod.entries() - direct.entries()).topLeftCorner(32, 32)) <= 1e-9);

  // series weights fall back to a materialised product
  const WcoSymbol ser{WcoWeight::series(TruncatedSeries(P32, {1.0, 0.5, 0.25})), AffineMap(0.5, 0.1)};
  const auto mixed = product_symbol(ser, s1);
  CHECK(std::holds_alternative<TruncatedSeries>(mixed.weight.form()));
}

TEST_CASE("property: product consistency on the leading block") {
  Gen g(25);
  for (int trial = 0; trial < 20; ++trial) {
    const WcoSymbol s1{WcoWeight::exp_linear(g.annulus(0.5, 1.5), g.in_disk(0.5)), AffineMap(g.in_disk(0.5), g.in_disk(0.5))};
    const WcoSymbol s2{WcoWeight::exp_linear(g.annulus(0.5, 1.5), g.in_disk(0.5)), AffineMap(g.in_disk(0.5), g.in_disk(0.5))};
    const auto prod = assemble_matrix(s1, P64) * assemble_matrix(s2, P64);
    const auto direct = assemble_matrix(product_symbol(s1, s2), P64);
    CHECK(max_abs((prod.entries() - direct.entries()).topLeftCorner(32, 32)) <= 1e-9);
  }
}

TEST_CASE("adjoint_on_kernel") {
  Gen g(26);
  const Complex z = g.in_disk(0.9);
  CHECK(max_coeff_diff(adjoint_on_kernel(WcoSymbol::identity(), z, P32), kernel_series(z, P32)) == 0.0);

  const WcoSymbol sym = worked_symbol();
  const Complex b = 2.0 / 3.0;
  const auto at_b = adjoint_on_kernel(sym, b, P32);
  CHECK(max_coeff_diff(at_b, series_scale(kernel_series(b, P32), std::conj(std::exp(0.5 * b)))) <= 1e-15);
}

TEST_CASE("property: matrix adjoint converges to the kernel closed form") {
  Gen g(27);
  for (int trial = 0; trial < 20; ++trial) {
    const WcoSymbol sym{WcoWeight::exp_linear(g.annulus(0.5, 1.0), g.in_disk(0.5)),
                        AffineMap(g.in_disk(0.5), g.in_disk(0.5))};
    const Complex z = g.in_disk(1.0);
    double previous = INFINITY;
    for (int order : {16, 32, 64}) {
      const FockParams p(1.0, order);
      const auto via_matrix = apply_matrix(adjoint_matrix(assemble_matrix(sym, p)), kernel_series(z, p));
      const double err = max_orthonormal_diff(via_matrix, adjoint_on_kernel(sym, z, p), p.size() / 2);
      CHECK(err <= std::max(previous, 1e-14));
      previous = err;
      if (order == 64) CHECK(err <= 1e-8);
    }
  }
}

TEST_CASE("boundedness classification") {
  CHECK(boundedness_check(AffineMap(1.0, 0.0)) == Boundedness::BoundedUnitary);
  CHECK(boundedness_check(AffineMap(0.25, 0.5)) == Boundedness::BoundedStrict);
  CHECK(boundedness_check(AffineMap(1.0, 0.1)) == Boundedness::Unbounded);
  CHECK(boundedness_check(AffineMap(Complex(0.6, 0.8), 0.0)) == Boundedness::BoundedUnitary);
  CHECK(boundedness_check(AffineMap(1.5, 0.0)) == Boundedness::Unbounded);
  CHECK(boundedness_check(AffineMap(1.0 + 1e-13, 1e-13)) == Boundedness::BoundedUnitary);
  CHECK(to_string(Boundedness::Unbounded) == "Unbounded");

  // e^{|z + 0.1|^2 - |z|^2} = e^{0.2 Re z + 0.01} grows along the positive reals
  double last = 0.0;
  for (double r : {1.0, 10.0, 100.0, 1000.0}) {
    const double v = std::norm(Complex(r + 0.1)) - r * r;
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("residual helpers") {
  const auto id = assemble_matrix(WcoSymbol::identity(), P32);
  CHECK(hermitian_residual(id) == 0.0);
  CHECK(hermitian_residual(assemble_matrix(worked_symbol(), P32)) <= 1e-12);
  const WcoSymbol rotated{WcoWeight::exp_linear(Complex(0.0, 1.0), 0.5), AffineMap(0.25, 0.5)};
  CHECK(hermitian_residual(assemble_matrix(rotated, P32)) >= 0.1);

  const auto m = assemble_matrix(worked_symbol(), P32);
  CHECK(commutator_residual(m, id, 16) <= 1e-15);
  CHECK(commutator_residual(m, m, 16) == 0.0);
  const auto d1 = assemble_matrix({WcoWeight::one(), AffineMap(0.5, 0.0)}, P32);
  const auto d2 = assemble_matrix({WcoWeight::one(), AffineMap(0.3, 0.0)}, P32);
  CHECK(commutator_residual(d1, d2, 16) == 0.0);
  CHECK_THROWS_AS(commutator_residual(d1, assemble_matrix(WcoSymbol::identity(), P8), 4), ParamsMismatch);
  CHECK_THROWS_AS(commutator_residual(d1, d2, 0), PreconditionError);
  CHECK(normality_residual(d1, 16) == 0.0);
  CHECK(default_block(P32) == 16);
}

TEST_CASE("property: normality residual matches a loop-based reference") {
  Gen g(28);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex c = g.annulus(0.5, 1.0);
    const Complex w = g.in_disk(0.5);
    const Complex a = g.in_disk(0.9);
    const Complex b = g.in_disk(0.9);
    const auto m = assemble_matrix({WcoWeight::exp_linear(c, w), AffineMap(a, b)}, FockParams(1.0, 24));
    const double ref = testing_support::brute_normality(testing_support::brute_matrix(c, w, a, b, 1.0, 24), 12);
    CHECK(std::abs(normality_residual(m, 12) - ref) <= 1e-12 * std::max(1.0, ref));
  }
}

TEST_CASE("weights") {
  CHECK_THROWS_AS(WcoWeight::exp_linear(0.0, 1.0), PreconditionError);
  const auto w = WcoWeight::exp_linear(2.0, 0.5);
  CHECK(std::abs(w.eval(1.0) - 2.0 * std::exp(0.5)) <= 1e-15);
  CHECK(max_coeff_diff(w.materialize(P8), exp_linear(0.5, 2.0, P8)) == 0.0);
  const auto s = WcoWeight::series(TruncatedSeries(P8, {1.0, 2.0}));
  CHECK(s.materialize(P32)[1] == Complex(2.0));
  CHECK(s.eval(0.5) == Complex(2.0));
  const auto mob = WcoWeight::exp_moebius(1.0, 0.5, LinearFractionalMap(1.0, 0.0, 0.5, 1.0));
  CHECK_FALSE(mob.is_materializable());
  CHECK_THROWS_AS(mob.materialize(P8), PreconditionError);
  CHECK(std::abs(mob.eval(0.4) - std::exp(0.5 * (0.4 - 0.4 / 1.2))) <= 1e-15);
}

TEST_CASE("csv and json serialisation") {
  const auto id = assemble_matrix(WcoSymbol::identity(), FockParams(1.0, 1));
  CHECK(id.to_csv() == "1,0,0,0\n0,0,1,0\n");
  const auto m = assemble_matrix(worked_symbol(), P8);
  std::istringstream in(m.to_csv());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 2 * 9 - 1);
  }
  CHECK(rows == 9);
  const auto j = to_json(m);
  CHECK(j["dim"] == 9);
  CHECK(j["re"][1][0].get<double>() == 0.5);
}
