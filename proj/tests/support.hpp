#pragma once

// Test-side generators and reference computations. Nothing here calls into the
// library's series or matrix code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

// Hand-rolled generator for property tests; its own engine so draws do not
// depend on the library's sample sets.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex in_disk(double r) {
    const double rad = r * std::sqrt(real(0.0, 1.0));
    return std::polar(rad, real(0.0, 2.0 * M_PI));
  }
  Complex annulus(double r0, double r1) { return std::polar(real(r0, r1), real(0.0, 2.0 * M_PI)); }
  std::vector<Complex> coeffs(int n, double scale) {
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = in_disk(scale);
    return c;
  }

 private:
  std::mt19937_64 engine_;
};

inline long double lfact(int n) {
  long double f = 1.0L;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline LComplex ipow(LComplex x, int k) {
  LComplex r = 1.0L;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

inline long double binom(int n, int k) { return lfact(n) / (lfact(k) * lfact(n - k)); }

// <c e^{wz} (az + b)^n sqrt(alpha^n/n!), e_m> by direct binomial sums in long double.
inline Complex brute_entry(Complex c, Complex w, Complex a, Complex b, double alpha, int m, int n) {
  const LComplex lc(c), lw(w), la(a), lb(b);
  LComplex coeff = 0.0L;
  for (int k = 0; k <= std::min(n, m); ++k) {
    coeff += binom(n, k) * ipow(la, k) * ipow(lb, n - k) * ipow(lw, m - k) / lfact(m - k);
  }
  const long double la_ = alpha;
  const long double scale = std::sqrt(std::pow(la_, n) / lfact(n)) * std::sqrt(lfact(m) / std::pow(la_, m));

  const LComplex v = lc * coeff * scale;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

using Matrix = std::vector<std::vector<Complex>>;

inline Matrix brute_matrix(Complex c, Complex w, Complex a, Complex b, double alpha, int order) {
  Matrix out(order + 1, std::vector<Complex>(order + 1));
  for (int m = 0; m <= order; ++m) {
    for (int n = 0; n <= order; ++n) out[m][n] = brute_entry(c, w, a, b, alpha, m, n);
  }
  return out;
}

// ||(A^H A - A A^H) on the leading block||_F with plain loops.
inline double brute_normality(const Matrix& a, int block) {
  const int d = static_cast<int>(a.size());
  double sum = 0.0;
  for (int i = 0; i < block; ++i) {
    for (int j = 0; j < block; ++j) {
      Complex x = 0.0;
      for (int k = 0; k < d; ++k) x += std::conj(a[k][i]) * a[k][j] - a[i][k] * std::conj(a[j][k]);
      sum += std::norm(x);
    }
  }
  return std::sqrt(sum);
}

// Exact rationals for the worked example.
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational(long long n = 0, long long d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Rational operator+(Rational x, Rational y) { return {x.num * y.den + y.num * x.den, x.den * y.den}; }
  friend Rational operator-(Rational x, Rational y) { return {x.num * y.den - y.num * x.den, x.den * y.den}; }
  friend Rational operator*(Rational x, Rational y) { return {x.num * y.num, x.den * y.den}; }
  friend Rational operator/(Rational x, Rational y) { return {x.num * y.den, x.den * y.num}; }
  friend bool operator==(Rational x, Rational y) { return x.num == y.num && x.den == y.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace testing_support
