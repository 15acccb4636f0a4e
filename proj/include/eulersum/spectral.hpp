#pragma once

/**
 * @file spectral.hpp
 * @brief The integral operator (Tf)(v) = int_0^{pi/2} K1(u,v) f(u) du on
 * L^2(0, pi/2), K1 the indicator of u + v < pi/2.
 *
 * Two routes: exact application to polynomials (T^n 1 and <1, T^n 1> as
 * polynomials in pi), and a midpoint Nystrom matrix whose spectrum and
 * traces approximate { 1/(4k+1) } and S(n).
 */

#include "eulersum/euler_sums.hpp"
#include "eulersum/pi_poly.hpp"
#include "eulersum/special_numbers.hpp"
#include "eulersum/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace eulersum {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// 1 iff u + v < pi/2 (the hypotenuse itself is outside).
inline int k1(double u, double v) { return u + v < kHalfPi ? 1 : 0; }

// ---------------------------------------------------------------------------
// Exact route

/// int_0^{pi/2 - v} f(u) du
inline VPiPoly apply_T_poly(const VPiPoly& f) { return vpoly_integral_to_reflected(f); }

inline VPiPoly t_power_one(int n) {
  if (n < 0 || n > 40) throw std::domain_error("t_power_one: n must lie in 0..40");
  VPiPoly f = 1;
  for (int i = 0; i < n; ++i) f = apply_T_poly(f);
  return f;
}

/// <1, T^{n-1} 1> on (0, pi/2); equals (A(n)/n!) (pi/2)^n.
inline PiPoly inner_product_one(int n) {
  if (n < 1) throw std::domain_error("inner_product_one: n must be positive");
  return vpoly_integral_to_half_pi(t_power_one(n - 1));
}

// ---------------------------------------------------------------------------
// Fourier coefficients in the eigenbasis cos((4k+1)u)

/// Coefficient of cos((4k+1)u) in the expansion of the constant 1.
inline double fourier_coeff_const(long long k) {
  return (4.0 / std::numbers::pi) / (4.0 * static_cast<double>(k) + 1.0);
}

/// (4/pi) int_0^{pi/2} f(u) cos((4k+1)u) du by the composite midpoint rule.
inline double fourier_coeff_quadrature(const std::function<double(double)>& f, long long k,
                                       int intervals = 4000) {
  const double h = kHalfPi / intervals;
  const double m = 4.0 * static_cast<double>(k) + 1.0;
  double sum = 0.0;
  for (int i = 0; i < intervals; ++i) {
    const double u = (i + 0.5) * h;
    sum += f(u) * std::cos(m * u);
  }
  return (4.0 / std::numbers::pi) * sum * h;
}

/// (pi/4) sum_{|k|<=K} c_k^2 / (4k+1)^n, with c_k the coefficients of 1.
inline double parseval_sum(int n, long long K) {
  if (n < 0) throw std::domain_error("parseval_sum: n must be nonnegative");
  if (K < 1) throw std::domain_error("parseval_sum: K must be positive");
  double sum = 0.0;
  for (long long k = K; k >= 1; --k)
    for (long long kk : {k, -k}) {
      const double c = fourier_coeff_const(kk);
      sum += c * c / std::pow(4.0 * static_cast<double>(kk) + 1.0, n);
    }
  const double c0 = fourier_coeff_const(0);
  sum += c0 * c0;
  return std::numbers::pi / 4.0 * sum;
}

// ---------------------------------------------------------------------------
// Nystrom route

/// Samples at the midpoints u_j = (j + 1/2)(pi/2)/N.
class GridFunction {
public:
  explicit GridFunction(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("GridFunction: N must be >= 2");
  }
  static GridFunction sample(int N, const std::function<double(double)>& f) {
    if (N < 2) throw std::invalid_argument("GridFunction: N must be >= 2");
    std::vector<double> v(N);
    for (int j = 0; j < N; ++j) v[j] = f(midpoint(N, j));
    return GridFunction(std::move(v));
  }

  static double midpoint(int N, int j) { return (j + 0.5) * kHalfPi / N; }

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  std::span<const double> values() const { return values_; }

private:
  std::vector<double> values_;
};

/**
 * M_ij = w K1(u_i, u_j), w = (pi/2)/N.
 *
 * Membership is decided on the indices: cell (i, j) is inside iff
 * i + j <= N - 1, i.e. u_i + u_j <= pi/2. The midpoints of the anti-diagonal
 * cells lie exactly on the hypotenuse, which bisects those cells; counting
 * them in keeps the matrix independent of floating-point rounding.
 */
class KernelMatrix {
public:
  explicit KernelMatrix(int N) : N_(N), weight_(kHalfPi / N) {
    if (N < 2) throw std::invalid_argument("KernelMatrix: N must be >= 2");
  }

  int size() const { return N_; }
  double weight() const { return weight_; }
  bool inside(int i, int j) const { return i + j <= N_ - 1; }
  double operator()(int i, int j) const { return inside(i, j) ? weight_ : 0.0; }

  DenseMatrix dense() const {
    DenseMatrix m(static_cast<std::size_t>(N_));
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  GridFunction apply(const GridFunction& f) const {
    if (f.size() != N_) throw std::invalid_argument("KernelMatrix::apply: size mismatch");
    std::vector<double> out(N_);
    for (int i = 0; i < N_; ++i) {
      double s = 0.0;
      for (int j = 0; j <= N_ - 1 - i; ++j) s += f[j];
      out[i] = weight_ * s;
    }
    return GridFunction(std::move(out));
  }

private:
  int N_;
  double weight_;
};

inline KernelMatrix nystrom_matrix(int N) { return KernelMatrix(N); }

/// The `top` eigenvalues of largest magnitude, ordered by decreasing |lambda|.
inline std::vector<double> sym_eigenvalues(const DenseMatrix& m, int top) {
  if (top < 0 || static_cast<std::size_t>(top) > m.size())
    throw std::domain_error("sym_eigenvalues: top must lie in 0..N");
  std::vector<double> ev = symmetric_eigenvalues(m);
  std::stable_sort(ev.begin(), ev.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });
  ev.resize(static_cast<std::size_t>(top));
  return ev;
}

inline std::vector<double> sym_eigenvalues(const KernelMatrix& m, int top) {
  return sym_eigenvalues(m.dense(), top);
}

/// 1/(4k+1) for the k-th eigenvalue in decreasing-magnitude order
/// (k = 0, -1, 1, -2, 2, ...).
inline double exact_eigenvalue(int index) {
  const int k = index % 2 == 0 ? index / 2 : -(index + 1) / 2;
  return 1.0 / (4.0 * k + 1.0);
}

/// trace(M^n) by dense matrix products; approximates S(n).
inline double trace_power_nystrom(int N, int n) {
  if (n < 2) throw std::domain_error("trace_power_nystrom: T^n is trace class only for n >= 2");
  const DenseMatrix m = nystrom_matrix(N).dense();
  // trace(A B) = sum_ij A_ij B_ji with A = M^floor(n/2), B = M^ceil(n/2).
  DenseMatrix a = m;
  for (int i = 1; i < n / 2; ++i) a = a * m;
  const DenseMatrix b = (n % 2 == 0) ? a : a * m;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) sum += a(i, j) * b(j, i);
  return sum;
}

/// w * 1^T M^{n-1} 1, a quadrature of <1, T^{n-1} 1>.
inline double inner_product_one_nystrom(int N, int n) {
  if (n < 1) throw std::domain_error("inner_product_one_nystrom: n must be positive");
  const KernelMatrix m = nystrom_matrix(N);
  GridFunction f(std::vector<double>(static_cast<std::size_t>(N), 1.0));
  for (int i = 1; i < n; ++i) f = m.apply(f);
  double s = 0.0;
  for (double x : f.values()) s += x;
  return m.weight() * s;
}

/**
 * max_j | int_0^{pi/2 - v_j} cos(m u) du - cos(m v_j)/m |, m = 4k+1, over the
 * grid midpoints v_j. Each integral uses an N-interval composite midpoint
 * rule on its own interval.
 */
inline double eigenfunction_residual(int k, int N) {
  if (N < 100) throw std::domain_error("eigenfunction_residual: N must be >= 100");
  const double m = 4.0 * k + 1.0;
  double worst = 0.0;
  for (int j = 0; j < N; ++j) {
    const double v = GridFunction::midpoint(N, j);
    const double upper = kHalfPi - v;
    const double h = upper / N;
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += std::cos(m * (i + 0.5) * h);
    worst = std::max(worst, std::abs(s * h - std::cos(m * v) / m));
  }
  return worst;
}

}  // namespace eulersum
