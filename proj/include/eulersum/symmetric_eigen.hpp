#pragma once

/**
 * @file symmetric_eigen.hpp
 * @brief Eigenvalues of dense real symmetric matrices.
 *
 * symmetric_eigenvalues() reduces to tridiagonal form with Householder
 * reflections and finishes with implicitly shifted QL, O(n^3) with a small
 * constant. jacobi_eigenvalues() runs cyclic Jacobi rotations; it is much
 * slower and serves as an independent check on small matrices.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace eulersum {

/// Row-major square matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<double> row(std::size_t i) { return {a_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
  std::span<const double> data() const { return a_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("DenseMatrix: size mismatch");
    const std::size_t n = a.n_;
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      double* ci = c.a_.data() + i * n;
      for (std::size_t k = 0; k < n; ++k) {
        const double aik = a.a_[i * n + k];
        if (aik == 0.0) continue;
        const double* bk = b.a_.data() + k * n;
        for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
      }
    }
    return c;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

namespace detail {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1; off[n-1] = 0
};

inline Tridiagonal householder_tridiagonalize(DenseMatrix a) {
  const std::size_t n = a.size();
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // Reflect x = a[k+1.., k] onto a multiple of e_1.
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0.0 ? -norm : norm;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a(i, k) - (i == k + 1 ? alpha : 0.0);
      vnorm += v[i] * v[i];
    }
    if (vnorm == 0.0) continue;
    vnorm = std::sqrt(vnorm);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H A H = A - 2 v q^T - 2 q v^T with p = A v, q = p - (v.p) v.
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      const auto r = a.row(i);
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += r[j] * v[j];
      p[i] = s;
      vp += v[i] * s;
    }
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= vp * v[i];
    for (std::size_t i = k + 1; i < n; ++i) {
      auto r = a.row(i);
      const double vi = v[i], qi = p[i];
      for (std::size_t j = k + 1; j < n; ++j) r[j] -= 2.0 * (vi * p[j] + qi * v[j]);
    }
    a(k + 1, k) = a(k, k + 1) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = a(k, i) = 0.0;
  }
  Tridiagonal t;
  t.diag.resize(n);
  t.off.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) t.off[i] = a(i + 1, i);
  return t;
}

/// Implicit QL with Wilkinson-style shifts; eigenvalues left in t.diag.
inline void tridiagonal_ql(Tridiagonal& t) {
  auto& d = t.diag;
  auto& e = t.off;
  const std::size_t n = d.size();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 100) throw std::runtime_error("tridiagonal_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool deflated = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// All eigenvalues, ascending.
inline std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
  if (a.size() == 0) return {};
  detail::Tridiagonal t = detail::householder_tridiagonalize(a);
  detail::tridiagonal_ql(t);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

/// All eigenvalues by cyclic Jacobi sweeps, ascending.
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a, int max_sweeps = 100) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a(i, j) * a(i, j);
        if (i != j) off += a(i, j) * a(i, j);
      }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace eulersum
