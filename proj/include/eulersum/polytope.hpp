#pragma once

/**
 * @file polytope.hpp
 * @brief Zigzag posets and their order polytopes, and the change of
 * variables x_i = sin(u_i) / cos(u_{i+1}) taking the cyclic polytope
 *   P_n = { u : u_i > 0, u_i + u_{i+1} < pi/2 (indices mod n) }
 * onto the open unit cube.
 */

#include "eulersum/big_rational.hpp"
#include "eulersum/euler_sums.hpp"
#include "eulersum/special_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulersum {

using Point = std::vector<double>;

/// A strict partial order on {1..n}, given by relations i < j.
class PartialOrder {
public:
  using Relation = std::pair<int, int>;

  PartialOrder(int n, std::set<Relation> relations) : n_(n), relations_(std::move(relations)) {
    if (n < 1) throw std::invalid_argument("PartialOrder: n must be positive");
    for (auto [i, j] : relations_)
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("PartialOrder: relation (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range");
    if (has_cycle()) throw std::invalid_argument("PartialOrder: relations contain a cycle");
  }

  static PartialOrder antichain(int n) { return PartialOrder(n, {}); }

  int size() const { return n_; }
  const std::set<Relation>& relations() const { return relations_; }

  /// True when the images respect every relation: sigma(i) < sigma(j).
  bool extended_by(std::span<const int> sigma) const {
    for (auto [i, j] : relations_)
      if (!(sigma[i - 1] < sigma[j - 1])) return false;
    return true;
  }

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

private:
  bool has_cycle() const {
    // Kahn's algorithm: a cycle leaves nodes with positive in-degree.
    std::vector<int> indeg(n_ + 1, 0);
    std::vector<std::vector<int>> out(n_ + 1);
    for (auto [i, j] : relations_) {
      out[i].push_back(j);
      ++indeg[j];
    }
    std::vector<int> ready;
    for (int v = 1; v <= n_; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++seen;
      for (int w : out[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    return seen != n_;
  }

  int n_;
  std::set<Relation> relations_;
};

/// 1 < 2 > 3 < 4 > ... on {1..n}, no other relations.
inline PartialOrder chain_poset(int n) {
  if (n < 1) throw std::invalid_argument("chain_poset: n must be positive");
  std::set<PartialOrder::Relation> rel;
  for (int i = 1; i < n; ++i) rel.insert(i % 2 == 1 ? PartialOrder::Relation{i, i + 1}
                                                    : PartialOrder::Relation{i + 1, i});
  return PartialOrder(n, std::move(rel));
}

/// The chain relations closed up with n > 1; n even.
inline PartialOrder cyclic_poset(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("cyclic_poset: n must be even >= 2");
  auto rel = chain_poset(n).relations();
  rel.insert({1, n});
  return PartialOrder(n, std::move(rel));
}

inline BigInt linear_extension_count(const PartialOrder& p) {
  detail::check_bruteforce_bound(p.size(), "linear_extension_count");
  return detail::count_permutations(p.size(),
                                    [&](std::span<const int> s) { return p.extended_by(s); });
}

/// Volume of { t in (0,1)^n : t_i < t_j whenever i < j in p }.
inline BigRational order_polytope_volume(const PartialOrder& p) {
  return BigRational(linear_extension_count(p), factorial(static_cast<unsigned>(p.size())));
}

enum class PolytopeKind { cyclic, chain };
enum class PolytopeScale { unit, half_pi };

/**
 * cyclic/unit   : v_i > 0, v_i + v_{i+1} < 1, indices mod n
 * cyclic/half_pi: the same with bound pi/2 (the polytope P_n itself)
 * chain/*       : the constraint between v_n and v_1 is dropped
 */
struct PolytopeSpec {
  PolytopeKind kind = PolytopeKind::cyclic;
  int n = 2;
  PolytopeScale scale = PolytopeScale::half_pi;

  double bound() const { return scale == PolytopeScale::unit ? 1.0 : std::numbers::pi / 2.0; }

  /// Open-region membership; points on the boundary are outside.
  bool contains(std::span<const double> v) const {
    const double b = bound();
    for (double x : v)
      if (!(x > 0.0)) return false;
    const int pairs = kind == PolytopeKind::cyclic ? n : n - 1;
    for (int i = 0; i < pairs; ++i)
      if (!(v[i] + v[(i + 1) % n] < b)) return false;
    return true;
  }

  friend bool operator==(const PolytopeSpec&, const PolytopeSpec&) = default;
};

inline std::string to_string(PolytopeKind k) { return k == PolytopeKind::cyclic ? "cyclic" : "chain"; }
inline std::string to_string(PolytopeScale s) { return s == PolytopeScale::unit ? "unit" : "half_pi"; }

inline PolytopeKind parse_kind(const std::string& s) {
  if (s == "cyclic") return PolytopeKind::cyclic;
  if (s == "chain") return PolytopeKind::chain;
  throw std::invalid_argument("unknown polytope kind: " + s);
}
inline PolytopeScale parse_scale(const std::string& s) {
  if (s == "unit") return PolytopeScale::unit;
  if (s == "half_pi") return PolytopeScale::half_pi;
  throw std::invalid_argument("unknown polytope scale: " + s);
}

/// Exact volume. Cyclic volumes come from S(n); chain volumes from A(n)/n!.
inline PiMultiple volume_formula(const PolytopeSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::domain_error("volume_formula: n must be positive");
  const unsigned un = static_cast<unsigned>(n);
  if (spec.kind == PolytopeKind::cyclic) {
    if (n < 2)
      throw std::domain_error("volume_formula: the cyclic polytope needs n >= 2");
    if (spec.scale == PolytopeScale::half_pi) return {s_coeff(n), un};
    return {s_coeff(n) * BigRational(pow2(un)), 0};
  }
  BigRational unit(zigzag(un), factorial(un));
  if (spec.scale == PolytopeScale::unit) return {unit, 0};
  return {unit / BigRational(pow2(un)), un};
}

/// t_i for odd i, 1 - t_i for even i (1-based). An involution.
inline Point t_to_v_transform(std::span<const double> t) {
  Point v(t.begin(), t.end());
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = 1.0 - v[i];
  return v;
}

inline bool in_cyclic_polytope(std::span<const double> u) {
  return PolytopeSpec{PolytopeKind::cyclic, static_cast<int>(u.size()), PolytopeScale::half_pi}
      .contains(u);
}

/// x_i = sin(u_i) / cos(u_{i+1}), indices mod n.
inline Point forward_map(std::span<const double> u) {
  if (u.empty()) throw std::invalid_argument("forward_map: empty point");
  if (!in_cyclic_polytope(u))
    throw std::domain_error("forward_map: point is not strictly inside the polytope");
  const std::size_t n = u.size();
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::sin(u[i]) / std::cos(u[(i + 1) % n]);
  return x;
}

/// 1 - (prod x)^2 for even n, 1 + (prod x)^2 for odd n.
inline double jacobian_formula(std::span<const double> x) {
  double prod = 1.0;
  for (double xi : x) prod *= xi;
  return x.size() % 2 == 0 ? 1.0 - prod * prod : 1.0 + prod * prod;
}

namespace detail {

/// Determinant by Gaussian elimination with partial pivoting.
inline double determinant(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace detail

/// Central-difference Jacobian determinant of forward_map at u.
inline double jacobian_fd(std::span<const double> u, double h) {
  const std::size_t n = u.size();
  std::vector<double> jac(n * n);
  Point plus(u.begin(), u.end()), minus(u.begin(), u.end());
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = u[j] + h;
    minus[j] = u[j] - h;
    Point fp = forward_map(plus), fm = forward_map(minus);
    for (std::size_t i = 0; i < n; ++i) jac[i * n + j] = (fp[i] - fm[i]) / (2.0 * h);
    plus[j] = u[j];
    minus[j] = u[j];
  }
  return detail::determinant(std::move(jac), n);
}

enum class InverseMethod {
  plain,       ///< successive substitution on the composite map
  accelerated  ///< Steffensen (Aitken delta-squared) steps on the same map
};

struct InverseOptions {
  double tol = 1e-13;
  int max_iter = 200;
  double start = std::numbers::pi / 4.0;
  InverseMethod method = InverseMethod::accelerated;
};

/// f_x(u) = asin(x cos u), a contraction of [0, pi/2] for 0 < x < 1.
inline double contraction_step(double x, double u) { return std::asin(x * std::cos(u)); }

namespace detail {

/// f_{x_1} o f_{x_2} o ... o f_{x_n} applied to u_1.
inline double composite(std::span<const double> x, double u1) {
  double u = u1;
  for (std::size_t i = x.size(); i-- > 0;) u = contraction_step(x[i], u);
  return u;
}

}  // namespace detail

/**
 * The unique u in P_n with forward_map(u) = x.
 *
 * Iterates the composite contraction on u_1 until successive iterates differ
 * by less than tol, then back-substitutes u_i = f_{x_i}(u_{i+1}). The plain
 * iteration contracts at rate (prod x_i)^2, which approaches 1 near the
 * corner (1, ..., 1); the accelerated method applies Aitken extrapolation
 * to pairs of composite steps and falls back to a plain step whenever the
 * extrapolate leaves [0, pi/2]. Throws std::runtime_error when max_iter is
 * exhausted.
 */
inline Point inverse_map(std::span<const double> x, const InverseOptions& opt = {}) {
  if (x.empty()) throw std::invalid_argument("inverse_map: empty point");
  for (double xi : x)
    if (!(xi > 0.0 && xi < 1.0))
      throw std::domain_error("inverse_map: coordinates must lie in (0, 1)");

  constexpr double half_pi = std::numbers::pi / 2.0;
  double u1 = opt.start;
  bool converged = false;
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    double next;
    const double g1 = detail::composite(x, u1);
    if (opt.method == InverseMethod::plain) {
      next = g1;
    } else {
      const double g2 = detail::composite(x, g1);
      const double denom = g2 - 2.0 * g1 + u1;
      next = g2;
      if (denom != 0.0) {
        const double aitken = u1 - (g1 - u1) * (g1 - u1) / denom;
        if (aitken >= 0.0 && aitken <= half_pi) next = aitken;
      }
    }
    const double delta = std::abs(next - u1);
    u1 = next;
    if (delta < opt.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("inverse_map: fixed-point iteration did not converge within " +
                             std::to_string(opt.max_iter) + " iterations");

  const std::size_t n = x.size();
  Point u(n);
  u[0] = u1;
  // u_n = f_{x_n}(u_1), then u_i = f_{x_i}(u_{i+1}) down to u_2.
  double next = u1;
  for (std::size_t i = n; i-- > 1;) {
    next = contraction_step(x[i], next);
    u[i] = next;
  }
  return u;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace eulersum
