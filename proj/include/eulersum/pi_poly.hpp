#pragma once

/**
 * @file pi_poly.hpp
 * @brief Exact polynomials in pi, and polynomials in v with pi-polynomial
 * coefficients.
 *
 * PiPoly holds sum_d c_d pi^d with rational c_d. VPiPoly holds
 * sum_j p_j(pi) v^j. Both store only nonzero coefficients in ordered maps,
 * so equality is structural. This is enough calculus to apply the kernel
 * operator (Tf)(v) = int_0^{pi/2 - v} f(u) du to polynomials exactly.
 */

#include "eulersum/big_rational.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace eulersum {

class PiPoly {
public:
  using Terms = std::map<unsigned, BigRational>;

  PiPoly() = default;
  PiPoly(BigRational c) { set(0, std::move(c)); }  // NOLINT(implicit)
  PiPoly(long long c) : PiPoly(BigRational(c)) {}   // NOLINT(implicit)

  static PiPoly monomial(BigRational coeff, unsigned pi_degree) {
    PiPoly p;
    p.set(pi_degree, std::move(coeff));
    return p;
  }
  /// pi/2
  static PiPoly half_pi() { return monomial(BigRational(1, 2), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  BigRational coeff(unsigned d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? BigRational() : it->second;
  }

  void set(unsigned d, BigRational c) {
    if (c.is_zero())
      terms_.erase(d);
    else
      terms_[d] = std::move(c);
  }

  PiPoly operator-() const {
    PiPoly r;
    for (const auto& [d, c] : terms_) r.terms_[d] = -c;
    return r;
  }

  friend PiPoly operator+(const PiPoly& a, const PiPoly& b) {
    PiPoly r = a;
    for (const auto& [d, c] : b.terms_) r.set(d, r.coeff(d) + c);
    return r;
  }
  friend PiPoly operator-(const PiPoly& a, const PiPoly& b) { return a + (-b); }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.set(da + db, r.coeff(da + db) + ca * cb);
    return r;
  }
  PiPoly& operator+=(const PiPoly& b) { return *this = *this + b; }
  PiPoly& operator*=(const PiPoly& b) { return *this = *this * b; }

  friend bool operator==(const PiPoly&, const PiPoly&) = default;

  /// Double evaluation at the platform pi.
  double to_double() const {
    double sum = 0.0;
    for (const auto& [d, c] : terms_) sum += c.to_double() * std::pow(std::numbers::pi, d);
    return sum;
  }

  /// Canonical report form "c0 + c1·pi + c2·pi^2", each coefficient as p/q.
  std::string to_string() const {
    if (terms_.empty()) return "0/1";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.to_fraction_string();
      if (d == 1) out += "·pi";
      if (d > 1) out += "·pi^" + std::to_string(d);
    }
    return out;
  }

private:
  Terms terms_;
};

inline PiPoly pow(const PiPoly& base, unsigned e) {
  PiPoly r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

class VPiPoly {
public:
  using Terms = std::map<unsigned, PiPoly>;

  VPiPoly() = default;
  VPiPoly(PiPoly c) { set(0, std::move(c)); }        // NOLINT(implicit)
  VPiPoly(long long c) : VPiPoly(PiPoly(c)) {}       // NOLINT(implicit)

  static VPiPoly monomial(PiPoly coeff, unsigned v_degree) {
    VPiPoly p;
    p.set(v_degree, std::move(coeff));
    return p;
  }
  /// The identity polynomial v.
  static VPiPoly v() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }

  PiPoly coeff(unsigned j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? PiPoly() : it->second;
  }

  void set(unsigned j, PiPoly c) {
    if (c.is_zero())
      terms_.erase(j);
    else
      terms_[j] = std::move(c);
  }

  VPiPoly operator-() const {
    VPiPoly r;
    for (const auto& [j, c] : terms_) r.terms_[j] = -c;
    return r;
  }
  friend VPiPoly operator+(const VPiPoly& a, const VPiPoly& b) {
    VPiPoly r = a;
    for (const auto& [j, c] : b.terms_) r.set(j, r.coeff(j) + c);
    return r;
  }
  friend VPiPoly operator-(const VPiPoly& a, const VPiPoly& b) { return a + (-b); }
  friend VPiPoly operator*(const VPiPoly& a, const VPiPoly& b) {
    VPiPoly r;
    for (const auto& [ja, ca] : a.terms_)
      for (const auto& [jb, cb] : b.terms_) r.set(ja + jb, r.coeff(ja + jb) + ca * cb);
    return r;
  }
  VPiPoly& operator+=(const VPiPoly& b) { return *this = *this + b; }
  VPiPoly& operator*=(const VPiPoly& b) { return *this = *this * b; }

  friend bool operator==(const VPiPoly&, const VPiPoly&) = default;

  /// Exact evaluation at a pi-polynomial point.
  PiPoly evaluate(const PiPoly& at) const {
    PiPoly sum;
    for (const auto& [j, c] : terms_) sum += c * pow(at, j);
    return sum;
  }

  double to_double(double v) const {
    double sum = 0.0;
    for (const auto& [j, c] : terms_) sum += c.to_double() * std::pow(v, j);
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [j, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (j == 1) out += "·v";
      if (j > 1) out += "·v^" + std::to_string(j);
    }
    return out;
  }

private:
  Terms terms_;
};

/// p(pi/2 - v), expanded binomially.
inline VPiPoly vpoly_reflect(const VPiPoly& p) {
  VPiPoly result;
  const PiPoly half = PiPoly::half_pi();
  for (const auto& [j, c] : p.terms()) {
    for (unsigned i = 0; i <= j; ++i) {
      BigRational sign = (i % 2 == 0) ? 1 : -1;
      PiPoly term = c * pow(half, j - i) * PiPoly(sign * BigRational(binomial(j, i)));
      result += VPiPoly::monomial(term, i);
    }
  }
  return result;
}

/// Formal antiderivative in v with zero constant term.
inline VPiPoly vpoly_antiderivative(const VPiPoly& p) {
  VPiPoly r;
  for (const auto& [j, c] : p.terms())
    r.set(j + 1, c * PiPoly(BigRational(1, static_cast<long long>(j) + 1)));
  return r;
}

/// Formal derivative in v.
inline VPiPoly vpoly_derivative(const VPiPoly& p) {
  VPiPoly r;
  for (const auto& [j, c] : p.terms())
    if (j > 0) r.set(j - 1, c * PiPoly(BigRational(static_cast<long long>(j))));
  return r;
}

/// int_0^{pi/2 - v} p(u) du, as a polynomial in v.
inline VPiPoly vpoly_integral_to_reflected(const VPiPoly& p) {
  return vpoly_reflect(vpoly_antiderivative(p));
}

/// int_0^{pi/2} p(u) du.
inline PiPoly vpoly_integral_to_half_pi(const VPiPoly& p) {
  return vpoly_antiderivative(p).evaluate(PiPoly::half_pi());
}

inline double pipoly_to_float(const PiPoly& p) { return p.to_double(); }

}  // namespace eulersum
