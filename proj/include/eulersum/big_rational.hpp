#pragma once

/**
 * @file big_rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * Values are kept in lowest terms with a strictly positive denominator, and
 * zero is represented uniquely as 0/1. Every exact result in the library
 * (series coefficients, polytope volumes, polynomial coefficients) is one
 * of these.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulersum {

using BigInt = boost::multiprecision::cpp_int;

class BigRational {
public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)
  BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  /// Parses "p", "-p" or "p/q".
  static BigRational parse(std::string_view text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos)
        return BigRational(BigInt(std::string(text)));
      return BigRational(BigInt(std::string(text.substr(0, slash))),
                         BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("not a rational: " + std::string(text));
    }
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  BigRational operator-() const { return BigRational(-num_, den_, Reduced{}); }
  BigRational abs() const { return BigRational(num_ < 0 ? BigInt(-num_) : num_, den_, Reduced{}); }

  BigRational reciprocal() const {
    if (num_ == 0) throw std::domain_error("BigRational: division by zero");
    return BigRational(den_, num_);
  }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.num_ == 0) throw std::domain_error("BigRational: division by zero");
    return BigRational(a.num_ * b.den_, a.den_ * b.num_);
  }

  BigRational& operator+=(const BigRational& b) { return *this = *this + b; }
  BigRational& operator-=(const BigRational& b) { return *this = *this - b; }
  BigRational& operator*=(const BigRational& b) { return *this = *this * b; }
  BigRational& operator/=(const BigRational& b) { return *this = *this / b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Nearest double, accurate to a couple of ulps even when numerator and
  /// denominator are far outside the double range.
  double to_double() const {
    if (num_ == 0) return 0.0;
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    long long shift = static_cast<long long>(boost::multiprecision::msb(den_)) -
                      static_cast<long long>(boost::multiprecision::msb(n)) + 64;
    BigInt q = shift >= 0 ? BigInt((n << shift) / den_) : BigInt((n >> -shift) / den_);
    double value = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return num_ < 0 ? -value : value;
  }

  /// "p/q", or just "p" for integers.
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Always "p/q", including integers ("p/1").
  std::string to_fraction_string() const { return num_.str() + "/" + den_.str(); }

private:
  struct Reduced {};
  BigRational(BigInt n, BigInt d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("BigRational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigRational pow(const BigRational& base, unsigned e) {
  BigRational result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace eulersum
