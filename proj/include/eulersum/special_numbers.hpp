#pragma once

/**
 * @file special_numbers.hpp
 * @brief Bernoulli numbers, Euler numbers, and counts of alternating and
 * cyclically alternating permutations, with brute-force enumerators that
 * check the recurrences independently.
 *
 * Conventions: B_0 = 1, B_1 = -1/2, B_n = 0 for odd n >= 3. E_n is defined
 * for even n only, as E_n = (-1)^{n/2} A(n).
 */

#include "eulersum/big_rational.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersum {

/// Largest n accepted by the permutation enumerators (10! ~ 3.6M).
inline constexpr int kBruteForceLimit = 10;

/// A bijection on {1..n}, stored as (sigma(1), ..., sigma(n)).
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: images must be a bijection on {1..n}");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based access, sigma(i).
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// sigma(1) < sigma(2) > sigma(3) < ... over the given images.
inline bool is_alternating(std::span<const int> s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    bool rising = (i % 2 == 0);
    if (rising ? !(s[i] < s[i + 1]) : !(s[i] > s[i + 1])) return false;
  }
  return true;
}
inline bool is_alternating(const Permutation& p) { return is_alternating(p.images()); }

/// Alternating, of even length, and closing up with sigma(n) > sigma(1).
inline bool is_cyclically_alternating(std::span<const int> s) {
  if (s.empty() || s.size() % 2 != 0) return false;
  return is_alternating(s) && s.back() > s.front();
}
inline bool is_cyclically_alternating(const Permutation& p) {
  return is_cyclically_alternating(p.images());
}

/// (sigma(2j+1), sigma(2j+2), ..., sigma(2j+n)) with indices taken mod n.
inline Permutation rotate_by_two(const Permutation& p, int j) {
  const int n = p.size();
  if (n % 2 != 0) throw std::invalid_argument("rotate_by_two: permutation length must be even");
  std::vector<int> out(n);
  const int offset = ((2 * j) % n + n) % n;
  for (int i = 0; i < n; ++i) out[i] = p.images()[(i + offset) % n];
  return Permutation(std::move(out));
}

/**
 * Memoized Bernoulli and zigzag sequences.
 *
 * Lookups extend the stored prefix under an exclusive lock; reads of an
 * already computed prefix take a shared lock. Results are identical to a
 * fresh computation.
 */
class SequenceCache {
public:
  BigRational bernoulli(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < bernoulli_.size()) return bernoulli_[n];
    }
    std::unique_lock lock(mutex_);
    while (bernoulli_.size() <= n) {
      // sum_{m=0}^{k} C(k+1, m) B_m = 0
      const unsigned k = static_cast<unsigned>(bernoulli_.size());
      if (k == 0) {
        bernoulli_.emplace_back(1);
        continue;
      }
      BigRational sum;
      for (unsigned m = 0; m < k; ++m) {
        if (m >= 3 && m % 2 == 1) continue;
        sum += BigRational(binomial(k + 1, m)) * bernoulli_[m];
      }
      bernoulli_.push_back(-sum / BigRational(static_cast<long long>(k) + 1));
    }
    return bernoulli_[n];
  }

  BigInt zigzag(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < zigzag_.size()) return zigzag_[n];
    }
    std::unique_lock lock(mutex_);
    // Boustrophedon (Seidel-Entringer-Arnold) triangle, one row at a time:
    // row k has entries E(k,0..k), E(k,0) = 0, E(k,i) = E(k,i-1) + E(k-1,k-i),
    // and A(k) = E(k,k).
    if (zigzag_.empty()) {
      zigzag_.emplace_back(1);
      row_ = {BigInt(1)};
    }
    while (zigzag_.size() <= n) {
      const std::size_t k = row_.size();
      std::vector<BigInt> next(k + 1);
      next[0] = 0;
      for (std::size_t i = 1; i <= k; ++i) next[i] = next[i - 1] + row_[k - i];
      zigzag_.push_back(next[k]);
      row_ = std::move(next);
    }
    return zigzag_[n];
  }

private:
  std::shared_mutex mutex_;
  std::vector<BigRational> bernoulli_;
  std::vector<BigInt> zigzag_;
  std::vector<BigInt> row_;
};

inline SequenceCache& default_sequence_cache() {
  static SequenceCache cache;
  return cache;
}

inline BigRational bernoulli(unsigned n) { return default_sequence_cache().bernoulli(n); }

/// A(n), the number of alternating permutations of {1..n}; A(0) = 1.
inline BigInt zigzag(unsigned n) { return default_sequence_cache().zigzag(n); }

namespace detail {

template <class Predicate>
BigInt count_permutations(int n, Predicate&& keep) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  unsigned long long count = 0;
  do {
    if (keep(std::span<const int>(s))) ++count;
  } while (std::next_permutation(s.begin(), s.end()));
  return BigInt(count);
}

inline void check_bruteforce_bound(int n, const char* who) {
  if (n < 1 || n > kBruteForceLimit)
    throw std::domain_error(std::string(who) + ": n must lie in 1.." +
                            std::to_string(kBruteForceLimit));
}

}  // namespace detail

inline BigInt zigzag_bruteforce(int n) {
  detail::check_bruteforce_bound(n, "zigzag_bruteforce");
  return detail::count_permutations(n, [](std::span<const int> s) { return is_alternating(s); });
}

/// A_0(n) = (n/2) A(n-1) for even n.
inline BigInt cyclic_zigzag(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("cyclic_zigzag: cyclically alternating permutations need even n >= 2");
  return BigInt(n / 2) * zigzag(static_cast<unsigned>(n - 1));
}

inline BigInt cyclic_zigzag_bruteforce(int n) {
  if (n % 2 != 0)
    throw std::domain_error("cyclic_zigzag_bruteforce: n must be even");
  detail::check_bruteforce_bound(n, "cyclic_zigzag_bruteforce");
  return detail::count_permutations(
      n, [](std::span<const int> s) { return is_cyclically_alternating(s); });
}

inline BigInt euler_number(int n) {
  if (n < 0 || n % 2 != 0)
    throw std::domain_error("euler_number: only nonnegative even orders are supported");
  BigInt a = zigzag(static_cast<unsigned>(n));
  return (n / 2) % 2 == 0 ? a : BigInt(-a);
}

struct PowerSum {
  BigInt direct;
  BigRational via_bernoulli;
};

/**
 * sum_{k=1}^{N} k^p two ways: literally, and by Faulhaber's formula
 *   sum_{k=0}^{N-1} k^p = 1/(p+1) sum_{m=0}^{p} C(p+1,m) B_m N^{p+1-m},
 * which is the form consistent with B_1 = -1/2. The shift to k = 1..N adds
 * N^p and removes 0^p (which is 1 when p = 0).
 */
inline PowerSum power_sum(unsigned N, unsigned p) {
  if (N == 0) throw std::domain_error("power_sum: N must be positive");
  PowerSum out;
  for (unsigned k = 1; k <= N; ++k) out.direct += boost::multiprecision::pow(BigInt(k), p);

  BigRational sum;
  for (unsigned m = 0; m <= p; ++m)
    sum += BigRational(binomial(p + 1, m)) * bernoulli(m) *
           BigRational(boost::multiprecision::pow(BigInt(N), p + 1 - m));
  sum /= BigRational(static_cast<long long>(p) + 1);
  sum += BigRational(boost::multiprecision::pow(BigInt(N), p));
  if (p == 0) sum -= BigRational(1);
  out.via_bernoulli = sum;
  return out;
}

/**
 * The variant 1/n sum_{m=1}^{n} C(n,m) B_m N^{n-m} for sum_{k=1}^N k^{n-1}.
 * Kept only so reports can show that it does not reproduce direct sums
 * (at n = 1 it evaluates to B_1 = -1/2 instead of N).
 */
inline BigRational power_sum_unshifted_variant(unsigned N, unsigned n) {
  if (n == 0) throw std::domain_error("power_sum_unshifted_variant: n must be positive");
  BigRational sum;
  for (unsigned m = 1; m <= n; ++m)
    sum += BigRational(binomial(n, m)) * bernoulli(m) *
           BigRational(boost::multiprecision::pow(BigInt(N), n - m));
  return sum / BigRational(static_cast<long long>(n));
}

}  // namespace eulersum
