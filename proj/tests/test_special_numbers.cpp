#include "eulersum/special_numbers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace eulersum;

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), BigRational(1));
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(3), BigRational(0));
  EXPECT_EQ(bernoulli(10), BigRational(5, 66));
}

TEST(Bernoulli, OddOrdersVanishAndEvenSignsAlternate) {
  for (unsigned n = 3; n <= 41; n += 2) EXPECT_TRUE(bernoulli(n).is_zero()) << n;
  for (unsigned m = 1; m <= 20; ++m) EXPECT_EQ(bernoulli(2 * m).sign(), m % 2 == 1 ? 1 : -1) << m;
}

// Frozen value well beyond the tables.
TEST(Bernoulli, FrozenB30) {
  EXPECT_EQ(bernoulli(30), BigRational::parse("8615841276005/14322"));
}

TEST(PowerSum, Examples) {
  EXPECT_EQ(power_sum(10, 2).direct, 385);
  EXPECT_EQ(power_sum(1, 0).direct, 1);
  EXPECT_EQ(power_sum(5, 3).direct, 225);
}

TEST(PowerSum, FaulhaberMatchesDirectOnGrid) {
  for (unsigned N = 1; N <= 20; ++N)
    for (unsigned p = 0; p <= 10; ++p) {
      PowerSum s = power_sum(N, p);
      EXPECT_EQ(s.via_bernoulli, BigRational(s.direct)) << "N=" << N << " p=" << p;
    }
}

TEST(PowerSum, UnshiftedVariantFailsAtFirstPower) {
  // sum_{k=1}^{N} k^0 = N, but the variant gives B_1 = -1/2.
  EXPECT_EQ(power_sum_unshifted_variant(7, 1), BigRational(-1, 2));
}

TEST(Zigzag, RecurrenceTable) {
  const long long want[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(zigzag(n), want[n]) << n;
}

// OEIS A000111(20) = 370371188237525.
TEST(Zigzag, FrozenLargeValue) { EXPECT_EQ(zigzag(20), BigInt("370371188237525")); }

TEST(Zigzag, BruteForceAgrees) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(zigzag_bruteforce(n), zigzag(static_cast<unsigned>(n))) << n;
  EXPECT_EQ(zigzag_bruteforce(3), 2);
  EXPECT_EQ(zigzag_bruteforce(8), 1385);
  EXPECT_THROW(zigzag_bruteforce(11), std::domain_error);
  EXPECT_THROW(zigzag_bruteforce(0), std::domain_error);
}

TEST(CyclicZigzag, FormulaBruteForceAndErrors) {
  const long long want[] = {1, 4, 48, 1088, 39680};
  for (int n = 2; n <= 10; n += 2) {
    EXPECT_EQ(cyclic_zigzag(n), want[n / 2 - 1]);
    EXPECT_EQ(cyclic_zigzag_bruteforce(n), want[n / 2 - 1]);
  }
  EXPECT_THROW(cyclic_zigzag(3), std::domain_error);
  EXPECT_THROW(cyclic_zigzag_bruteforce(5), std::domain_error);
  EXPECT_THROW(cyclic_zigzag_bruteforce(12), std::domain_error);
}

TEST(CyclicZigzag, BernoulliIdentity) {
  for (unsigned n = 2; n <= 16; n += 2) {
    BigRational want = BigRational(pow2(n - 1) * (pow2(n) - 1)) * bernoulli(n).abs();
    EXPECT_EQ(BigRational(cyclic_zigzag(static_cast<int>(n))), want) << n;
  }
}

TEST(EulerNumber, TableAndErrors) {
  EXPECT_EQ(euler_number(0), 1);
  EXPECT_EQ(euler_number(2), -1);
  EXPECT_EQ(euler_number(4), 5);
  EXPECT_EQ(euler_number(6), -61);
  EXPECT_EQ(euler_number(8), 1385);
  EXPECT_THROW(euler_number(3), std::domain_error);
  EXPECT_THROW(euler_number(-2), std::domain_error);
}

TEST(Permutation, ValidatesBijection) {
  EXPECT_NO_THROW(Permutation({2, 1, 3}));
  EXPECT_THROW(Permutation({1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  Permutation p({3, 1, 2});
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(Permutation::identity(3), Permutation({1, 2, 3}));
}

TEST(Permutation, AlternatingPredicates) {
  EXPECT_TRUE(is_alternating(Permutation({1, 3, 2})));
  EXPECT_FALSE(is_alternating(Permutation({2, 1})));
  // 1 < 4 > 2 < 3 and 3 > 1 closes the cycle.
  EXPECT_TRUE(is_cyclically_alternating(Permutation({1, 4, 2, 3})));
  EXPECT_TRUE(is_cyclically_alternating(Permutation({2, 4, 1, 3})));
  EXPECT_FALSE(is_cyclically_alternating(Permutation({1, 2, 3, 4})));  // not alternating
  EXPECT_FALSE(is_cyclically_alternating(Permutation({1, 3, 2})));     // odd length
  EXPECT_FALSE(is_cyclically_alternating(Permutation({3, 4, 1, 2})));  // 2 < 3
}

TEST(Permutation, RotateByTwo) {
  EXPECT_EQ(rotate_by_two(Permutation({1, 2}), 0), Permutation({1, 2}));
  EXPECT_EQ(rotate_by_two(Permutation({1, 4, 2, 3}), 1), Permutation({2, 3, 1, 4}));
  EXPECT_EQ(rotate_by_two(Permutation({1, 2}), 1), Permutation({1, 2}));
  EXPECT_EQ(rotate_by_two(Permutation({1, 4, 2, 3}), -1), Permutation({2, 3, 1, 4}));
  EXPECT_THROW(rotate_by_two(Permutation({1, 3, 2}), 1), std::invalid_argument);
}

// Each rotation orbit of a cyclically alternating permutation has n/2
// members, all cyclically alternating, and exactly one ends in n.
TEST(Permutation, RotationOrbitsPartitionCyclicPermutations) {
  for (int n = 2; n <= 8; n += 2) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    long long with_n_last = 0, total = 0;
    do {
      if (!is_cyclically_alternating(s)) continue;
      ++total;
      Permutation p(s);
      std::set<Permutation> orbit;
      int ending_in_n = 0;
      for (int j = 0; j < n / 2; ++j) {
        Permutation r = rotate_by_two(p, j);
        EXPECT_TRUE(is_cyclically_alternating(r));
        orbit.insert(r);
        ending_in_n += r(n) == n;
      }
      EXPECT_EQ(static_cast<int>(orbit.size()), n / 2);
      EXPECT_EQ(ending_in_n, 1);
      if (s.back() == n) ++with_n_last;
    } while (std::next_permutation(s.begin(), s.end()));
    // Those ending in n correspond to alternating permutations of [n-1].
    EXPECT_EQ(with_n_last, zigzag(static_cast<unsigned>(n - 1)));
    EXPECT_EQ(total, cyclic_zigzag(n));
  }
}

TEST(SequenceCache, ConcurrentReadersSeeFreshValues) {
  SequenceCache cache;
  SequenceCache fresh;
  const BigInt z40 = fresh.zigzag(40);
  const BigRational b40 = fresh.bernoulli(40);
  std::vector<std::jthread> threads;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (unsigned n = (t % 2 == 0) ? 40 : 0; n <= 40; ++n) {
        if (n == 40) bad[t] += cache.zigzag(n) != z40 || cache.bernoulli(n) != b40;
        else cache.zigzag(n);
      }
    });
  threads.clear();
  for (int b : bad) EXPECT_EQ(b, 0);
  EXPECT_EQ(cache.zigzag(40), z40);
}
