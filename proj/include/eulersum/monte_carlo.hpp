#pragma once

/**
 * @file monte_carlo.hpp
 * @brief Reproducible Monte Carlo estimates of polytope volumes and of the
 * cube integral int_{(0,1)^n} dx / (1 -+ (x_1...x_n)^2).
 *
 * Samples are split into fixed chunks of kChunkSize. Chunk i draws from a
 * std::mt19937_64 seeded with splitmix64 of (seed, i), and chunk partial
 * sums are reduced in chunk order, so results depend on (seed, samples)
 * only and never on the number of worker threads.
 */

#include "eulersum/euler_sums.hpp"
#include "eulersum/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eulersum {

inline constexpr std::uint64_t kChunkSize = 65536;
inline constexpr std::uint64_t kMinSamples = 10000;

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  /// |mean - exact| <= k * std_error
  bool within(double exact, double k = 4.0) const { return std::abs(mean - exact) <= k * std_error; }

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of chunk `index` under master seed `seed`.
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

namespace detail {

inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `sample(rng) -> double` `samples` times, chunked and reduced in order.
template <class Sampler>
ChunkSums run_chunks(std::uint64_t samples, std::uint64_t seed, unsigned workers,
                     const Sampler& sample) {
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> partial(chunks);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      std::mt19937_64 rng(chunk_seed(seed, c));
      const std::uint64_t count = std::min(kChunkSize, samples - c * kChunkSize);
      ChunkSums s;
      for (std::uint64_t i = 0; i < count; ++i) {
        const double f = sample(rng);
        s.sum += f;
        s.sum_sq += f * f;
      }
      partial[c] = s;
    }
  };
  const unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), chunks));
  if (w <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < w; ++t) pool.emplace_back(work, t, w);
  }
  ChunkSums total;
  for (const ChunkSums& s : partial) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
  }
  return total;
}

inline void check_samples(std::uint64_t samples) {
  if (samples < kMinSamples)
    throw std::domain_error("Monte Carlo estimates need at least " + std::to_string(kMinSamples) +
                            " samples");
}

}  // namespace detail

/**
 * Indicator sampling over the bounding box (0, b)^n, b = 1 or pi/2.
 * std_error = sqrt(p(1-p)/samples) * b^n with p the hit fraction.
 */
inline McEstimate mc_volume(const PolytopeSpec& spec, std::uint64_t samples, std::uint64_t seed,
                            unsigned workers = 0) {
  detail::check_samples(samples);
  if (spec.n < 1 || spec.n > 64) throw std::domain_error("mc_volume: n must lie in 1..64");
  const double b = spec.bound();
  const std::size_t n = static_cast<std::size_t>(spec.n);
  ChunkSums s = detail::run_chunks(samples, seed, workers, [&](std::mt19937_64& rng) {
    double v[64];
    for (std::size_t i = 0; i < n; ++i) v[i] = b * uniform01(rng);
    return spec.contains(std::span<const double>(v, n)) ? 1.0 : 0.0;
  });
  const double box = std::pow(b, spec.n);
  const double hit = s.sum / static_cast<double>(samples);
  return {hit * box, std::sqrt(hit * (1.0 - hit) / static_cast<double>(samples)) * box, samples,
          seed};
}

/// 1 / (1 - (prod x)^2) for even n, 1 / (1 + (prod x)^2) for odd n.
inline double cube_integrand(std::span<const double> x) {
  double prod = 1.0;
  for (double xi : x) prod *= xi;
  const double sq = prod * prod;
  return x.size() % 2 == 0 ? 1.0 / (1.0 - sq) : 1.0 / (1.0 + sq);
}

/// Sample mean of cube_integrand over (0,1)^n; estimates S(n).
inline McEstimate mc_cube_integral(int n, std::uint64_t samples, std::uint64_t seed,
                                   unsigned workers = 0) {
  detail::check_samples(samples);
  if (n < 2 || n > 64) throw std::domain_error("mc_cube_integral: n must lie in 2..64");
  const std::size_t dim = static_cast<std::size_t>(n);
  ChunkSums s = detail::run_chunks(samples, seed, workers, [&](std::mt19937_64& rng) {
    double x[64];
    for (std::size_t i = 0; i < dim; ++i) x[i] = uniform01(rng);
    return cube_integrand(std::span<const double>(x, dim));
  });
  const double N = static_cast<double>(samples);
  const double mean = s.sum / N;
  const double var = std::max(0.0, (s.sum_sq / N - mean * mean) * N / (N - 1.0));
  return {mean, std::sqrt(var / N), samples, seed};
}

struct ArctangentCheck {
  PiMultiple exact;
  double numeric = 0.0;
};

/// S(1) = pi/4 against composite Simpson quadrature of int_0^1 dx/(1+x^2).
inline ArctangentCheck arctangent_check(int intervals = 2000) {
  if (intervals < 2 || intervals % 2 != 0)
    throw std::domain_error("arctangent_check: Simpson needs an even interval count");
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  const double h = 1.0 / intervals;
  double sum = f(0.0) + f(1.0);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  return {s_exact(1), sum * h / 3.0};
}

}  // namespace eulersum
