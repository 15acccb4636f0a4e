// Computes S(4) = pi^4/96 by several independent routes and prints them side by side.

#include "eulersum/eulersum.hpp"

#include <cstdio>

int main() {
  using namespace eulersum;
  const int n = 4;

  const PiMultiple exact = s_exact(n);
  std::printf("closed form          %s = %.12f\n", exact.to_compact_string().c_str(),
              exact.to_double());
  std::printf("from B_4             %s\n", s_coeff_via_bernoulli(n).to_string().c_str());
  std::printf("linear extensions    A_0(4)/4! = %s of the scaled polytope\n",
              order_polytope_volume(cyclic_poset(n)).to_string().c_str());

  const SeriesValue series = s_numeric(n, 1000);
  std::printf("direct series        %.12f (tail <= %.1e)\n", series.value, series.tail_bound);

  const McEstimate mc = mc_volume({PolytopeKind::cyclic, n, PolytopeScale::half_pi}, 200000, 1);
  std::printf("Monte Carlo volume   %.6f +- %.6f\n", mc.mean, mc.std_error);

  std::printf("Nystrom trace N=400  %.6f\n", trace_power_nystrom(400, n));
}
