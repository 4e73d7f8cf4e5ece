// Times the serial and OpenMP grid kernels on the same reduced instance.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "symred/grid_kernels.hpp"
#include "symred/parser.hpp"
#include "symred/reduction.hpp"

using namespace symred;

template <class F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const unsigned res = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 201;
  const MultiPoly f = parse_polynomial("(x1+x2+x3+x4)^4 - 3*(x1*x2+x1*x3+x1*x4+x2*x3+x2*x4+x3*x4)^2 + x1*x2*x3*x4");
  const MultiPoly reduced = reduce_polynomial(f, MultiplicityPattern{{2, 1, 1}, 0}).reduced;
  const CompiledPoly c(reduced);
  const GridSpec grid{{-10, -10, -10}, {10, 10, 10}, res};

  GridMin s{}, p{};
  const double ts = time_ms([&] { s = grid_min_serial(c, grid); });
  const double tp = time_ms([&] { p = grid_min_parallel(c, grid); });
  std::printf("points %llu threads %d\n", static_cast<unsigned long long>(grid.num_points()), omp_get_max_threads());
  std::printf("grid_min serial   %10.2f ms  min %.17g at %llu\n", ts, s.value, static_cast<unsigned long long>(s.linear));
  std::printf("grid_min parallel %10.2f ms  min %.17g at %llu\n", tp, p.value, static_cast<unsigned long long>(p.linear));

  std::vector<double> vs, vp;
  const double tvs = time_ms([&] { vs = grid_values_serial(c, grid); });
  const double tvp = time_ms([&] { vp = grid_values_parallel(c, grid); });
  std::printf("grid_values serial   %10.2f ms\n", tvs);
  std::printf("grid_values parallel %10.2f ms\n", tvp);
  const double tcs = time_ms([&] { (void)first_sign_change_serial(vs, grid); });
  const double tcp = time_ms([&] { (void)first_sign_change_parallel(vs, grid); });
  std::printf("sign_change serial   %10.2f ms\n", tcs);
  std::printf("sign_change parallel %10.2f ms\n", tcp);
  return (s.linear == p.linear && vs == vp) ? 0 : 1;
}
