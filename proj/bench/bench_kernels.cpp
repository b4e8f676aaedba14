// Timing comparison of the OpenMP batch kernels against their serial
// reference implementations.  The parallel paths must stay bitwise equal to
// the serial ones, so this doubles as a consistency check before printing
// the speedups.
#include <chrono>
#include <cstdio>
#include <vector>

#include "mct/corpus.hpp"
#include "mct/fourier.hpp"
#include "mct/norms.hpp"

using namespace mct;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Median-of-3 wall time of a callable returning a checksum-carrying value.
template <typename F>
double bench(F&& body) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
  CorpusOpts co;
  co.max_cells = 64;
  StepFunction f = generate_corpus(424242, 1, co).front();
  StepFT g(f);

  std::vector<std::array<double, 2>> pts;
  for (int i = 0; i < 200000; ++i)
    pts.push_back({-40.0 + 80.0 * double(i) / 199999.0, 0.0});

  std::vector<cplx> serial, parallel;
  double t_serial = bench([&] { serial = ft_points_serial(g, pts); });
  double t_parallel = bench([&] { parallel = ft_points(g, pts, true); });
  bool equal = serial == parallel;
  std::printf("ft_points          %8d pts   serial %8.3f ms   parallel "
              "%8.3f ms   speedup %.2fx   %s\n",
              int(pts.size()), 1e3 * t_serial, 1e3 * t_parallel,
              t_serial / t_parallel, equal ? "bitwise equal" : "MISMATCH");

  FtNormOpts fo;
  fo.m_lo = -4;
  fo.m_hi = 2;
  fo.resolution = 96;
  fo.search_radius = 8.0;
  FtNormOpts fo_serial = fo;
  fo_serial.parallel = false;
  FtLevelProfile ps, pp;
  double t_prof_serial = bench([&] { ps = ft_level_profile(g, 2.0, fo_serial); });
  double t_prof_par = bench([&] { pp = ft_level_profile(g, 2.0, fo); });
  bool prof_equal = ps.sup_mass == pp.sup_mass && ps.m == pp.m;
  std::printf("ft_level_profile   res %4d        serial %8.3f ms   parallel "
              "%8.3f ms   speedup %.2fx   %s\n",
              fo.resolution, 1e3 * t_prof_serial, 1e3 * t_prof_par,
              t_prof_serial / t_prof_par,
              prof_equal ? "bitwise equal" : "MISMATCH");

#ifdef MCT_HAS_OPENMP
  std::printf("built with OpenMP\n");
#else
  std::printf("built without OpenMP (serial fallback)\n");
#endif
  return equal && prof_equal ? 0 : 1;
}
