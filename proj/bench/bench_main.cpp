// Timing comparison of the OpenMP kernels against their serial references:
// the simplex-grid G scan and the per-coupling realized-value sweep.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}
#endif

#include "islog/fusion.hpp"
#include "islog/oracle.hpp"
#include "islog/rng.hpp"
#include "islog/score.hpp"
#include "../tests/test_support.hpp"

using namespace islog;

int main(int argc, char** argv) {
  std::size_t resolution = 260;
  std::size_t couplings = 400;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--resolution" && i + 1 < argc) resolution = std::strtoull(argv[++i], nullptr, 10);
    if (a == "--couplings" && i + 1 < argc) couplings = std::strtoull(argv[++i], nullptr, 10);
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif

  Rng rng(1);
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

  // Grid scan over a 4-vertex polytope in dimension 4.
  {
    std::vector<Distribution> verts;
    for (int v = 0; v < 4; ++v) verts.push_back(testsup::rand_dist(rng, 4));
    const ScoreRule s = ScoreRule::quadratic();
    double t0 = now();
    const auto ser = oracle::grid_min_g_serial(s, verts, resolution);
    double t1 = now();
    const auto par = oracle::grid_min_g(s, verts, resolution);
    double t2 = now();
    if (ser.rank != par.rank || ser.value != par.value) {
      std::printf("grid_min_g: MISMATCH between serial and parallel\n");
      return 1;
    }
    const std::string label =
        "grid_min_g quad, 4 vertices, res " + std::to_string(resolution);
    std::printf("%-44s %10.1f %10.1f %7.2fx\n", label.c_str(), 1e3 * (t1 - t0), 1e3 * (t2 - t1),
                (t1 - t0) / (t2 - t1));
  }

  // Realized-value sweep over sampled couplings.
  {
    const Distribution prior({0.4, 0.6});
    const InfoSystem p = testsup::rand_binary_with_prior(rng, 6, prior);
    const InfoSystem q = testsup::rand_binary_with_prior(rng, 6, prior);
    const InfoSystem fused = fuse(p, q);
    const auto rs = sample_couplings(p, q, couplings, 7);
    for (const ScoreRule& s : {ScoreRule::logarithmic(), ScoreRule::quadratic()}) {
      double t0 = now();
      const auto ser = realized_values_serial(s, rs, fused);
      double t1 = now();
      const auto par = realized_values(s, rs, fused);
      double t2 = now();
      for (std::size_t k = 0; k < ser.size(); ++k)
        if (ser[k] != par[k]) {
          std::printf("realized_values: MISMATCH at %zu\n", k);
          return 1;
        }
      const std::string label = std::string("realized_values ") + std::string(s.name()) + ", " +
                                std::to_string(couplings) + " couplings";
      std::printf("%-44s %10.1f %10.1f %7.2fx\n", label.c_str(), 1e3 * (t1 - t0), 1e3 * (t2 - t1),
                  (t1 - t0) / (t2 - t1));
    }
  }
  return 0;
}
