// Compares the serial reference scan against the OpenMP scan on the two
// workloads that dominate real checks: raw grid scanning with a rational
// integrand evaluation per point, and a full cone-affinity identity check.
#include <omp.h>

#include <cstdio>
#include <cstring>

#include "qav/grid_scan.hpp"
#include "qav/integrand_zoo.hpp"
#include "qav/operator_zoo.hpp"
#include "qav/quasiaffinity.hpp"

using namespace qav;

namespace {

double timeScan(std::uint64_t total, const HoldsFn& holds, int threads) {
  double t0 = omp_get_wtime();
  auto result = scanFirstViolation(total, holds, threads);
  double t1 = omp_get_wtime();
  if (result) std::fprintf(stderr, "unexpected violation in benchmark predicate\n");
  return t1 - t0;
}

void benchRawScan(int maxThreads) {
  PolyIntegrand det = makeDet(3);
  GridShape shape{{40, 40, 40}};
  auto holds = [&](std::uint64_t idx) {
    std::vector<long> pt;
    shape.decode(idx, pt);
    RatVec x(9, Rat(0));
    for (int i = 0; i < 3; ++i) x[i * 3 + i] = pt[i] + 1;
    x[1] = pt[0];
    x[3] = pt[1];
    // Diagonally dominant, so the determinant never vanishes here.
    return !isZero(det.poly.eval(x));
  };
  std::uint64_t total = shape.total();
  double serial = timeScan(total, holds, 1);
  std::printf("raw scan, %llu points, det3 evaluation per point\n",
              static_cast<unsigned long long>(total));
  std::printf("  threads=1  %8.3f s\n", serial);
  for (int threads = 2; threads <= maxThreads; threads *= 2) {
    double t = timeScan(total, holds, threads);
    std::printf("  threads=%-2d %8.3f s  speedup %.2fx\n", threads, t, serial / t);
  }
}

void benchIdentityCheck(int maxThreads) {
  PolyIntegrand f = makeBcoL();
  HomOperator hessian = makeHessian(2, 3);
  std::printf("cone-affinity identity, bcoL under hessian(2,3)\n");
  CheckOptions options;
  options.threads = 1;
  double t0 = omp_get_wtime();
  CheckReport report = lambdaAffineCheck(f, hessian, options);
  double serial = omp_get_wtime() - t0;
  std::printf("  threads=1  %8.3f s  (%s)\n", serial, verdictName(report.verdict).c_str());
  for (int threads = 2; threads <= maxThreads; threads *= 2) {
    options.threads = threads;
    t0 = omp_get_wtime();
    report = lambdaAffineCheck(f, hessian, options);
    double t = omp_get_wtime() - t0;
    std::printf("  threads=%-2d %8.3f s  speedup %.2fx  (%s)\n", threads, t, serial / t,
                verdictName(report.verdict).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  int maxThreads = omp_get_max_threads();
  for (int i = 1; i < argc; ++i)
    if (std::strncmp(argv[i], "--threads=", 10) == 0) maxThreads = std::atoi(argv[i] + 10);
  if (maxThreads < 2) maxThreads = 2;
  benchRawScan(maxThreads);
  benchIdentityCheck(maxThreads);
  return 0;
}
