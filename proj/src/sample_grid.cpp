#include "qav/sample_grid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qav {

long DetRng::nextInt(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

bool normalizePrimitive(std::vector<long>& v) {
  long g = 0;
  for (long e : v) g = std::gcd(g, e < 0 ? -e : e);
  if (g == 0) return false;
  for (long& e : v) e /= g;
  for (long e : v) {
    if (e > 0) break;
    if (e < 0) {
      for (long& x : v) x = -x;
      break;
    }
  }
  return true;
}

namespace {

void appendRandomPoints(SampleGrid& grid, int N, int count, std::uint64_t seed, long bound) {
  std::set<std::vector<long>> seen(grid.points.begin(), grid.points.end());
  DetRng rng(seed);
  int added = 0;
  // Low dimensions can run out of distinct directions (N = 1 has exactly
  // one); give up after enough rejected draws.
  long attempts = 20000L * (count > 0 ? count : 1);
  while (added < count && attempts-- > 0) {
    std::vector<long> v(N);
    for (int i = 0; i < N; ++i) v[i] = rng.nextInt(-bound, bound);
    if (!normalizePrimitive(v)) continue;
    if (!seen.insert(v).second) continue;
    grid.points.push_back(std::move(v));
    ++added;
  }
}

}  // namespace

SampleGrid defaultSampleGrid(int N, std::uint64_t seed) {
  if (N <= 0) throw std::invalid_argument("base dimension must be positive");
  std::set<std::vector<long>> small;
  std::vector<long> v(N, -2);
  for (;;) {
    std::vector<long> w = v;
    if (normalizePrimitive(w)) small.insert(w);
    int i = N - 1;
    while (i >= 0 && v[i] == 2) v[i--] = -2;
    if (i < 0) break;
    ++v[i];
  }
  SampleGrid grid;
  grid.N = N;
  grid.points.assign(small.begin(), small.end());
  appendRandomPoints(grid, N, 32, seed, 9);
  return grid;
}

SampleGrid randomSampleGrid(int N, int count, std::uint64_t seed) {
  if (N <= 0) throw std::invalid_argument("base dimension must be positive");
  if (count <= 0) throw std::invalid_argument("point count must be positive");
  SampleGrid grid;
  grid.N = N;
  appendRandomPoints(grid, N, count, seed, 9);
  if (grid.points.empty()) throw std::invalid_argument("no sample points could be drawn");
  return grid;
}

SampleGrid gridFromPoints(int N, std::vector<std::vector<long>> points) {
  if (N <= 0) throw std::invalid_argument("base dimension must be positive");
  if (points.empty()) throw std::invalid_argument("sample grid must be nonempty");
  std::set<std::vector<long>> seen;
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != N)
      throw std::invalid_argument("sample grid point has wrong length");
    if (!normalizePrimitive(p)) throw std::invalid_argument("sample grid contains zero vector");
    if (!seen.insert(p).second)
      throw std::invalid_argument("sample grid contains proportional points");
  }
  SampleGrid grid;
  grid.N = N;
  grid.points = std::move(points);
  return grid;
}

}  // namespace qav
