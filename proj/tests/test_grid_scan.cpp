#include <doctest.h>

#include "qav/grid_scan.hpp"
#include "qav/sample_grid.hpp"

using namespace qav;

TEST_SUITE_BEGIN("grid-scan");

TEST_CASE("decode is row-major with the last dimension fastest") {
  GridShape shape{{2, 3}};
  CHECK(shape.total() == 6);
  std::vector<long> pt;
  shape.decode(0, pt);
  CHECK(pt == std::vector<long>{0, 0});
  shape.decode(1, pt);
  CHECK(pt == std::vector<long>{0, 1});
  shape.decode(3, pt);
  CHECK(pt == std::vector<long>{1, 0});
  shape.decode(5, pt);
  CHECK(pt == std::vector<long>{1, 2});
}

TEST_CASE("parallel scan returns the serial first violation") {
  DetRng rng(123);
  for (int round = 0; round < 200; ++round) {
    std::uint64_t total = static_cast<std::uint64_t>(rng.nextInt(1, 5000));
    // Roughly one violation per 700 points; many rounds have none.
    std::vector<char> bad(total, 0);
    for (std::uint64_t i = 0; i < total; ++i) bad[i] = rng.nextInt(0, 700) == 0;
    auto holds = [&](std::uint64_t i) { return !bad[i]; };
    auto serial = scanFirstViolationSerial(total, holds);
    for (int threads : {0, 1, 2, 4}) {
      auto parallel = scanFirstViolation(total, holds, threads);
      CHECK(parallel == serial);
    }
  }
}

TEST_CASE("empty grid and all-holds grids") {
  auto holds = [](std::uint64_t) { return true; };
  CHECK(!scanFirstViolationSerial(0, holds));
  CHECK(!scanFirstViolation(0, holds, 4));
  CHECK(!scanFirstViolation(1000, holds, 4));
}

TEST_CASE("default sample grids are deterministic and primitive") {
  SampleGrid a = defaultSampleGrid(2);
  SampleGrid b = defaultSampleGrid(2);
  CHECK(a.points == b.points);
  CHECK(a.points.size() == 40);  // 8 primitives in [-2,2]^2 up to sign, plus 32 random
  for (auto point : a.points) {
    std::vector<long> copy = point;
    CHECK(normalizePrimitive(copy));
    CHECK(copy == point);
  }
  CHECK(defaultSampleGrid(2, 1).points != defaultSampleGrid(2, 2).points);

  // One dimension has exactly one direction; the generator must not spin.
  SampleGrid line = defaultSampleGrid(1);
  CHECK(line.points == std::vector<std::vector<long>>{{1}});
  CHECK(randomSampleGrid(1, 32).points.size() == 1);
}

TEST_SUITE_END();
