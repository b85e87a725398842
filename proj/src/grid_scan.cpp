#include "qav/grid_scan.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace qav {

std::uint64_t GridShape::total() const {
  std::uint64_t t = 1;
  for (long s : sizes) {
    if (s <= 0) throw std::invalid_argument("grid dimension must be positive");
    t *= static_cast<std::uint64_t>(s);
  }
  return t;
}

void GridShape::decode(std::uint64_t index, std::vector<long>& out) const {
  out.resize(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    std::uint64_t s = static_cast<std::uint64_t>(sizes[i]);
    out[i] = static_cast<long>(index % s);
    index /= s;
  }
}

std::optional<std::uint64_t> scanFirstViolationSerial(std::uint64_t total, const HoldsFn& holds) {
  for (std::uint64_t i = 0; i < total; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

std::optional<std::uint64_t> scanFirstViolation(std::uint64_t total, const HoldsFn& holds,
                                                int threads) {
  if (threads == 1 || total < 2) return scanFirstViolationSerial(total, holds);
  if (threads <= 0) threads = omp_get_max_threads();

  std::atomic<std::uint64_t> best{UINT64_MAX};
  const std::uint64_t chunk =
      std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(threads) * 16));
  const std::int64_t nChunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < nChunks; ++c) {
    std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) break;
      if (!holds(i)) {
        std::uint64_t prev = best.load(std::memory_order_relaxed);
        while (i < prev && !best.compare_exchange_weak(prev, i)) {
        }
        break;
      }
    }
  }
  std::uint64_t found = best.load();
  if (found == UINT64_MAX) return std::nullopt;
  return found;
}

}  // namespace qav
