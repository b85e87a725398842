#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace qav {

// Mixed-radix shape for tensor-product grids. Linear indices enumerate points
// row-major: the last dimension varies fastest.
struct GridShape {
  std::vector<long> sizes;

  std::uint64_t total() const;
  void decode(std::uint64_t index, std::vector<long>& out) const;
};

using HoldsFn = std::function<bool(std::uint64_t)>;

// Serial reference: the smallest index where holds() is false, scanning in
// order with early exit.
std::optional<std::uint64_t> scanFirstViolationSerial(std::uint64_t total, const HoldsFn& holds);

// OpenMP scan over index chunks. Returns the same minimal violating index as
// the serial reference for any thread count; chunks beyond the current best
// are skipped. threads <= 0 uses the OpenMP default.
std::optional<std::uint64_t> scanFirstViolation(std::uint64_t total, const HoldsFn& holds,
                                                int threads = 0);

}  // namespace qav
