#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace qav {

// Exponent vector; length is fixed by the surrounding context (variable count
// of a polynomial, base dimension of an operator). std::vector's lexicographic
// ordering doubles as the deterministic term order.
using MultiIndex = std::vector<std::uint32_t>;

inline std::uint32_t orderOf(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), std::uint32_t{0});
}

}  // namespace qav
