#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qav {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0001u;

// Deterministic random source. Bounded draws use rejection sampling on the
// raw 64-bit stream so results do not depend on the standard library's
// distribution implementations.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long nextInt(long lo, long hi);  // inclusive range
  bool nextBool() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Finite frequency sample: nonzero primitive integer vectors, pairwise
// non-proportional (normalized so the first nonzero entry is positive).
struct SampleGrid {
  int N = 0;
  std::vector<std::vector<long>> points;
};

// Divides out the gcd and flips the sign so the first nonzero entry is
// positive. Returns false for the zero vector.
bool normalizePrimitive(std::vector<long>& v);

// All primitive vectors with entries in [-2,2] (up to sign, sorted), plus 32
// seeded pseudo-random primitive vectors with entries in [-9,9].
SampleGrid defaultSampleGrid(int N, std::uint64_t seed = kDefaultSeed);

// `count` seeded pseudo-random primitive vectors with entries in [-9,9].
SampleGrid randomSampleGrid(int N, int count, std::uint64_t seed = kDefaultSeed);

// Validates invariants (throws std::invalid_argument on violation).
SampleGrid gridFromPoints(int N, std::vector<std::vector<long>> points);

}  // namespace qav
