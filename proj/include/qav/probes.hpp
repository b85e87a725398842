#pragma once

#include <optional>

#include "qav/hom_operator.hpp"
#include "qav/sample_grid.hpp"

namespace qav {

// Equal rank across the grid is evidence, not proof; a rank mismatch is an
// exact refutation.
struct RankProbeReport {
  bool constantRank = false;
  int commonRank = -1;
  std::vector<long> witnessXi1, witnessXi2;
  int rank1 = -1, rank2 = -1;
};

RankProbeReport constantRankProbe(const HomOperator& op, const SampleGrid& grid, int threads = 0);

enum class ConeSide { KernelOfA, ImageOfB };

// spans == true is definitive; false only says the grid did not exhibit a
// spanning set.
struct SpanProbeReport {
  bool spans = false;
  int spanDim = 0;
  int ambientDim = 0;
};

SpanProbeReport spanningProbe(const HomOperator& op, const SampleGrid& grid, ConeSide side);

struct PairCheckReport {
  bool pass = false;
  bool compositionZero = false;  // symbolic product A[xi] * B[xi] == 0
  bool ranksComplement = false;  // rank B[xi] == A.inDim - rank A[xi] on the grid
  // Witness for a nonzero composition entry.
  int entryRow = -1, entryCol = -1;
  MultiIndex monomial;
  Rat coeff;
  // Witness frequency for a rank mismatch.
  std::vector<long> witnessXi;
  int rankA = -1, rankB = -1;
};

// Exact symbolic composition test plus grid rank complement check.
PairCheckReport verifyPotentialPair(const HomOperator& a, const HomOperator& b,
                                    const SampleGrid& grid, int threads = 0);

}  // namespace qav
