#include "qav/probes.hpp"

#include <omp.h>

#include <stdexcept>

namespace qav {

namespace {

std::vector<int> gridRanks(const HomOperator& op, const SampleGrid& grid, int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  const int n = static_cast<int>(grid.points.size());
  std::vector<int> ranks(n, -1);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (int i = 0; i < n; ++i) ranks[i] = rankOf(symbolAtInt(op, grid.points[i]));
  return ranks;
}

}  // namespace

RankProbeReport constantRankProbe(const HomOperator& op, const SampleGrid& grid, int threads) {
  if (grid.points.empty()) throw std::invalid_argument("constantRankProbe: empty grid");
  if (grid.N != op.baseDim)
    throw std::invalid_argument("constantRankProbe: grid dimension differs from baseDim");
  std::vector<int> ranks = gridRanks(op, grid, threads);
  RankProbeReport report;
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    if (ranks[i] != ranks[0]) {
      report.constantRank = false;
      report.witnessXi1 = grid.points[0];
      report.witnessXi2 = grid.points[i];
      report.rank1 = ranks[0];
      report.rank2 = ranks[i];
      return report;
    }
  }
  report.constantRank = true;
  report.commonRank = ranks[0];
  return report;
}

SpanProbeReport spanningProbe(const HomOperator& op, const SampleGrid& grid, ConeSide side) {
  if (grid.points.empty()) throw std::invalid_argument("spanningProbe: empty grid");
  if (grid.N != op.baseDim)
    throw std::invalid_argument("spanningProbe: grid dimension differs from baseDim");
  const int ambient = side == ConeSide::KernelOfA ? op.inDim : op.outDim;
  SpanBasis span(ambient);
  for (const auto& point : grid.points) {
    RatVec xi = ratVecOfLongs(point);
    std::vector<RatVec> vectors = side == ConeSide::KernelOfA
                                      ? kernelSample(op, xi).kernelBasis
                                      : imageSample(op, xi);
    for (auto& v : vectors) span.add(std::move(v));
    if (span.dim() == ambient) break;
  }
  return {span.dim() == ambient, span.dim(), ambient};
}

PairCheckReport verifyPotentialPair(const HomOperator& a, const HomOperator& b,
                                    const SampleGrid& grid, int threads) {
  if (a.inDim != b.outDim)
    throw std::invalid_argument("verifyPotentialPair: A.inDim must equal B.outDim");
  if (a.baseDim != b.baseDim)
    throw std::invalid_argument("verifyPotentialPair: base dimensions differ");
  if (grid.points.empty()) throw std::invalid_argument("verifyPotentialPair: empty grid");
  if (grid.N != a.baseDim)
    throw std::invalid_argument("verifyPotentialPair: grid dimension differs from baseDim");

  PairCheckReport report;

  // (i) fully symbolic composition A[xi] * B[xi], expanded as polynomials.
  auto symA = symbolPolys(a);
  auto symB = symbolPolys(b);
  report.compositionZero = true;
  for (int r = 0; r < a.outDim && report.compositionZero; ++r)
    for (int c = 0; c < b.inDim && report.compositionZero; ++c) {
      SparsePoly entry(a.baseDim);
      for (int k = 0; k < a.inDim; ++k) entry += symA[r][k] * symB[k][c];
      if (!entry.isZero()) {
        report.compositionZero = false;
        report.entryRow = r;
        report.entryCol = c;
        const auto& [alpha, coeff] = *entry.terms().begin();
        report.monomial = alpha;
        report.coeff = coeff;
      }
    }

  // (ii) rank complement on every grid frequency.
  std::vector<int> ranksA = gridRanks(a, grid, threads);
  std::vector<int> ranksB = gridRanks(b, grid, threads);
  report.ranksComplement = true;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    if (ranksB[i] != a.inDim - ranksA[i]) {
      report.ranksComplement = false;
      report.witnessXi = grid.points[i];
      report.rankA = ranksA[i];
      report.rankB = ranksB[i];
      break;
    }
  }

  report.pass = report.compositionZero && report.ranksComplement;
  return report;
}

}  // namespace qav
