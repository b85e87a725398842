#include "qav/hom_operator.hpp"

#include <stdexcept>

namespace qav {

void validateOperator(const HomOperator& op) {
  if (op.baseDim <= 0) throw std::invalid_argument("operator: baseDim must be positive");
  if (op.inDim <= 0) throw std::invalid_argument("operator: inDim must be positive");
  if (op.outDim <= 0) throw std::invalid_argument("operator: outDim must be positive");
  if (op.order <= 0) throw std::invalid_argument("operator: order must be positive");
  if (op.terms.empty()) throw std::invalid_argument("operator: no coefficient terms");
  bool nonzero = false;
  int index = 0;
  for (const auto& [alpha, mat] : op.terms) {
    if (static_cast<int>(alpha.size()) != op.baseDim)
      throw std::invalid_argument("operator: term " + std::to_string(index) +
                                  " multi-index length differs from baseDim");
    if (static_cast<int>(orderOf(alpha)) != op.order)
      throw std::invalid_argument("operator: non-homogeneous term set (term " +
                                  std::to_string(index) + " has order " +
                                  std::to_string(orderOf(alpha)) + ", expected " +
                                  std::to_string(op.order) + ")");
    if (mat.rows() != op.outDim || mat.cols() != op.inDim)
      throw std::invalid_argument("operator: term " + std::to_string(index) +
                                  " matrix has shape " + std::to_string(mat.rows()) + "x" +
                                  std::to_string(mat.cols()) + ", expected " +
                                  std::to_string(op.outDim) + "x" + std::to_string(op.inDim));
    nonzero = nonzero || !mat.isZero();
    ++index;
  }
  if (!nonzero) throw std::invalid_argument("operator: all coefficient matrices are zero");
}

RatMatrix symbolAt(const HomOperator& op, const RatVec& xi) {
  if (static_cast<int>(xi.size()) != op.baseDim)
    throw std::invalid_argument("symbol: frequency length differs from baseDim");
  RatMatrix out(op.outDim, op.inDim);
  for (const auto& [alpha, mat] : op.terms) {
    Rat w(1);
    for (int v = 0; v < op.baseDim; ++v)
      if (alpha[v] > 0) w *= ratPow(xi[v], alpha[v]);
    if (isZero(w)) continue;
    for (int r = 0; r < op.outDim; ++r)
      for (int c = 0; c < op.inDim; ++c) {
        const Rat& x = mat.at(r, c);
        if (!isZero(x)) out.at(r, c) += w * x;
      }
  }
  return out;
}

RatMatrix symbolAtInt(const HomOperator& op, const std::vector<long>& xi) {
  return symbolAt(op, ratVecOfLongs(xi));
}

std::vector<std::vector<SparsePoly>> symbolPolys(const HomOperator& op) {
  std::vector<std::vector<SparsePoly>> out(
      op.outDim, std::vector<SparsePoly>(op.inDim, SparsePoly(op.baseDim)));
  for (const auto& [alpha, mat] : op.terms)
    for (int r = 0; r < op.outDim; ++r)
      for (int c = 0; c < op.inDim; ++c) {
        const Rat& x = mat.at(r, c);
        if (!isZero(x)) out[r][c].addTerm(alpha, x);
      }
  return out;
}

HomOperator adjointOf(const HomOperator& op) {
  HomOperator adj;
  adj.name = op.name.empty() ? "adjoint" : "adjoint(" + op.name + ")";
  adj.baseDim = op.baseDim;
  adj.inDim = op.outDim;
  adj.outDim = op.inDim;
  adj.order = op.order;
  Rat sign = (op.order % 2 == 0) ? Rat(1) : Rat(-1);
  for (const auto& [alpha, mat] : op.terms) adj.terms.emplace(alpha, mat.transpose().scaled(sign));
  return adj;
}

HomOperator blockDiag(const HomOperator& a, const HomOperator& b) {
  if (a.baseDim != b.baseDim)
    throw std::invalid_argument("blockDiag: base dimensions differ");
  if (a.order != b.order)
    throw std::invalid_argument("blockDiag: orders differ (result would not be homogeneous)");
  HomOperator out;
  out.name = "pair(" + a.name + ", " + b.name + ")";
  out.baseDim = a.baseDim;
  out.inDim = a.inDim + b.inDim;
  out.outDim = a.outDim + b.outDim;
  out.order = a.order;
  auto slot = [&](const MultiIndex& alpha) -> RatMatrix& {
    auto it = out.terms.find(alpha);
    if (it == out.terms.end())
      it = out.terms.emplace(alpha, RatMatrix(out.outDim, out.inDim)).first;
    return it->second;
  };
  for (const auto& [alpha, mat] : a.terms) {
    RatMatrix& m = slot(alpha);
    for (int r = 0; r < a.outDim; ++r)
      for (int c = 0; c < a.inDim; ++c) m.at(r, c) = mat.at(r, c);
  }
  for (const auto& [alpha, mat] : b.terms) {
    RatMatrix& m = slot(alpha);
    for (int r = 0; r < b.outDim; ++r)
      for (int c = 0; c < b.inDim; ++c) m.at(a.outDim + r, a.inDim + c) = mat.at(r, c);
  }
  return out;
}

FrequencySample kernelSample(const HomOperator& op, const RatVec& xi) {
  if (isZeroVec(xi)) throw std::invalid_argument("kernelSample: zero frequency");
  FrequencySample s;
  s.xi = xi;
  s.kernelBasis = nullspaceOf(symbolAt(op, xi));
  return s;
}

std::vector<RatVec> imageSample(const HomOperator& op, const RatVec& xi) {
  if (isZeroVec(xi)) throw std::invalid_argument("imageSample: zero frequency");
  return columnSpaceOf(symbolAt(op, xi));
}

}  // namespace qav
