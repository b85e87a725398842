#pragma once

#include <map>
#include <string>
#include <vector>

#include "qav/multi_index.hpp"
#include "qav/rat_matrix.hpp"
#include "qav/sparse_poly.hpp"

namespace qav {

// Homogeneous constant-coefficient differential operator, stored by its
// coefficient matrices indexed by multi-indices of one fixed order.
struct HomOperator {
  std::string name;
  int baseDim = 0;  // number of base variables N
  int inDim = 0;
  int outDim = 0;
  int order = 0;
  std::map<MultiIndex, RatMatrix> terms;

  bool operator==(const HomOperator&) const = default;
};

// Homogeneity, dimension and non-triviality checks; throws
// std::invalid_argument with a field diagnostic.
void validateOperator(const HomOperator& op);

// Fourier symbol: sum over terms of xi^alpha * A_alpha.
RatMatrix symbolAt(const HomOperator& op, const RatVec& xi);
RatMatrix symbolAtInt(const HomOperator& op, const std::vector<long>& xi);

// Symbol as a polynomial matrix in the base variables (entry (r,c) is a
// homogeneous polynomial of degree `order`).
std::vector<std::vector<SparsePoly>> symbolPolys(const HomOperator& op);

// Adjoint: transposed coefficients scaled by (-1)^order; involution.
HomOperator adjointOf(const HomOperator& op);

// Direct sum acting on stacked inputs/outputs. Requires equal base dimension
// and equal order (the result must stay homogeneous).
HomOperator blockDiag(const HomOperator& a, const HomOperator& b);

struct FrequencySample {
  RatVec xi;
  std::vector<RatVec> kernelBasis;  // canonical echelon basis of ker symbol
};

FrequencySample kernelSample(const HomOperator& op, const RatVec& xi);  // xi != 0
std::vector<RatVec> imageSample(const HomOperator& op, const RatVec& xi);  // xi != 0

}  // namespace qav
