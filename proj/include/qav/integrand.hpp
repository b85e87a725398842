#pragma once

#include <map>
#include <string>
#include <vector>

#include "qav/sparse_poly.hpp"

namespace qav {

// Polynomial integrand f : R^d -> R with exact coefficients.
struct PolyIntegrand {
  int d = 0;
  SparsePoly poly{0};
  int degree = -1;  // cached total degree, -1 for the zero polynomial
};

PolyIntegrand makeIntegrand(SparsePoly poly);

// Splits into homogeneous components (constant part first); reassembles
// exactly.
std::vector<PolyIntegrand> homogeneousParts(const PolyIntegrand& f);

PolyIntegrand shiftIntegrand(const PolyIntegrand& f, const RatVec& offset);

// r-th derivative of f as a symmetric multilinear form. Components are
// stored for sorted index tuples only; application sums over the distinct
// arrangements of each tuple.
class DerivativeTensor {
 public:
  static DerivativeTensor of(const PolyIntegrand& f, int r);

  int order() const { return r_; }
  int dim() const { return d_; }
  bool isZeroTensor() const { return comps_.empty(); }
  const std::map<std::vector<int>, SparsePoly>& components() const { return comps_; }

  // D^r f(x)[v_1, ..., v_r]; multilinear and symmetric in the vectors.
  Rat apply(const RatVec& x, const std::vector<RatVec>& vectors) const;

  // Same contraction left as a polynomial in x.
  SparsePoly applyPoly(const std::vector<RatVec>& vectors) const;

 private:
  DerivativeTensor(int r, int d) : r_(r), d_(d) {}
  int r_, d_;
  std::map<std::vector<int>, SparsePoly> comps_;
};

}  // namespace qav
