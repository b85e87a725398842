#include "qav/integrand.hpp"

#include <algorithm>
#include <stdexcept>

namespace qav {

PolyIntegrand makeIntegrand(SparsePoly poly) {
  PolyIntegrand f;
  f.d = poly.variableCount();
  f.degree = poly.totalDegree();
  f.poly = std::move(poly);
  return f;
}

std::vector<PolyIntegrand> homogeneousParts(const PolyIntegrand& f) {
  std::vector<PolyIntegrand> parts;
  for (auto& [deg, part] : f.poly.homogeneousParts()) parts.push_back(makeIntegrand(part));
  return parts;
}

PolyIntegrand shiftIntegrand(const PolyIntegrand& f, const RatVec& offset) {
  return makeIntegrand(f.poly.shiftArgument(offset));
}

namespace {

void buildComponents(const SparsePoly& p, int depth, int r, int startVar, std::vector<int>& tuple,
                     std::map<std::vector<int>, SparsePoly>& out) {
  if (p.isZero()) return;
  if (depth == r) {
    out.emplace(tuple, p);
    return;
  }
  for (int v = startVar; v < p.variableCount(); ++v) {
    tuple.push_back(v);
    buildComponents(p.diff(v), depth + 1, r, v, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

DerivativeTensor DerivativeTensor::of(const PolyIntegrand& f, int r) {
  if (r < 1) throw std::invalid_argument("derivative order must be >= 1");
  DerivativeTensor t(r, f.d);
  std::vector<int> tuple;
  buildComponents(f.poly, 0, r, 0, tuple, t.comps_);
  return t;
}

Rat DerivativeTensor::apply(const RatVec& x, const std::vector<RatVec>& vectors) const {
  if (static_cast<int>(vectors.size()) != r_)
    throw std::invalid_argument("applyTensor: expected " + std::to_string(r_) + " vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != d_)
      throw std::invalid_argument("applyTensor: vector length differs from d");
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("applyTensor: point length differs from d");
  Rat acc(0);
  std::vector<int> perm;
  Rat weight, prod;
  for (const auto& [tuple, poly] : comps_) {
    weight = 0;
    perm = tuple;
    do {
      prod = 1;
      for (int j = 0; j < r_; ++j) {
        const Rat& e = vectors[j][perm[j]];
        if (isZero(e)) {
          prod = 0;
          break;
        }
        prod *= e;
      }
      weight += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!isZero(weight)) acc += weight * poly.eval(x);
  }
  return acc;
}

SparsePoly DerivativeTensor::applyPoly(const std::vector<RatVec>& vectors) const {
  if (static_cast<int>(vectors.size()) != r_)
    throw std::invalid_argument("applyTensor: expected " + std::to_string(r_) + " vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != d_)
      throw std::invalid_argument("applyTensor: vector length differs from d");
  SparsePoly acc(d_);
  std::vector<int> perm;
  Rat weight, prod;
  for (const auto& [tuple, poly] : comps_) {
    weight = 0;
    perm = tuple;
    do {
      prod = 1;
      for (int j = 0; j < r_; ++j) {
        const Rat& e = vectors[j][perm[j]];
        if (isZero(e)) {
          prod = 0;
          break;
        }
        prod *= e;
      }
      weight += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!isZero(weight)) acc.addScaled(poly, weight);
  }
  return acc;
}

}  // namespace qav
