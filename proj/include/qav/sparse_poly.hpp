#pragma once

#include <map>
#include <string>

#include "qav/multi_index.hpp"
#include "qav/rational.hpp"

namespace qav {

// Sparse multivariate polynomial over the rationals. Terms are kept in a
// lexicographically ordered map with no zero coefficients, so iteration order
// and serialization are deterministic.
class SparsePoly {
 public:
  explicit SparsePoly(int variableCount);

  static SparsePoly constant(int variableCount, const Rat& c);
  static SparsePoly variable(int variableCount, int index);
  static SparsePoly monomial(int variableCount, MultiIndex alpha, const Rat& c);

  int variableCount() const { return vars_; }
  bool isZero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int totalDegree() const;
  // Largest exponent of one variable across all terms.
  int degreeIn(int variable) const;
  const std::map<MultiIndex, Rat>& terms() const { return terms_; }
  Rat coefficient(const MultiIndex& alpha) const;

  void addTerm(const MultiIndex& alpha, const Rat& c);
  // *this += c * p
  void addScaled(const SparsePoly& p, const Rat& c);

  SparsePoly& operator+=(const SparsePoly& p);
  SparsePoly& operator-=(const SparsePoly& p);
  SparsePoly& operator*=(const Rat& c);
  SparsePoly operator+(const SparsePoly& p) const;
  SparsePoly operator-(const SparsePoly& p) const;
  SparsePoly operator*(const SparsePoly& p) const;
  SparsePoly operator*(const Rat& c) const;
  SparsePoly operator-() const;
  bool operator==(const SparsePoly& p) const = default;

  Rat eval(const RatVec& point) const;
  SparsePoly diff(int variable) const;
  // p(x + offset), expanded exactly.
  SparsePoly shiftArgument(const RatVec& offset) const;
  // degree -> homogeneous component (only nonzero components appear).
  std::map<int, SparsePoly> homogeneousParts() const;

  std::string toString() const;

 private:
  int vars_;
  std::map<MultiIndex, Rat> terms_;
};

}  // namespace qav
