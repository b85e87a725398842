#pragma once

#include <vector>

#include "qav/rational.hpp"

namespace qav {

// Dense matrix of exact rationals. All reductions are fraction-free in spirit
// but simply use rational arithmetic; pivots are the first nonzero entries,
// which keeps every result canonical and reproducible.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix scaled(const Rat& c) const;
  RatVec apply(const RatVec& v) const;
  RatVec column(int c) const;
  bool isZero() const;
  bool operator==(const RatMatrix& other) const = default;

  std::string toString() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rowReduce(RatMatrix& m);

int rankOf(const RatMatrix& m);

// Canonical basis of ker m: the kernel's reduced echelon row basis (each
// basis vector leads with 1). Empty when m is injective.
std::vector<RatVec> nullspaceOf(const RatMatrix& m);

// Canonical basis of the column space (reduced echelon rows of m^T).
std::vector<RatVec> columnSpaceOf(const RatMatrix& m);

// Incremental span tracker; rows are kept reduced so dim() is exact.
class SpanBasis {
 public:
  explicit SpanBasis(int ambientDim);
  // Returns true when v enlarged the span.
  bool add(RatVec v);
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambientDim() const { return ambient_; }

 private:
  int ambient_;
  std::vector<RatVec> rows_;   // reduced, sorted by pivot
  std::vector<int> pivots_;
};

}  // namespace qav
