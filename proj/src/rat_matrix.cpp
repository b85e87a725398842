#include "qav/rat_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qav {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RatMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(r, k);
      if (qav::isZero(x)) continue;
      for (int c = 0; c < other.cols_; ++c) out.at(r, c) += x * other.at(k, c);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
  RatMatrix out = *this;
  for (Rat& x : out.a_) x *= c;
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVec out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Rat& x = at(r, c);
      if (!qav::isZero(x)) out[r] += x * v[c];
    }
  return out;
}

RatVec RatMatrix::column(int c) const {
  RatVec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool RatMatrix::isZero() const {
  for (const Rat& x : a_)
    if (!qav::isZero(x)) return false;
  return true;
}

std::string RatMatrix::toString() const {
  std::string s = "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) s += "; ";
    for (int c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += ratToString(at(r, c));
    }
  }
  s += "]";
  return s;
}

std::vector<int> rowReduce(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!isZero(m.at(r, col))) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Rat inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || isZero(m.at(r, col))) continue;
      Rat factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rankOf(const RatMatrix& m) {
  RatMatrix copy = m;
  return static_cast<int>(rowReduce(copy).size());
}

std::vector<RatVec> nullspaceOf(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rowReduce(r);
  std::vector<bool> isPivot(m.cols(), false);
  for (int p : pivots) isPivot[p] = true;

  std::vector<RatVec> raw;
  for (int free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), free);
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;

  // Normalize the basis itself to reduced echelon rows.
  RatMatrix basis(static_cast<int>(raw.size()), m.cols());
  for (int i = 0; i < basis.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) basis.at(i, c) = raw[i][c];
  rowReduce(basis);
  std::vector<RatVec> out;
  for (int i = 0; i < basis.rows(); ++i) {
    RatVec v(m.cols());
    bool nonzero = false;
    for (int c = 0; c < m.cols(); ++c) {
      v[c] = basis.at(i, c);
      nonzero = nonzero || !isZero(v[c]);
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVec> columnSpaceOf(const RatMatrix& m) {
  RatMatrix t = m.transpose();
  rowReduce(t);
  std::vector<RatVec> out;
  for (int r = 0; r < t.rows(); ++r) {
    RatVec v(t.cols());
    bool nonzero = false;
    for (int c = 0; c < t.cols(); ++c) {
      v[c] = t.at(r, c);
      nonzero = nonzero || !isZero(v[c]);
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

SpanBasis::SpanBasis(int ambientDim) : ambient_(ambientDim) {}

bool SpanBasis::add(RatVec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("span vector dimension mismatch");
  // Reduce v against the current rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& lead = v[pivots_[i]];
    if (isZero(lead)) continue;
    Rat factor = lead;
    for (int c = 0; c < ambient_; ++c) v[c] -= factor * rows_[i][c];
  }
  int pivot = -1;
  for (int c = 0; c < ambient_; ++c)
    if (!isZero(v[c])) {
      pivot = c;
      break;
    }
  if (pivot < 0) return false;
  Rat inv = 1 / v[pivot];
  for (int c = pivot; c < ambient_; ++c) v[c] *= inv;
  // Back-eliminate to keep the basis reduced.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat factor = rows_[i][pivot];
    if (isZero(factor)) continue;
    for (int c = 0; c < ambient_; ++c) rows_[i][c] -= factor * v[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

}  // namespace qav
