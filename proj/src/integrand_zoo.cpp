#include "qav/integrand_zoo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qav {

namespace {

int permutationSign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

long getIntParam(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing integrand parameter '" + key + "'");
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw std::invalid_argument("integrand parameter '" + key + "' is not an integer");
  }
}

// "23" -> {1, 2}: digit string of 1-based indices.
std::vector<int> getIndexList(const std::map<std::string, std::string>& params,
                              const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing integrand parameter '" + key + "'");
  std::vector<int> out;
  for (char ch : it->second) {
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("integrand parameter '" + key + "' must be 1-9 digits");
    out.push_back(ch - '1');
  }
  return out;
}

}  // namespace

PolyIntegrand makeDet(int n) {
  if (n <= 0) throw std::invalid_argument("det: n must be positive");
  const int d = n * n;
  SparsePoly p(d);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MultiIndex alpha(d, 0);
    for (int i = 0; i < n; ++i) ++alpha[i * n + perm[i]];
    p.addTerm(alpha, Rat(permutationSign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return makeIntegrand(std::move(p));
}

PolyIntegrand makeMinor(int R, int C, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (R <= 0 || C <= 0) throw std::invalid_argument("minor: matrix dimensions must be positive");
  if (rows.empty() || rows.size() != cols.size())
    throw std::invalid_argument("minor: row and column sets must have equal nonzero size");
  for (int r : rows)
    if (r < 0 || r >= R) throw std::invalid_argument("minor: row index out of range");
  for (int c : cols)
    if (c < 0 || c >= C) throw std::invalid_argument("minor: column index out of range");
  const int k = static_cast<int>(rows.size());
  const int d = R * C;
  SparsePoly p(d);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MultiIndex alpha(d, 0);
    for (int i = 0; i < k; ++i) ++alpha[rows[i] * C + cols[perm[i]]];
    p.addTerm(alpha, Rat(permutationSign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return makeIntegrand(std::move(p));
}

PolyIntegrand makeDot(int d) {
  if (d <= 0) throw std::invalid_argument("dot: d must be positive");
  SparsePoly p(2 * d);
  for (int i = 0; i < d; ++i) {
    MultiIndex alpha(2 * d, 0);
    ++alpha[i];
    ++alpha[d + i];
    p.addTerm(alpha, Rat(1));
  }
  return makeIntegrand(std::move(p));
}

PolyIntegrand makeBcoL() {
  // Slot layout (pair major, component minor): xx = 0..2, xy = 3..5, yy = 6..8.
  SparsePoly p(9);
  std::vector<int> perm{0, 1, 2};
  do {
    MultiIndex alpha(9, 0);
    ++alpha[0 + perm[0]];
    ++alpha[3 + perm[1]];
    ++alpha[6 + perm[2]];
    p.addTerm(alpha, Rat(permutationSign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return makeIntegrand(std::move(p));
}

PolyIntegrand makeNormSquared(int d) {
  if (d <= 0) throw std::invalid_argument("normSquared: d must be positive");
  SparsePoly p(d);
  for (int i = 0; i < d; ++i) {
    MultiIndex alpha(d, 0);
    alpha[i] = 2;
    p.addTerm(alpha, Rat(1));
  }
  return makeIntegrand(std::move(p));
}

std::vector<IntegrandZooSpec> zooIntegrandList() {
  return {
      {"det", {"n"}, "determinant of an n x n matrix argument (row-major)"},
      {"minor", {"R", "C", "rows", "cols"},
       "minor of an R x C matrix argument; rows/cols are digit strings of 1-based indices"},
      {"dot", {"d"}, "pairing a . b on R^(2d)"},
      {"bcoL", {}, "signed S3 sum over symmetric-Hessian slots, d = 9"},
      {"normSquared", {"d"}, "squared euclidean norm"},
  };
}

PolyIntegrand zooIntegrand(const std::string& name,
                           const std::map<std::string, std::string>& params) {
  if (name == "det") return makeDet(static_cast<int>(getIntParam(params, "n")));
  if (name == "minor")
    return makeMinor(static_cast<int>(getIntParam(params, "R")),
                     static_cast<int>(getIntParam(params, "C")), getIndexList(params, "rows"),
                     getIndexList(params, "cols"));
  if (name == "dot") return makeDot(static_cast<int>(getIntParam(params, "d")));
  if (name == "bcoL") return makeBcoL();
  if (name == "normSquared") return makeNormSquared(static_cast<int>(getIntParam(params, "d")));
  throw std::invalid_argument("unknown zoo integrand '" + name + "'");
}

}  // namespace qav
