#include "qav/operator_zoo.hpp"

#include <stdexcept>

namespace qav {

namespace {

MultiIndex unitIndex(int N, int i) {
  MultiIndex a(N, 0);
  a[i] = 1;
  return a;
}

MultiIndex pairIndexAlpha(int N, int i, int j) {
  MultiIndex a(N, 0);
  ++a[i];
  ++a[j];
  return a;
}

// (i <= j) pairs in lexicographic order.
int symPairIndex(int N, int i, int j) {
  int idx = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw std::logic_error("bad symmetric pair");
}

// (i < j) pairs in lexicographic order.
int skewPairIndex(int N, int i, int j) {
  int idx = 0;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw std::logic_error("bad skew pair");
}

void requirePositive(const char* what, int value) {
  if (value <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

long getParam(const std::map<std::string, long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing operator parameter '" + key + "'");
  return it->second;
}

}  // namespace

HomOperator makeGrad(int N, int m) {
  requirePositive("N", N);
  requirePositive("m", m);
  HomOperator op;
  op.name = "grad";
  op.baseDim = N;
  op.inDim = m;
  op.outDim = N * m;
  op.order = 1;
  for (int i = 0; i < N; ++i) {
    RatMatrix mat(op.outDim, op.inDim);
    for (int j = 0; j < m; ++j) mat.at(i * m + j, j) = 1;
    op.terms.emplace(unitIndex(N, i), std::move(mat));
  }
  return op;
}

HomOperator makeHessian(int N, int m) {
  requirePositive("N", N);
  requirePositive("m", m);
  HomOperator op;
  op.name = "hessian";
  op.baseDim = N;
  op.inDim = m;
  op.outDim = N * (N + 1) / 2 * m;
  op.order = 2;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      RatMatrix mat(op.outDim, op.inDim);
      int p = symPairIndex(N, i, j);
      for (int k = 0; k < m; ++k) mat.at(p * m + k, k) = 1;
      op.terms.emplace(pairIndexAlpha(N, i, j), std::move(mat));
    }
  return op;
}

HomOperator makeCurl(int N, int m) {
  requirePositive("N", N);
  requirePositive("m", m);
  if (N < 2) throw std::invalid_argument("curl needs N >= 2");
  HomOperator op;
  op.name = "curl";
  op.baseDim = N;
  op.inDim = N * m;
  op.outDim = N * (N - 1) / 2 * m;
  op.order = 1;
  for (int v = 0; v < N; ++v) op.terms.emplace(unitIndex(N, v), RatMatrix(op.outDim, op.inDim));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int c = 0; c < m; ++c) {
        int row = skewPairIndex(N, i, j) * m + c;
        op.terms.at(unitIndex(N, i)).at(row, j * m + c) = 1;
        op.terms.at(unitIndex(N, j)).at(row, i * m + c) = -1;
      }
  return op;
}

HomOperator makeDiv(int N, int d) {
  requirePositive("N", N);
  requirePositive("d", d);
  HomOperator op;
  op.name = "div";
  op.baseDim = N;
  op.inDim = d * N;
  op.outDim = d;
  op.order = 1;
  for (int j = 0; j < N; ++j) {
    RatMatrix mat(op.outDim, op.inDim);
    for (int i = 0; i < d; ++i) mat.at(i, i * N + j) = 1;
    op.terms.emplace(unitIndex(N, j), std::move(mat));
  }
  return op;
}

HomOperator makeDivPotential(int N, int d) {
  requirePositive("N", N);
  requirePositive("d", d);
  if (N < 2) throw std::invalid_argument("div-potential needs N >= 2");
  HomOperator rowPotential = adjointOf(makeCurl(N, 1));
  HomOperator op = rowPotential;
  for (int i = 1; i < d; ++i) op = blockDiag(op, rowPotential);
  op.name = "div-potential";
  return op;
}

HomOperator makeDivCurlAnnihilator(int N, int m) {
  HomOperator op = blockDiag(makeCurl(N, m), adjointOf(makeGrad(N, m)));
  op.name = "divcurl-annihilator";
  return op;
}

HomOperator makeDivCurlPotential(int N, int m) {
  HomOperator op = blockDiag(makeGrad(N, m), adjointOf(makeCurl(N, m)));
  op.name = "divcurl-potential";
  return op;
}

std::vector<ZooParamSpec> zooOperatorList() {
  return {
      {"grad", {"N", "m"}, "gradient of m-component fields, output N x m row-major"},
      {"hessian", {"N", "m"}, "second gradient, output indexed (i <= j, component)"},
      {"curl", {"N", "m"}, "skew pair family d_i V_jc - d_j V_ic annihilating grad"},
      {"div", {"N", "d"}, "row-wise divergence of d x N matrix fields"},
      {"div-potential", {"N", "d"}, "potential of div (rows pointwise orthogonal to xi)"},
      {"divcurl-annihilator", {"N", "m"}, "paired operator (curl, adjoint grad)"},
      {"divcurl-potential", {"N", "m"}, "paired potential (grad, adjoint curl)"},
  };
}

HomOperator zooOperator(const std::string& name, const std::map<std::string, long>& params) {
  auto N = [&] { return static_cast<int>(getParam(params, "N")); };
  auto m = [&] { return static_cast<int>(getParam(params, "m")); };
  auto d = [&] { return static_cast<int>(getParam(params, "d")); };
  if (name == "grad") return makeGrad(N(), m());
  if (name == "hessian") return makeHessian(N(), m());
  if (name == "curl") return makeCurl(N(), m());
  if (name == "div") return makeDiv(N(), d());
  if (name == "div-potential") return makeDivPotential(N(), d());
  if (name == "divcurl-annihilator") return makeDivCurlAnnihilator(N(), m());
  if (name == "divcurl-potential") return makeDivCurlPotential(N(), m());
  throw std::invalid_argument("unknown zoo operator '" + name + "'");
}

}  // namespace qav
