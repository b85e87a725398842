#pragma once

#include <map>
#include <string>
#include <vector>

#include "qav/hom_operator.hpp"

namespace qav {

// Gradient on m-component fields; output is the N x m matrix (d_i u_j) in
// row-major layout, index (i,j) -> i*m + j.
HomOperator makeGrad(int N, int m);

// Second gradient on m-component fields; output coordinates are (i <= j, k)
// lexicographic: symmetric pair major, component minor.
HomOperator makeHessian(int N, int m);

// Skew pair family annihilating the gradient: rows (i < j, c) carry
// d_i V_{jc} - d_j V_{ic} on N x m matrix fields.
HomOperator makeCurl(int N, int m);

// Row-wise divergence on d x N matrix fields (row-major), (div V)_i =
// sum_j d_j V_{ij}. d = 1 gives the divergence of a vector field.
HomOperator makeDiv(int N, int d);

// Potential of makeDiv: d independent copies of adjoint(curl) feeding the
// rows, so every output row is pointwise orthogonal to the frequency.
HomOperator makeDivPotential(int N, int d);

// Paired operator (A1, B1*) with A1 = curl and B1 = grad on N x m fields;
// annihilates pairs (curl-free-image, divergence-free) directions.
HomOperator makeDivCurlAnnihilator(int N, int m);

// Potential of the paired operator: blockDiag(grad, adjoint(curl)).
HomOperator makeDivCurlPotential(int N, int m);

struct ZooParamSpec {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

// Names and parameters accepted by zooOperator.
std::vector<ZooParamSpec> zooOperatorList();

HomOperator zooOperator(const std::string& name, const std::map<std::string, long>& params);

}  // namespace qav
