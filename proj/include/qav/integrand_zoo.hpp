#pragma once

#include <map>
#include <string>
#include <vector>

#include "qav/integrand.hpp"

namespace qav {

// det of an n x n matrix argument, row-major layout, d = n^2.
PolyIntegrand makeDet(int n);

// Minor of an R x C matrix argument (row-major, d = R*C) over the given
// 0-based row/column index sets (equal, nonempty sizes).
PolyIntegrand makeMinor(int R, int C, const std::vector<int>& rows, const std::vector<int>& cols);

// f(a, b) = a . b on R^(2d), first block a, second block b.
PolyIntegrand makeDot(int d);

// Signed S3 sum over three symmetric-Hessian slots per component (d = 9,
// layout (i <= j) pair major, component minor; N = 2, m = 3).
PolyIntegrand makeBcoL();

PolyIntegrand makeNormSquared(int d);

struct IntegrandZooSpec {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

std::vector<IntegrandZooSpec> zooIntegrandList();

// Parameters: det(n); minor(R, C, rows, cols) with rows/cols as digit strings
// of 1-based indices; dot(d); normSquared(d); bcoL().
PolyIntegrand zooIntegrand(const std::string& name, const std::map<std::string, std::string>& params);

}  // namespace qav
