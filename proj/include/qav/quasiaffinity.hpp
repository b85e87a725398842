#pragma once

#include "qav/check_report.hpp"
#include "qav/hom_operator.hpp"
#include "qav/integrand.hpp"
#include "qav/sample_grid.hpp"

namespace qav {

// Decides quasiaffinity of f for the operator class annihilating Image B by
// testing, for every order 2 <= r <= min{order(B), baseDim(B)} + 1, whether
//   D^r f(x)[B[xi_1]w_1, ..., B[xi_{r-1}]w_{r-1}, B[sum_i lambda_i xi_i]w_r]
// vanishes identically. The w's range over basis vectors (the form is
// multilinear in each w); the remaining polynomial identity in (x, xi,
// lambda) is certified on deterministic integer interpolation grids sized
// per-variable-degree + 1, so PASS and FAIL are both exact. Randomized mode
// samples large integer points instead and reports PROBABLE-PASS.
CheckReport quasiaffineCheck(const PolyIntegrand& f, const HomOperator& B,
                             const CheckOptions& options = {});

// Affinity along the cone swept by Image B[xi]: the identity
// D^2 f(x)[B[xi]w, B[xi]w] == 0 in (x, xi, w), certified the same way.
CheckReport lambdaAffineCheck(const PolyIntegrand& f, const HomOperator& B,
                              const CheckOptions& options = {});

// Necessary conditions read from the annihilator side: for dependent tuples
// assembled from grid frequencies and kernel-basis directions, the identity
// D^r f(x)[v_1, ..., v_r] == 0 in x. FAIL refutes quasiaffinity exactly;
// holding is grid-relative.
CheckReport quasiaffineNecessaryFromA(const PolyIntegrand& f, const HomOperator& A,
                                      const SampleGrid& grid, int rMax = 3,
                                      const CheckOptions& options = {});

struct QuadBasisReport {
  int d = 0;
  std::vector<RatMatrix> forms;     // confirmed: exact cone-affinity holds
  std::vector<RatMatrix> rejected;  // solved the grid system, failed confirmation
  std::string certificate;
};

// Canonical basis of symmetric forms Q with B[xi]^T Q B[xi] == 0 at every
// grid frequency (full polarization in w), each confirmed by the exact
// cone-affinity identity.
QuadBasisReport quadraticVanishingBasis(const HomOperator& B, const SampleGrid& grid,
                                        const CheckOptions& options = {});

}  // namespace qav
