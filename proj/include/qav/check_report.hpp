#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qav/rational.hpp"
#include "qav/sample_grid.hpp"

namespace qav {

enum class Verdict {
  Pass,
  Fail,
  Inconclusive,
  ProbablePass,              // randomized identity testing only
  NecessaryConditionsHold,   // grid-relative, annihilator-side checks
};

std::string verdictName(Verdict v);
Verdict verdictFromName(const std::string& name);
// Exit-code contract: 0 pass/holds, 1 fail, 3 inconclusive or grid-relative.
int verdictExitCode(Verdict v);

// Counterexample tuple. `frequencies` always carries the full r-tuple; on
// potential-side checks the last frequency equals sum_i lambda_i xi_i and
// `directions` are the scanned basis directions, while annihilator-side
// checks store the kernel vectors directly. `coneVectors` are the resolved
// arguments fed to the derivative tensor, so re-evaluation needs no operator.
struct Witness {
  int r = 0;
  RatVec x;
  std::vector<RatVec> frequencies;
  RatVec dependenceCoeffs;
  std::vector<RatVec> directions;
  std::vector<RatVec> coneVectors;
  Rat value;
};

struct OrderCertificate {
  int r = 0;
  bool skipped = false;
  std::string note;
  std::vector<long> xGridSizes;
  std::vector<long> xiGridSizes;
  std::vector<long> lambdaGridSizes;
  std::vector<long> wGridSizes;  // direction grid of the cone-affinity identity
  std::uint64_t basisCombinations = 0;
  std::uint64_t plannedEvaluations = 0;
  std::uint64_t trials = 0;
};

struct CheckReport {
  Verdict verdict = Verdict::Pass;
  std::vector<int> checkedOrders;
  std::optional<Witness> witness;
  std::vector<OrderCertificate> certificate;
  std::string mode = "exact";
  std::vector<std::string> notes;
  std::string clause;  // which criterion produced the verdict
};

struct CheckOptions {
  bool randomized = false;
  std::uint64_t maxEvaluations = 10'000'000;
  int trials = 20;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;  // 0 = library default
};

}  // namespace qav
