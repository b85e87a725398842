#include "qav/quasiaffinity.hpp"

#include <algorithm>
#include <stdexcept>

#include "qav/grid_scan.hpp"

namespace qav {

namespace {

constexpr long kRandomizedBound = 1'000'000;

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t satPow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = satMul(out, base);
  return out;
}

void checkDimensions(const PolyIntegrand& f, const HomOperator& op, int opSideDim,
                     const char* what) {
  if (f.d != opSideDim)
    throw std::invalid_argument(std::string(what) + ": integrand dimension " +
                                std::to_string(f.d) + " does not match operator side dimension " +
                                std::to_string(opSideDim));
  validateOperator(op);
}

void addDegreeNote(CheckReport& report, const PolyIntegrand& f) {
  if (f.degree > f.d)
    report.notes.push_back(
        "integrand degree " + std::to_string(f.degree) + " exceeds argument dimension " +
        std::to_string(f.d) +
        "; cone-affine polynomials have degree <= argument dimension, so PASS would require the "
        "excess parts to vanish");
}

// First point of {0..xSize-1}^d where g is nonzero, scanning with the last
// coordinate fastest. g's per-variable degree is < xSize, so a nonzero g is
// caught on the grid.
std::pair<RatVec, Rat> firstNonzeroOnXGrid(const SparsePoly& g, long xSize) {
  const int d = g.variableCount();
  std::vector<long> pt(d, 0);
  RatVec x(d, Rat(0));
  for (;;) {
    for (int v = 0; v < d; ++v) x[v] = pt[v];
    Rat value = g.eval(x);
    if (!isZero(value)) return {x, value};
    int i = d - 1;
    while (i >= 0 && pt[i] == xSize - 1) pt[i--] = 0;
    if (i < 0) break;
    ++pt[i];
  }
  throw std::logic_error("nonzero polynomial with no nonzero grid value");
}

// ---------------------------------------------------------------------------
// Potential-side identity machinery shared by quasiaffineCheck and
// lambdaAffineCheck.

struct PotentialSideEval {
  const HomOperator* B;
  const DerivativeTensor* T;
  int r;

  // Resolved arguments B[xi_j] w_j for integer frequencies and directions.
  std::vector<RatVec> coneVectors(const std::vector<std::vector<long>>& xis,
                                  const std::vector<RatVec>& ws) const {
    std::vector<RatVec> vs;
    vs.reserve(r);
    for (int j = 0; j < r; ++j) vs.push_back(symbolAtInt(*B, xis[j]).apply(ws[j]));
    return vs;
  }

  Rat value(const std::vector<std::vector<long>>& xis, const std::vector<RatVec>& ws,
            const RatVec& x) const {
    return T->apply(x, coneVectors(xis, ws));
  }
};

// Greedy witness shrink: zero lambda entries, then frequency coordinates,
// keeping the value nonzero. `xis` holds the r-1 free frequencies; the last
// tuple member is recomputed as sum lambda_i xi_i.
void minimizeWitness(const PotentialSideEval& eval, std::vector<std::vector<long>>& xis,
                     std::vector<long>& lambdas, const std::vector<RatVec>& ws, const RatVec& x) {
  const int N = eval.B->baseDim;
  auto fullTuple = [&]() {
    std::vector<std::vector<long>> tuple = xis;
    std::vector<long> last(N, 0);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      for (int c = 0; c < N; ++c) last[c] += lambdas[i] * xis[i][c];
    tuple.push_back(std::move(last));
    return tuple;
  };
  auto nonzero = [&]() { return !isZero(eval.value(fullTuple(), ws, x)); };
  for (long& lam : lambdas) {
    if (lam == 0) continue;
    long saved = lam;
    lam = 0;
    if (!nonzero()) lam = saved;
  }
  for (auto& xi : xis)
    for (long& c : xi) {
      if (c == 0) continue;
      long saved = c;
      c = 0;
      if (!nonzero()) c = saved;
    }
}

Witness buildPotentialWitness(const PotentialSideEval& eval, std::vector<std::vector<long>> xis,
                              std::vector<long> lambdas, const std::vector<RatVec>& ws,
                              RatVec x) {
  minimizeWitness(eval, xis, lambdas, ws, x);
  const int N = eval.B->baseDim;
  std::vector<long> last(N, 0);
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (int c = 0; c < N; ++c) last[c] += lambdas[i] * xis[i][c];
  std::vector<std::vector<long>> tuple = xis;
  tuple.push_back(last);

  Witness w;
  w.r = eval.r;
  w.x = std::move(x);
  for (const auto& xi : tuple) w.frequencies.push_back(ratVecOfLongs(xi));
  w.dependenceCoeffs = ratVecOfLongs(lambdas);
  w.directions = ws;
  w.coneVectors = eval.coneVectors(tuple, ws);
  w.value = eval.T->apply(w.x, w.coneVectors);
  return w;
}

// Odometer over [m]^r selecting which basis direction feeds each slot.
bool nextCombo(std::vector<int>& combo, int m) {
  int i = static_cast<int>(combo.size()) - 1;
  while (i >= 0 && combo[i] == m - 1) combo[i--] = 0;
  if (i < 0) return false;
  ++combo[i];
  return true;
}

struct IdentityOutcome {
  bool holds = true;
  std::optional<Witness> witness;
};

// One order of the potential-side identity, exact mode. The (xi, lambda)
// block is scanned as the outer grid; per point the w basis combinations are
// expanded and the leftover x-polynomial is checked on the x grid.
IdentityOutcome runPotentialIdentityExact(const PolyIntegrand& f, const HomOperator& B, int r,
                                          long xSize, const CheckOptions& options) {
  const int N = B.baseDim;
  const int m = B.inDim;
  const long xiSize = 2L * B.order + 1;
  const long lamSize = B.order + 1;
  DerivativeTensor T = DerivativeTensor::of(f, r);
  PotentialSideEval eval{&B, &T, r};

  GridShape outer;
  outer.sizes.assign(static_cast<std::size_t>((r - 1) * N), xiSize);
  outer.sizes.insert(outer.sizes.end(), static_cast<std::size_t>(r - 1), lamSize);

  auto decodePoint = [&](std::uint64_t idx, std::vector<std::vector<long>>& xis,
                         std::vector<long>& lambdas) {
    std::vector<long> digits;
    outer.decode(idx, digits);
    xis.assign(r - 1, std::vector<long>(N));
    for (int j = 0; j < r - 1; ++j)
      for (int c = 0; c < N; ++c) xis[j][c] = digits[j * N + c];
    lambdas.assign(digits.begin() + static_cast<std::ptrdiff_t>((r - 1) * N), digits.end());
  };

  auto symbolsAt = [&](const std::vector<std::vector<long>>& xis,
                       const std::vector<long>& lambdas) {
    std::vector<RatMatrix> symbols;
    symbols.reserve(r);
    for (int j = 0; j < r - 1; ++j) symbols.push_back(symbolAtInt(B, xis[j]));
    std::vector<long> last(N, 0);
    for (int i = 0; i < r - 1; ++i)
      for (int c = 0; c < N; ++c) last[c] += lambdas[i] * xis[i][c];
    symbols.push_back(symbolAtInt(B, last));
    return symbols;
  };

  auto holds = [&](std::uint64_t idx) {
    std::vector<std::vector<long>> xis;
    std::vector<long> lambdas;
    decodePoint(idx, xis, lambdas);
    std::vector<RatMatrix> symbols = symbolsAt(xis, lambdas);
    std::vector<int> combo(r, 0);
    std::vector<RatVec> vs(r);
    do {
      bool zeroSlot = false;
      for (int j = 0; j < r; ++j) {
        vs[j] = symbols[j].column(combo[j]);
        if (isZeroVec(vs[j])) {
          zeroSlot = true;
          break;
        }
      }
      if (zeroSlot) continue;
      if (!T.applyPoly(vs).isZero()) return false;
    } while (nextCombo(combo, m));
    return true;
  };

  auto found = scanFirstViolation(outer.total(), holds, options.threads);
  if (!found) return {};

  // Rebuild the violating configuration and its witness.
  std::vector<std::vector<long>> xis;
  std::vector<long> lambdas;
  decodePoint(*found, xis, lambdas);
  std::vector<RatMatrix> symbols = symbolsAt(xis, lambdas);
  std::vector<int> combo(r, 0);
  do {
    std::vector<RatVec> vs(r);
    bool zeroSlot = false;
    for (int j = 0; j < r; ++j) {
      vs[j] = symbols[j].column(combo[j]);
      if (isZeroVec(vs[j])) {
        zeroSlot = true;
        break;
      }
    }
    if (zeroSlot) continue;
    SparsePoly g = T.applyPoly(vs);
    if (g.isZero()) continue;
    auto [x, value] = firstNonzeroOnXGrid(g, xSize);
    std::vector<RatVec> ws;
    for (int j = 0; j < r; ++j) {
      RatVec w(m, Rat(0));
      w[combo[j]] = 1;
      ws.push_back(std::move(w));
    }
    IdentityOutcome outcome;
    outcome.holds = false;
    outcome.witness = buildPotentialWitness(eval, xis, lambdas, ws, x);
    return outcome;
  } while (nextCombo(combo, m));
  throw std::logic_error("violating grid point lost on reconstruction");
}

IdentityOutcome runPotentialIdentityRandomized(const PolyIntegrand& f, const HomOperator& B,
                                               int r, DetRng& rng, const CheckOptions& options) {
  const int N = B.baseDim;
  const int m = B.inDim;
  DerivativeTensor T = DerivativeTensor::of(f, r);
  PotentialSideEval eval{&B, &T, r};
  for (int trial = 0; trial < options.trials; ++trial) {
    std::vector<std::vector<long>> xis(r - 1, std::vector<long>(N));
    for (auto& xi : xis)
      for (long& c : xi) c = rng.nextInt(-kRandomizedBound, kRandomizedBound);
    std::vector<long> lambdas(r - 1);
    for (long& lam : lambdas) lam = rng.nextInt(-kRandomizedBound, kRandomizedBound);
    RatVec x(f.d);
    for (auto& c : x) c = rng.nextInt(-kRandomizedBound, kRandomizedBound);

    std::vector<std::vector<long>> tuple = xis;
    std::vector<long> last(N, 0);
    for (int i = 0; i < r - 1; ++i)
      for (int c = 0; c < N; ++c) last[c] += lambdas[i] * xis[i][c];
    tuple.push_back(last);
    std::vector<RatMatrix> symbols;
    for (const auto& xi : tuple) symbols.push_back(symbolAtInt(B, xi));

    std::vector<int> combo(r, 0);
    do {
      std::vector<RatVec> vs(r);
      bool zeroSlot = false;
      for (int j = 0; j < r; ++j) {
        vs[j] = symbols[j].column(combo[j]);
        if (isZeroVec(vs[j])) {
          zeroSlot = true;
          break;
        }
      }
      if (zeroSlot) continue;
      if (!isZero(T.apply(x, vs))) {
        std::vector<RatVec> ws;
        for (int j = 0; j < r; ++j) {
          RatVec w(m, Rat(0));
          w[combo[j]] = 1;
          ws.push_back(std::move(w));
        }
        IdentityOutcome outcome;
        outcome.holds = false;
        outcome.witness = buildPotentialWitness(eval, xis, lambdas, ws, x);
        return outcome;
      }
    } while (nextCombo(combo, m));
  }
  return {};
}

OrderCertificate makeOrderCertificate(const PolyIntegrand& f, const HomOperator& B, int r,
                                      const CheckOptions& options) {
  OrderCertificate cert;
  cert.r = r;
  if (options.randomized) {
    cert.trials = static_cast<std::uint64_t>(options.trials);
    cert.basisCombinations = satPow(static_cast<std::uint64_t>(B.inDim), r);
    cert.plannedEvaluations = satMul(cert.trials, cert.basisCombinations);
    return cert;
  }
  const long xSize = std::max(f.degree - r, 0) + 1;
  cert.xGridSizes.assign(f.d, xSize);
  cert.xiGridSizes.assign(static_cast<std::size_t>((r - 1) * B.baseDim), 2L * B.order + 1);
  cert.lambdaGridSizes.assign(static_cast<std::size_t>(r - 1), B.order + 1);
  cert.basisCombinations = satPow(static_cast<std::uint64_t>(B.inDim), r);
  std::uint64_t planned = cert.basisCombinations;
  for (long s : cert.xGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  for (long s : cert.xiGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  for (long s : cert.lambdaGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  cert.plannedEvaluations = planned;
  return cert;
}

}  // namespace

CheckReport quasiaffineCheck(const PolyIntegrand& f, const HomOperator& B,
                             const CheckOptions& options) {
  checkDimensions(f, B, B.outDim, "quasiaffineCheck");
  CheckReport report;
  report.mode = options.randomized ? "randomized" : "exact";
  addDegreeNote(report, f);

  if (f.degree <= 1) {
    report.verdict = Verdict::Pass;
    report.clause = "degree <= 1: constants and linear integrands are quasiaffine";
    report.notes.push_back("derivatives of order >= 2 vanish identically");
    return report;
  }

  const int rMax = std::min(B.order, B.baseDim) + 1;
  DetRng rng(options.seed);
  for (int r = 2; r <= rMax; ++r) {
    OrderCertificate cert = makeOrderCertificate(f, B, r, options);
    if (r > f.degree) {
      cert.skipped = true;
      cert.note = "derivative tensor of order " + std::to_string(r) + " vanishes (degree " +
                  std::to_string(f.degree) + ")";
      report.certificate.push_back(cert);
      report.checkedOrders.push_back(r);
      continue;
    }
    if (!options.randomized && cert.plannedEvaluations > options.maxEvaluations) {
      report.verdict = Verdict::Inconclusive;
      report.certificate.push_back(cert);
      report.clause = "resource ceiling reached before order r = " + std::to_string(r);
      report.notes.push_back("order r = " + std::to_string(r) + " needs " +
                             std::to_string(cert.plannedEvaluations) +
                             " grid evaluations, ceiling is " +
                             std::to_string(options.maxEvaluations) +
                             "; rerun with --mode randomized or a larger --max-evals");
      return report;
    }
    const long xSize = std::max(f.degree - r, 0) + 1;
    IdentityOutcome outcome =
        options.randomized ? runPotentialIdentityRandomized(f, B, r, rng, options)
                           : runPotentialIdentityExact(f, B, r, xSize, options);
    report.certificate.push_back(cert);
    report.checkedOrders.push_back(r);
    if (!outcome.holds) {
      report.verdict = Verdict::Fail;
      report.witness = std::move(outcome.witness);
      report.clause = "order r = " + std::to_string(r) +
                      " multilinear identity violated on a dependent frequency tuple";
      return report;
    }
  }
  report.verdict = options.randomized ? Verdict::ProbablePass : Verdict::Pass;
  report.clause = "multilinear identities of orders 2.." + std::to_string(rMax) +
                  " hold on dependent frequency tuples (bounded-order criterion)";
  return report;
}

CheckReport lambdaAffineCheck(const PolyIntegrand& f, const HomOperator& B,
                              const CheckOptions& options) {
  checkDimensions(f, B, B.outDim, "lambdaAffineCheck");
  CheckReport report;
  report.mode = options.randomized ? "randomized" : "exact";
  addDegreeNote(report, f);

  if (f.degree <= 1) {
    report.verdict = Verdict::Pass;
    report.clause = "degree <= 1: affine integrands are affine along every cone";
    return report;
  }

  const int N = B.baseDim;
  const int m = B.inDim;
  DerivativeTensor T = DerivativeTensor::of(f, 2);
  const long xSize = std::max(f.degree - 2, 0) + 1;
  const long xiSize = 2L * B.order + 1;  // xi enters both slots
  const long wSize = 3;                  // quadratic in w

  OrderCertificate cert;
  cert.r = 2;
  cert.xGridSizes.assign(f.d, xSize);
  cert.xiGridSizes.assign(N, xiSize);
  cert.wGridSizes.assign(m, wSize);  // quadratic polarization in the direction
  cert.basisCombinations = 1;
  std::uint64_t planned = 1;
  for (long s : cert.xGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  for (long s : cert.xiGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  for (long s : cert.wGridSizes) planned = satMul(planned, static_cast<std::uint64_t>(s));
  cert.plannedEvaluations = planned;
  if (options.randomized) {
    cert.trials = static_cast<std::uint64_t>(options.trials);
    cert.plannedEvaluations = cert.trials;
  }

  if (!options.randomized && cert.plannedEvaluations > options.maxEvaluations) {
    report.verdict = Verdict::Inconclusive;
    report.certificate.push_back(cert);
    report.clause = "resource ceiling reached";
    report.notes.push_back("identity needs " + std::to_string(cert.plannedEvaluations) +
                           " grid evaluations, ceiling is " +
                           std::to_string(options.maxEvaluations) +
                           "; rerun with --mode randomized or a larger --max-evals");
    return report;
  }

  auto witnessFrom = [&](const std::vector<long>& xi, const RatVec& w, const RatVec& x) {
    Witness wit;
    wit.r = 2;
    wit.x = x;
    wit.frequencies = {ratVecOfLongs(xi), ratVecOfLongs(xi)};
    wit.dependenceCoeffs = {Rat(1)};
    wit.directions = {w, w};
    RatVec v = symbolAtInt(B, xi).apply(w);
    wit.coneVectors = {v, v};
    wit.value = T.apply(x, wit.coneVectors);
    return wit;
  };

  std::optional<Witness> witness;
  if (options.randomized) {
    DetRng rng(options.seed);
    for (int trial = 0; trial < options.trials && !witness; ++trial) {
      std::vector<long> xi(N);
      for (long& c : xi) c = rng.nextInt(-kRandomizedBound, kRandomizedBound);
      RatVec w(m), x(f.d);
      for (auto& c : w) c = rng.nextInt(-kRandomizedBound, kRandomizedBound);
      for (auto& c : x) c = rng.nextInt(-kRandomizedBound, kRandomizedBound);
      RatVec v = symbolAtInt(B, xi).apply(w);
      if (!isZeroVec(v) && !isZero(T.apply(x, {v, v}))) witness = witnessFrom(xi, w, x);
    }
  } else {
    GridShape outer;
    outer.sizes.assign(N, xiSize);
    outer.sizes.insert(outer.sizes.end(), m, wSize);
    auto decodePoint = [&](std::uint64_t idx, std::vector<long>& xi, RatVec& w) {
      std::vector<long> digits;
      outer.decode(idx, digits);
      xi.assign(digits.begin(), digits.begin() + N);
      w.assign(m, Rat(0));
      for (int j = 0; j < m; ++j) w[j] = digits[N + j];
    };
    auto holds = [&](std::uint64_t idx) {
      std::vector<long> xi;
      RatVec w;
      decodePoint(idx, xi, w);
      RatVec v = symbolAtInt(B, xi).apply(w);
      if (isZeroVec(v)) return true;
      return T.applyPoly({v, v}).isZero();
    };
    auto found = scanFirstViolation(outer.total(), holds, options.threads);
    if (found) {
      std::vector<long> xi;
      RatVec w;
      decodePoint(*found, xi, w);
      RatVec v = symbolAtInt(B, xi).apply(w);
      auto [x, value] = firstNonzeroOnXGrid(T.applyPoly({v, v}), xSize);
      witness = witnessFrom(xi, w, x);
    }
  }

  report.certificate.push_back(cert);
  report.checkedOrders.push_back(2);
  if (witness) {
    report.verdict = Verdict::Fail;
    report.witness = std::move(witness);
    report.clause = "second-derivative identity along the image cone violated";
  } else {
    report.verdict = options.randomized ? Verdict::ProbablePass : Verdict::Pass;
    report.clause = "second-derivative identity along the image cone holds";
  }
  return report;
}

CheckReport quasiaffineNecessaryFromA(const PolyIntegrand& f, const HomOperator& A,
                                      const SampleGrid& grid, int rMax,
                                      const CheckOptions& options) {
  checkDimensions(f, A, A.inDim, "quasiaffineNecessaryFromA");
  if (grid.points.empty()) throw std::invalid_argument("quasiaffineNecessaryFromA: empty grid");
  if (grid.N != A.baseDim)
    throw std::invalid_argument("quasiaffineNecessaryFromA: grid dimension differs from baseDim");
  if (rMax < 2) throw std::invalid_argument("quasiaffineNecessaryFromA: rMax must be >= 2");

  CheckReport report;
  report.mode = "exact";
  addDegreeNote(report, f);

  if (f.degree <= 1) {
    report.verdict = Verdict::NecessaryConditionsHold;
    report.clause = "degree <= 1: all sampled conditions hold vacuously";
    return report;
  }

  const int G = static_cast<int>(grid.points.size());
  const int N = grid.N;

  // Kernel bases, cached per frequency (grid points and their sums).
  std::map<std::vector<long>, std::vector<RatVec>> kernels;
  auto kernelAt = [&](const std::vector<long>& xi) -> const std::vector<RatVec>& {
    auto it = kernels.find(xi);
    if (it == kernels.end())
      it = kernels.emplace(xi, nullspaceOf(symbolAtInt(A, xi))).first;
    return it->second;
  };

  for (int r = 2; r <= rMax; ++r) {
    OrderCertificate cert;
    cert.r = r;
    if (r > f.degree) {
      cert.skipped = true;
      cert.note = "derivative tensor of order " + std::to_string(r) + " vanishes (degree " +
                  std::to_string(f.degree) + ")";
      report.certificate.push_back(cert);
      report.checkedOrders.push_back(r);
      continue;
    }
    DerivativeTensor T = DerivativeTensor::of(f, r);
    const long xSize = std::max(f.degree - r, 0) + 1;
    cert.xGridSizes.assign(f.d, xSize);

    // Multisets of r-1 grid indices; the tuple is completed by their sum.
    std::vector<std::vector<int>> tuples;
    std::vector<int> pick(r - 1, 0);
    for (;;) {
      tuples.push_back(pick);
      int i = r - 2;
      while (i >= 0 && pick[i] == G - 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r - 1; ++j) pick[j] = pick[i];
    }

    std::uint64_t xTotal = satPow(static_cast<std::uint64_t>(xSize), f.d);
    std::uint64_t planned = 0;
    for (const auto& tuple : tuples) {
      std::uint64_t combos = 1;
      for (int j = 0; j < r - 1; ++j)
        combos = satMul(combos, kernelAt(grid.points[tuple[j]]).size());
      std::vector<long> sum(N, 0);
      for (int j = 0; j < r - 1; ++j)
        for (int c = 0; c < N; ++c) sum[c] += grid.points[tuple[j]][c];
      combos = satMul(combos, kernelAt(sum).size());
      std::uint64_t add = satMul(combos, xTotal);
      planned = (planned > UINT64_MAX - add) ? UINT64_MAX : planned + add;
    }
    cert.plannedEvaluations = planned;
    if (planned > options.maxEvaluations) {
      report.verdict = Verdict::Inconclusive;
      report.certificate.push_back(cert);
      report.clause = "resource ceiling reached before order r = " + std::to_string(r);
      report.notes.push_back("order r = " + std::to_string(r) + " needs " +
                             std::to_string(planned) + " grid evaluations, ceiling is " +
                             std::to_string(options.maxEvaluations));
      return report;
    }

    auto slotsFor = [&](const std::vector<int>& tuple) {
      std::vector<std::vector<long>> freqs;
      for (int j = 0; j < r - 1; ++j) freqs.push_back(grid.points[tuple[j]]);
      std::vector<long> sum(N, 0);
      for (int j = 0; j < r - 1; ++j)
        for (int c = 0; c < N; ++c) sum[c] += freqs[j][c];
      freqs.push_back(std::move(sum));
      return freqs;
    };

    auto holds = [&](std::uint64_t tupleIdx) {
      std::vector<std::vector<long>> freqs = slotsFor(tuples[tupleIdx]);
      std::vector<const std::vector<RatVec>*> bases;
      for (const auto& xi : freqs) {
        const auto& basis = kernelAt(xi);
        if (basis.empty()) return true;  // injective symbol: no cone directions
        bases.push_back(&basis);
      }
      std::vector<int> combo(r, 0);
      std::vector<RatVec> vs(r);
      do {
        for (int j = 0; j < r; ++j) vs[j] = (*bases[j])[combo[j]];
        if (!T.applyPoly(vs).isZero()) return false;
        int i = r - 1;
        while (i >= 0 && combo[i] + 1 == static_cast<int>(bases[i]->size())) combo[i--] = 0;
        if (i < 0) break;
        ++combo[i];
      } while (true);
      return true;
    };

    // Kernel cache is shared mutable state; fill it up front so the parallel
    // scan only reads.
    for (const auto& tuple : tuples)
      for (const auto& xi : slotsFor(tuple)) kernelAt(xi);

    auto found = scanFirstViolation(tuples.size(), holds, options.threads);
    report.certificate.push_back(cert);
    report.checkedOrders.push_back(r);
    if (found) {
      std::vector<std::vector<long>> freqs = slotsFor(tuples[*found]);
      std::vector<const std::vector<RatVec>*> bases;
      for (const auto& xi : freqs) bases.push_back(&kernelAt(xi));
      std::vector<int> combo(r, 0);
      std::vector<RatVec> vs(r);
      for (;;) {
        for (int j = 0; j < r; ++j) vs[j] = (*bases[j])[combo[j]];
        SparsePoly g = T.applyPoly(vs);
        if (!g.isZero()) {
          auto [x, value] = firstNonzeroOnXGrid(g, xSize);
          Witness w;
          w.r = r;
          w.x = std::move(x);
          for (const auto& xi : freqs) w.frequencies.push_back(ratVecOfLongs(xi));
          w.directions = vs;
          w.coneVectors = vs;
          w.value = value;
          report.verdict = Verdict::Fail;
          report.witness = std::move(w);
          report.clause = "order r = " + std::to_string(r) +
                          " necessary condition violated on a sampled dependent tuple";
          return report;
        }
        int i = r - 1;
        while (i >= 0 && combo[i] + 1 == static_cast<int>(bases[i]->size())) combo[i--] = 0;
        if (i < 0) throw std::logic_error("violating tuple lost on reconstruction");
        ++combo[i];
      }
    }
  }
  report.verdict = Verdict::NecessaryConditionsHold;
  report.clause = "sampled dependent-tuple conditions hold for orders 2.." + std::to_string(rMax) +
                  " (grid-relative)";
  return report;
}

QuadBasisReport quadraticVanishingBasis(const HomOperator& B, const SampleGrid& grid,
                                        const CheckOptions& options) {
  validateOperator(B);
  if (grid.points.empty()) throw std::invalid_argument("quadraticVanishingBasis: empty grid");
  if (grid.N != B.baseDim)
    throw std::invalid_argument("quadraticVanishingBasis: grid dimension differs from baseDim");

  const int d = B.outDim;
  const int m = B.inDim;
  std::vector<std::pair<int, int>> unknowns;  // (a <= b) entries of Q
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) unknowns.emplace_back(a, b);
  const int s = static_cast<int>(unknowns.size());

  // Constraint rows, keeping only the linearly independent ones; a full rank
  // system short-circuits with the empty basis.
  SpanBasis rowSpan(s);
  std::vector<RatVec> rows;
  for (const auto& point : grid.points) {
    RatMatrix M = symbolAtInt(B, point);
    for (int i = 0; i < m && rowSpan.dim() < s; ++i)
      for (int j = i; j < m && rowSpan.dim() < s; ++j) {
        RatVec row(s, Rat(0));
        for (int u = 0; u < s; ++u) {
          auto [a, b] = unknowns[u];
          Rat coeff = M.at(a, i) * M.at(b, j);
          if (a != b) coeff += M.at(b, i) * M.at(a, j);
          row[u] = coeff;
        }
        if (rowSpan.add(row)) rows.push_back(std::move(row));
      }
    if (rowSpan.dim() == s) break;
  }

  QuadBasisReport report;
  report.d = d;
  std::vector<RatVec> solutions;
  if (rowSpan.dim() < s) {
    RatMatrix sys(static_cast<int>(rows.size()), s);
    for (int r = 0; r < sys.rows(); ++r)
      for (int c = 0; c < s; ++c) sys.at(r, c) = rows[r][c];
    solutions = nullspaceOf(sys);
  }

  int confirmed = 0, rejected = 0, unconfirmed = 0;
  for (const RatVec& q : solutions) {
    RatMatrix Q(d, d);
    for (int u = 0; u < s; ++u) {
      auto [a, b] = unknowns[u];
      Q.at(a, b) = q[u];
      Q.at(b, a) = q[u];
    }
    SparsePoly p(d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (isZero(Q.at(a, b))) continue;
        MultiIndex alpha(d, 0);
        ++alpha[a];
        ++alpha[b];
        p.addTerm(alpha, Q.at(a, b));
      }
    CheckOptions confirmOptions = options;
    confirmOptions.randomized = false;
    CheckReport check = lambdaAffineCheck(makeIntegrand(p), B, confirmOptions);
    if (check.verdict == Verdict::Pass) {
      report.forms.push_back(std::move(Q));
      ++confirmed;
    } else {
      // A form that fails the exact identity is a grid artifact; a form the
      // ceiling kept unresolved is reported but not returned either.
      report.rejected.push_back(std::move(Q));
      check.verdict == Verdict::Fail ? ++rejected : ++unconfirmed;
    }
  }
  report.certificate = "constraints from " + std::to_string(grid.points.size()) +
                       " frequencies with full polarization in the direction argument; " +
                       std::to_string(confirmed) + " form(s) confirmed by the exact cone-affinity "
                       "identity, " +
                       std::to_string(rejected) + " rejected";
  if (unconfirmed > 0)
    report.certificate += ", " + std::to_string(unconfirmed) +
                          " unresolved at the evaluation ceiling (raise --max-evals)";
  return report;
}

}  // namespace qav
