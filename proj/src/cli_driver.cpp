#include "qav/cli_driver.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "qav/integrand_zoo.hpp"
#include "qav/io_json.hpp"
#include "qav/operator_zoo.hpp"
#include "qav/probes.hpp"
#include "qav/quasiaffinity.hpp"

namespace qav {

namespace {

// ---------------------------------------------------------------------------
// Input resolution: file paths or inline zoo references like
// zoo:grad(N=2,m=2).

struct ZooRef {
  std::string name;
  std::map<std::string, std::string> params;
};

bool isZooRef(const std::string& s) { return s.rfind("zoo:", 0) == 0; }

ZooRef parseZooRef(const std::string& s) {
  ZooRef ref;
  std::string body = s.substr(4);
  auto open = body.find('(');
  if (open == std::string::npos) {
    ref.name = body;
    return ref;
  }
  if (body.back() != ')')
    throw std::invalid_argument("malformed zoo reference '" + s + "' (missing ')')");
  ref.name = body.substr(0, open);
  std::string inner = body.substr(open + 1, body.size() - open - 2);
  std::stringstream ss(inner);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed zoo parameter '" + piece + "' (expected k=v)");
    ref.params[piece.substr(0, eq)] = piece.substr(eq + 1);
  }
  return ref;
}

std::map<std::string, long> toLongParams(const std::map<std::string, std::string>& params) {
  std::map<std::string, long> out;
  for (const auto& [k, v] : params) {
    try {
      out[k] = std::stol(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("zoo parameter '" + k + "' must be an integer, got '" + v + "'");
    }
  }
  return out;
}

HomOperator resolveOperator(const std::string& ref) {
  if (isZooRef(ref)) {
    ZooRef z = parseZooRef(ref);
    return zooOperator(z.name, toLongParams(z.params));
  }
  HomOperator op = operatorFromJson(loadJsonFile(ref));
  return op;
}

PolyIntegrand resolveIntegrand(const std::string& ref) {
  if (isZooRef(ref)) {
    ZooRef z = parseZooRef(ref);
    return zooIntegrand(z.name, z.params);
  }
  return integrandFromJson(loadJsonFile(ref));
}

TrigField bcoField() {
  TrigField field;
  field.N = 2;
  field.m = 3;
  for (int k = 0; k < 3; ++k) {
    TrigMode mode;
    mode.lambda = k == 0 ? std::vector<long>{1, 0}
                         : k == 1 ? std::vector<long>{0, 1} : std::vector<long>{1, 1};
    mode.cosPhase = true;
    mode.amplitude.assign(3, Rat(0));
    mode.amplitude[k] = 1;
    field.modes.push_back(std::move(mode));
  }
  return field;
}

TrigField resolveField(const std::string& ref) {
  if (isZooRef(ref)) {
    ZooRef z = parseZooRef(ref);
    if (z.name == "bco") return bcoField();
    if (z.name == "random") {
      auto p = toLongParams(z.params);
      auto get = [&](const char* key, long fallback) {
        auto it = p.find(key);
        return it == p.end() ? fallback : it->second;
      };
      DetRng rng(static_cast<std::uint64_t>(get("seed", static_cast<long>(kDefaultSeed))));
      TrigField field = randomField(rng, static_cast<int>(get("N", 2)),
                                    static_cast<int>(get("m", 2)),
                                    static_cast<int>(get("modes", 3)), get("bound", 2));
      return field;
    }
    throw std::invalid_argument("unknown zoo field '" + z.name + "' (known: bco, random)");
  }
  return fieldFromJson(loadJsonFile(ref));
}

SampleGrid resolveGrid(const std::string& spec, int N, std::uint64_t seed) {
  if (spec == "default") return defaultSampleGrid(N, seed);
  if (spec.rfind("file:", 0) == 0) {
    SampleGrid grid = gridFromJson(loadJsonFile(spec.substr(5)));
    if (grid.N != N)
      throw std::invalid_argument("grid dimension " + std::to_string(grid.N) +
                                  " does not match the operator base dimension " +
                                  std::to_string(N));
    return grid;
  }
  if (spec.rfind("random:", 0) == 0) {
    int count;
    try {
      count = std::stoi(spec.substr(7));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed grid spec '" + spec + "'");
    }
    return randomSampleGrid(N, count, seed);
  }
  throw std::invalid_argument("grid spec must be default, file:<path> or random:<count>");
}

RatVec parseShift(const std::string& csv, int d) {
  RatVec shift(d, Rat(0));
  if (csv.empty()) return shift;
  std::stringstream ss(csv);
  std::string piece;
  std::size_t i = 0;
  while (std::getline(ss, piece, ',')) {
    if (i >= shift.size()) throw std::invalid_argument("shift has more entries than d");
    shift[i++] = ratFromString(piece);
  }
  if (i != shift.size())
    throw std::invalid_argument("shift has " + std::to_string(i) + " entries, expected " +
                                std::to_string(d));
  return shift;
}

// ---------------------------------------------------------------------------
// Text rendering.

std::string fmtSizes(const std::vector<long>& sizes) {
  if (sizes.empty()) return "-";
  bool uniform = true;
  for (long s : sizes) uniform = uniform && s == sizes.front();
  if (uniform) return std::to_string(sizes.front()) + "^" + std::to_string(sizes.size());
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(sizes[i]);
  }
  return out;
}

void printWitnessText(const Witness& w, std::ostream& out) {
  out << "witness:\n";
  out << "  r = " << w.r << "\n";
  out << "  value = " << ratToString(w.value) << "\n";
  out << "  x = " << ratVecToString(w.x) << "\n";
  for (std::size_t i = 0; i < w.frequencies.size(); ++i)
    out << "  xi[" << i + 1 << "] = " << ratVecToString(w.frequencies[i]) << "\n";
  if (!w.dependenceCoeffs.empty())
    out << "  lambda = " << ratVecToString(w.dependenceCoeffs) << "\n";
  for (std::size_t i = 0; i < w.directions.size(); ++i)
    out << "  w[" << i + 1 << "] = " << ratVecToString(w.directions[i]) << "\n";
  for (std::size_t i = 0; i < w.coneVectors.size(); ++i)
    out << "  v[" << i + 1 << "] = " << ratVecToString(w.coneVectors[i]) << "\n";
}

void printCheckReportText(const CheckReport& report, std::ostream& out) {
  out << "verdict: " << verdictName(report.verdict) << "\n";
  out << "mode: " << report.mode << "\n";
  if (!report.clause.empty()) out << "clause: " << report.clause << "\n";
  if (!report.checkedOrders.empty()) {
    out << "orders checked:";
    for (int r : report.checkedOrders) out << " " << r;
    out << "\n";
  }
  if (!report.certificate.empty()) {
    out << "certificate:\n";
    for (const auto& cert : report.certificate) {
      out << "  r = " << cert.r;
      if (cert.skipped) {
        out << " skipped: " << cert.note << "\n";
        continue;
      }
      if (cert.trials > 0) {
        out << ": randomized, trials " << cert.trials << ", basis combinations "
            << cert.basisCombinations << "\n";
        continue;
      }
      out << ": x grid " << fmtSizes(cert.xGridSizes) << ", xi grid " << fmtSizes(cert.xiGridSizes);
      if (!cert.lambdaGridSizes.empty()) out << ", lambda grid " << fmtSizes(cert.lambdaGridSizes);
      if (!cert.wGridSizes.empty()) out << ", w grid " << fmtSizes(cert.wGridSizes);
      out << ", basis combinations " << cert.basisCombinations << ", planned evaluations "
          << cert.plannedEvaluations << "\n";
    }
  }
  if (report.witness) printWitnessText(*report.witness, out);
  for (const auto& note : report.notes) out << "note: " << note << "\n";
}

void emitCheckReport(const CheckReport& report, const std::string& output,
                     const std::string& reportOut, std::ostream& out) {
  if (!reportOut.empty()) saveJsonFile(reportToJson(report), reportOut);
  if (output == "json")
    out << reportToJson(report).dump(2) << "\n";
  else
    printCheckReportText(report, out);
}

void printMatrixText(const RatMatrix& m, std::ostream& out, const char* indent) {
  for (int r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      out << ratToString(m.at(r, c));
    }
    out << "]\n";
  }
}

// ---------------------------------------------------------------------------

struct CommonOpts {
  std::string mode = "exact";
  std::uint64_t maxEvals = 10'000'000;
  int trials = 20;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  std::string output = "text";
  std::string reportOut;
};

void addCommonFlags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--mode", o.mode, "identity testing mode")
      ->check(CLI::IsMember({"exact", "randomized"}));
  cmd->add_option("--max-evals", o.maxEvals, "grid evaluation ceiling per identity");
  cmd->add_option("--trials", o.trials, "random evaluation rounds in randomized mode");
  cmd->add_option("--seed", o.seed, "seed for all pseudo-random choices");
  cmd->add_option("--threads", o.threads, "worker cap (0 = library default)");
  cmd->add_option("--output", o.output, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--report-out", o.reportOut, "also write the JSON report to this path");
}

CheckOptions toCheckOptions(const CommonOpts& o) {
  CheckOptions opts;
  opts.randomized = o.mode == "randomized";
  opts.maxEvaluations = o.maxEvals;
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.threads = o.threads;
  return opts;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact quasiaffinity verification for constant-rank operators"};
  app.require_subcommand(1);

  // check-quasiaffine / check-lambda-affine
  std::string integrandRef, operatorRef;
  CommonOpts common;
  auto* qa = app.add_subcommand("check-quasiaffine",
                                "decide quasiaffinity of an integrand for a potential operator");
  qa->add_option("--integrand", integrandRef, "integrand file or zoo:...")->required();
  qa->add_option("--operator", operatorRef, "potential operator file or zoo:...")->required();
  addCommonFlags(qa, common);

  auto* la = app.add_subcommand("check-lambda-affine",
                                "decide affinity along the operator's image cone");
  la->add_option("--integrand", integrandRef, "integrand file or zoo:...")->required();
  la->add_option("--operator", operatorRef, "potential operator file or zoo:...")->required();
  addCommonFlags(la, common);

  // check-from-annihilator
  std::string annihilatorRef, gridSpec = "default";
  int rMax = 3;
  auto* fa = app.add_subcommand("check-from-annihilator",
                                "sampled necessary conditions from the annihilator side");
  fa->add_option("--integrand", integrandRef, "integrand file or zoo:...")->required();
  fa->add_option("--annihilator", annihilatorRef, "annihilator operator file or zoo:...")
      ->required();
  fa->add_option("--grid", gridSpec, "default | file:<path> | random:<count>");
  fa->add_option("--rmax", rMax, "largest derivative order to sample");
  addCommonFlags(fa, common);

  // verify-pair
  std::string potentialRef;
  auto* vp = app.add_subcommand("verify-pair", "verify an annihilator/potential pair");
  vp->add_option("--annihilator", annihilatorRef, "annihilator file or zoo:...")->required();
  vp->add_option("--potential", potentialRef, "potential file or zoo:...")->required();
  vp->add_option("--grid", gridSpec, "default | file:<path> | random:<count>");
  addCommonFlags(vp, common);

  // rank-probe / span-probe
  std::string side = "kernel";
  auto* rp = app.add_subcommand("rank-probe", "probe the constant rank property on a grid");
  rp->add_option("--operator", operatorRef, "operator file or zoo:...")->required();
  rp->add_option("--grid", gridSpec, "default | file:<path> | random:<count>");
  addCommonFlags(rp, common);

  auto* sp = app.add_subcommand("span-probe", "probe the spanning property on a grid");
  sp->add_option("--operator", operatorRef, "operator file or zoo:...")->required();
  sp->add_option("--side", side, "kernel | image")->check(CLI::IsMember({"kernel", "image"}));
  sp->add_option("--grid", gridSpec, "default | file:<path> | random:<count>");
  addCommonFlags(sp, common);

  // quad-basis
  auto* qb = app.add_subcommand("quad-basis",
                                "basis of quadratic forms vanishing on the sampled image cone");
  qb->add_option("--operator", operatorRef, "potential operator file or zoo:...")->required();
  qb->add_option("--grid", gridSpec, "default | file:<path> | random:<count>");
  addCommonFlags(qb, common);

  // torus-mean
  std::string fieldRef, shiftCsv;
  auto* tm = app.add_subcommand("torus-mean", "exact torus average of f(shift + B field)");
  tm->add_option("--integrand", integrandRef, "integrand file or zoo:...")->required();
  tm->add_option("--operator", operatorRef, "potential operator file or zoo:...")->required();
  tm->add_option("--field", fieldRef, "field file or zoo:bco / zoo:random(...)")->required();
  tm->add_option("--shift", shiftCsv, "comma-separated rationals (default: zero)");
  addCommonFlags(tm, common);

  // verify-witness
  std::string reportPath;
  auto* vw = app.add_subcommand("verify-witness", "re-evaluate a FAIL witness from a report");
  vw->add_option("--integrand", integrandRef, "integrand file or zoo:...")->required();
  vw->add_option("--operator", operatorRef, "potential operator file or zoo:...");
  vw->add_option("--annihilator", annihilatorRef, "annihilator file or zoo:...");
  vw->add_option("--report", reportPath, "report JSON containing the witness")->required();
  addCommonFlags(vw, common);

  // zoo
  std::string zooKind = "operator", zooName, zooOut;
  std::vector<std::string> zooParams;
  auto* zoo = app.add_subcommand("zoo", "list or emit built-in operators/integrands/fields");
  auto* zooList = zoo->add_subcommand("list", "list zoo entries");
  auto* zooEmit = zoo->add_subcommand("emit", "emit one zoo entry as JSON");
  zooEmit->add_option("--kind", zooKind, "operator | integrand | field")
      ->check(CLI::IsMember({"operator", "integrand", "field"}));
  zooEmit->add_option("--name", zooName, "zoo entry name")->required();
  zooEmit->add_option("--param", zooParams, "k=v parameter (repeatable)");
  zooEmit->add_option("-o,--out", zooOut, "output path (default: stdout)");
  zoo->require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("qav");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CheckOptions opts = toCheckOptions(common);

  if (qa->parsed() || la->parsed()) {
    PolyIntegrand f = resolveIntegrand(integrandRef);
    HomOperator B = resolveOperator(operatorRef);
    CheckReport report = qa->parsed() ? quasiaffineCheck(f, B, opts) : lambdaAffineCheck(f, B, opts);
    emitCheckReport(report, common.output, common.reportOut, out);
    return verdictExitCode(report.verdict);
  }

  if (fa->parsed()) {
    PolyIntegrand f = resolveIntegrand(integrandRef);
    HomOperator A = resolveOperator(annihilatorRef);
    SampleGrid grid = resolveGrid(gridSpec, A.baseDim, common.seed);
    CheckReport report = quasiaffineNecessaryFromA(f, A, grid, rMax, opts);
    emitCheckReport(report, common.output, common.reportOut, out);
    return verdictExitCode(report.verdict);
  }

  if (vp->parsed()) {
    HomOperator A = resolveOperator(annihilatorRef);
    HomOperator B = resolveOperator(potentialRef);
    SampleGrid grid = resolveGrid(gridSpec, A.baseDim, common.seed);
    PairCheckReport report = verifyPotentialPair(A, B, grid, common.threads);
    if (common.output == "json") {
      out << pairCheckToJson(report).dump(2) << "\n";
    } else {
      out << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
      out << "symbolic composition: " << (report.compositionZero ? "zero" : "nonzero") << "\n";
      if (!report.compositionZero) {
        out << "  entry (" << report.entryRow << ", " << report.entryCol << "), monomial xi^(";
        for (std::size_t i = 0; i < report.monomial.size(); ++i) {
          if (i) out << ",";
          out << report.monomial[i];
        }
        out << "), coefficient " << ratToString(report.coeff) << "\n";
      }
      out << "rank complement: " << (report.ranksComplement ? "holds" : "fails") << " on "
          << grid.points.size() << " grid frequencies\n";
      if (!report.ranksComplement) {
        out << "  xi = (";
        for (std::size_t i = 0; i < report.witnessXi.size(); ++i) {
          if (i) out << ", ";
          out << report.witnessXi[i];
        }
        out << "), rank A = " << report.rankA << ", rank B = " << report.rankB << "\n";
      }
    }
    return report.pass ? 0 : 1;
  }

  if (rp->parsed()) {
    HomOperator op = resolveOperator(operatorRef);
    SampleGrid grid = resolveGrid(gridSpec, op.baseDim, common.seed);
    RankProbeReport report = constantRankProbe(op, grid, common.threads);
    if (common.output == "json") {
      out << rankProbeToJson(report).dump(2) << "\n";
    } else if (report.constantRank) {
      out << "verdict: PROBABLE-CONSTANT-RANK\n";
      out << "common rank: " << report.commonRank << " on " << grid.points.size()
          << " grid frequencies\n";
    } else {
      out << "verdict: NOT-CONSTANT-RANK\n";
      auto printXi = [&](const std::vector<long>& xi) {
        out << "(";
        for (std::size_t i = 0; i < xi.size(); ++i) {
          if (i) out << ", ";
          out << xi[i];
        }
        out << ")";
      };
      out << "rank ";
      printXi(report.witnessXi1);
      out << " = " << report.rank1 << ", rank ";
      printXi(report.witnessXi2);
      out << " = " << report.rank2 << "\n";
    }
    return report.constantRank ? 3 : 1;
  }

  if (sp->parsed()) {
    HomOperator op = resolveOperator(operatorRef);
    SampleGrid grid = resolveGrid(gridSpec, op.baseDim, common.seed);
    SpanProbeReport report =
        spanningProbe(op, grid, side == "kernel" ? ConeSide::KernelOfA : ConeSide::ImageOfB);
    if (common.output == "json")
      out << spanProbeToJson(report).dump(2) << "\n";
    else
      out << "spans: " << (report.spans ? "true" : "false") << "\nspan dimension: "
          << report.spanDim << " of " << report.ambientDim << "\n";
    return report.spans ? 0 : 3;
  }

  if (qb->parsed()) {
    HomOperator B = resolveOperator(operatorRef);
    SampleGrid grid = resolveGrid(gridSpec, B.baseDim, common.seed);
    QuadBasisReport report = quadraticVanishingBasis(B, grid, opts);
    if (common.output == "json") {
      out << quadBasisToJson(report).dump(2) << "\n";
    } else {
      out << "dimension: " << report.d << "\n";
      out << "forms: " << report.forms.size() << "\n";
      for (std::size_t i = 0; i < report.forms.size(); ++i) {
        out << "form[" << i << "]:\n";
        printMatrixText(report.forms[i], out, "  ");
      }
      if (!report.rejected.empty()) out << "rejected: " << report.rejected.size() << "\n";
      out << "certificate: " << report.certificate << "\n";
    }
    return 0;
  }

  if (tm->parsed()) {
    PolyIntegrand f = resolveIntegrand(integrandRef);
    HomOperator B = resolveOperator(operatorRef);
    TrigField field = resolveField(fieldRef);
    RatVec shift = parseShift(shiftCsv, f.d);
    Rat mean = torusAverage(f, shift, B, field);
    Rat atShift = f.poly.eval(shift);
    if (common.output == "json") {
      Json j;
      j["mean"] = ratToString(mean);
      j["shiftValue"] = ratToString(atShift);
      j["defect"] = ratToString(Rat(mean - atShift));
      out << j.dump(2) << "\n";
    } else {
      out << "mean = " << ratToString(mean) << "\n";
      out << "f(shift) = " << ratToString(atShift) << "\n";
      out << "defect = " << ratToString(Rat(mean - atShift)) << "\n";
    }
    return 0;
  }

  if (vw->parsed()) {
    PolyIntegrand f = resolveIntegrand(integrandRef);
    CheckReport report = reportFromJson(loadJsonFile(reportPath));
    if (!report.witness) {
      err << "error: report carries no witness\n";
      return 2;
    }
    const Witness& w = *report.witness;
    DerivativeTensor T = DerivativeTensor::of(f, w.r);

    std::vector<RatVec> coneVectors;
    if (!operatorRef.empty()) {
      HomOperator B = resolveOperator(operatorRef);
      if (w.frequencies.size() != static_cast<std::size_t>(w.r) ||
          w.directions.size() != static_cast<std::size_t>(w.r)) {
        err << "error: witness needs " << w.r << " frequencies and directions\n";
        return 2;
      }
      for (int j = 0; j < w.r; ++j)
        coneVectors.push_back(symbolAt(B, w.frequencies[j]).apply(w.directions[j]));
    } else if (!annihilatorRef.empty()) {
      HomOperator A = resolveOperator(annihilatorRef);
      for (std::size_t j = 0; j < w.frequencies.size(); ++j) {
        RatVec residual = symbolAt(A, w.frequencies[j]).apply(w.directions[j]);
        if (!isZeroVec(residual)) {
          out << "witness direction " << j + 1 << " is not in the kernel of the symbol\n";
          return 1;
        }
      }
      coneVectors = w.directions;
    } else {
      coneVectors = w.coneVectors;
    }

    Rat value = T.apply(w.x, coneVectors);
    bool sound = !isZero(value) && value == w.value;
    if (common.output == "json") {
      Json j;
      j["reEvaluated"] = ratToString(value);
      j["recorded"] = ratToString(w.value);
      j["sound"] = sound;
      out << j.dump(2) << "\n";
    } else {
      out << "witness re-evaluates to " << ratToString(value) << " (recorded "
          << ratToString(w.value) << "): " << (sound ? "sound" : "NOT sound") << "\n";
    }
    return sound ? 0 : 1;
  }

  if (zooList->parsed()) {
    out << "operators:\n";
    for (const auto& entry : zooOperatorList()) {
      out << "  " << entry.name << "(";
      for (std::size_t i = 0; i < entry.params.size(); ++i) {
        if (i) out << ", ";
        out << entry.params[i];
      }
      out << "): " << entry.description << "\n";
    }
    out << "integrands:\n";
    for (const auto& entry : zooIntegrandList()) {
      out << "  " << entry.name << "(";
      for (std::size_t i = 0; i < entry.params.size(); ++i) {
        if (i) out << ", ";
        out << entry.params[i];
      }
      out << "): " << entry.description << "\n";
    }
    out << "fields:\n";
    out << "  bco(): the three-mode counterexample field, N = 2, m = 3\n";
    out << "  random(N, m, modes, bound, seed): seeded random zero-mean field\n";
    return 0;
  }

  if (zooEmit->parsed()) {
    std::map<std::string, std::string> params;
    for (const auto& piece : zooParams) {
      auto eq = piece.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("malformed --param '" + piece + "' (expected k=v)");
      params[piece.substr(0, eq)] = piece.substr(eq + 1);
    }
    Json j;
    if (zooKind == "operator") {
      j = operatorToJson(zooOperator(zooName, toLongParams(params)));
    } else if (zooKind == "integrand") {
      j = integrandToJson(zooIntegrand(zooName, params));
    } else {
      std::string ref = "zoo:" + zooName;
      if (!params.empty()) {
        ref += "(";
        bool first = true;
        for (const auto& [k, v] : params) {
          if (!first) ref += ",";
          ref += k + "=" + v;
          first = false;
        }
        ref += ")";
      }
      j = fieldToJson(resolveField(ref));
    }
    if (zooOut.empty())
      out << j.dump(2) << "\n";
    else
      saveJsonFile(j, zooOut);
    return 0;
  }

  err << "error: no command\n";
  return 2;
}

}  // namespace

}  // namespace qav
