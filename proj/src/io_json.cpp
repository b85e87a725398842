#include "qav/io_json.hpp"

#include <fstream>
#include <stdexcept>

namespace qav {

namespace {

[[noreturn]] void fieldError(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fieldError(where, std::string("missing field '") + key + "'");
  return *it;
}

int requireInt(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) fieldError(where, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json ratVecToJson(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(ratToString(x));
  return out;
}

RatVec ratVecFromJson(const Json& j, const std::string& where) {
  if (!j.is_array()) fieldError(where, "expected an array of rationals");
  RatVec out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) fieldError(where, "rational entries must be strings like \"p/q\"");
    try {
      out.push_back(ratFromString(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      fieldError(where, ex.what());
    }
  }
  return out;
}

Json longVecToJson(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

std::vector<long> longVecFromJson(const Json& j, const std::string& where) {
  if (!j.is_array()) fieldError(where, "expected an array of integers");
  std::vector<long> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fieldError(where, "entries must be integers");
    out.push_back(e.get<long>());
  }
  return out;
}

Json matrixToJson(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ratToString(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrixFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fieldError(where, "matrix must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (int r = 0; r < rows; ++r)
    if (!j[r].is_array()) fieldError(where, "matrix rows must be arrays");
  cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols)
      fieldError(where, "ragged matrix: row " + std::to_string(r) + " has " +
                            std::to_string(j[r].size()) + " entries, expected " +
                            std::to_string(cols));
    RatVec row = ratVecFromJson(j[r], where + ".row" + std::to_string(r));
    for (int c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

}  // namespace

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::invalid_argument("'" + path + "': " + ex.what());
  }
}

void saveJsonFile(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Json operatorToJson(const HomOperator& op) {
  Json j;
  j["name"] = op.name;
  j["N"] = op.baseDim;
  j["inDim"] = op.inDim;
  j["outDim"] = op.outDim;
  j["order"] = op.order;
  Json terms = Json::array();
  for (const auto& [alpha, mat] : op.terms) {
    Json term;
    Json a = Json::array();
    for (auto e : alpha) a.push_back(e);
    term["alpha"] = std::move(a);
    term["matrix"] = matrixToJson(mat);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

HomOperator operatorFromJson(const Json& j) {
  const std::string where = "operator";
  HomOperator op;
  op.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  op.baseDim = requireInt(j, "N", where);
  op.inDim = requireInt(j, "inDim", where);
  op.outDim = requireInt(j, "outDim", where);
  op.order = requireInt(j, "order", where);
  const Json& terms = require(j, "terms", where);
  if (!terms.is_array()) fieldError(where, "'terms' must be an array");
  int index = 0;
  for (const auto& term : terms) {
    const std::string termWhere = where + ".terms[" + std::to_string(index) + "]";
    std::vector<long> alphaRaw = longVecFromJson(require(term, "alpha", termWhere), termWhere + ".alpha");
    MultiIndex alpha;
    for (long e : alphaRaw) {
      if (e < 0) fieldError(termWhere, "negative exponent in alpha");
      alpha.push_back(static_cast<std::uint32_t>(e));
    }
    RatMatrix mat = matrixFromJson(require(term, "matrix", termWhere), termWhere + ".matrix");
    if (!op.terms.emplace(std::move(alpha), std::move(mat)).second)
      fieldError(termWhere, "duplicate multi-index");
    ++index;
  }
  validateOperator(op);
  return op;
}

Json integrandToJson(const PolyIntegrand& f) {
  Json j;
  j["d"] = f.d;
  Json terms = Json::array();
  for (const auto& [alpha, coeff] : f.poly.terms()) {
    Json term;
    Json e = Json::array();
    for (auto x : alpha) e.push_back(x);
    term["exponents"] = std::move(e);
    term["coeff"] = ratToString(coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyIntegrand integrandFromJson(const Json& j) {
  const std::string where = "integrand";
  int d = requireInt(j, "d", where);
  if (d <= 0) fieldError(where, "'d' must be positive");
  SparsePoly p(d);
  const Json& terms = require(j, "terms", where);
  if (!terms.is_array()) fieldError(where, "'terms' must be an array");
  int index = 0;
  for (const auto& term : terms) {
    const std::string termWhere = where + ".terms[" + std::to_string(index) + "]";
    std::vector<long> expo = longVecFromJson(require(term, "exponents", termWhere), termWhere + ".exponents");
    if (static_cast<int>(expo.size()) != d)
      fieldError(termWhere, "exponent vector length " + std::to_string(expo.size()) +
                                " differs from d = " + std::to_string(d));
    MultiIndex alpha;
    for (long e : expo) {
      if (e < 0) fieldError(termWhere, "negative exponent");
      alpha.push_back(static_cast<std::uint32_t>(e));
    }
    const Json& coeff = require(term, "coeff", termWhere);
    if (!coeff.is_string()) fieldError(termWhere, "'coeff' must be a string like \"p/q\"");
    try {
      p.addTerm(alpha, ratFromString(coeff.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      fieldError(termWhere, ex.what());
    }
    ++index;
  }
  return makeIntegrand(std::move(p));
}

Json fieldToJson(const TrigField& field) {
  Json j;
  j["N"] = field.N;
  j["m"] = field.m;
  Json modes = Json::array();
  for (const auto& mode : field.modes) {
    Json jm;
    jm["lambda"] = longVecToJson(mode.lambda);
    jm["phase"] = mode.cosPhase ? "cos" : "sin";
    jm["amplitude"] = ratVecToJson(mode.amplitude);
    modes.push_back(std::move(jm));
  }
  j["modes"] = std::move(modes);
  return j;
}

TrigField fieldFromJson(const Json& j) {
  const std::string where = "field";
  TrigField field;
  const Json& modes = require(j, "modes", where);
  if (!modes.is_array()) fieldError(where, "'modes' must be an array");
  if (j.contains("N")) field.N = requireInt(j, "N", where);
  if (j.contains("m")) field.m = requireInt(j, "m", where);
  int index = 0;
  for (const auto& jm : modes) {
    const std::string modeWhere = where + ".modes[" + std::to_string(index) + "]";
    TrigMode mode;
    mode.lambda = longVecFromJson(require(jm, "lambda", modeWhere), modeWhere + ".lambda");
    const Json& phase = require(jm, "phase", modeWhere);
    if (!phase.is_string() || (phase != "cos" && phase != "sin"))
      fieldError(modeWhere, "'phase' must be \"cos\" or \"sin\"");
    mode.cosPhase = phase == "cos";
    mode.amplitude = ratVecFromJson(require(jm, "amplitude", modeWhere), modeWhere + ".amplitude");
    if (field.N == 0) field.N = static_cast<int>(mode.lambda.size());
    if (field.m == 0) field.m = static_cast<int>(mode.amplitude.size());
    field.modes.push_back(std::move(mode));
    ++index;
  }
  if (field.N == 0 || field.m == 0)
    fieldError(where, "empty mode list needs explicit 'N' and 'm'");
  validateField(field);
  return field;
}

Json gridToJson(const SampleGrid& grid) {
  Json j;
  j["N"] = grid.N;
  Json points = Json::array();
  for (const auto& p : grid.points) points.push_back(longVecToJson(p));
  j["points"] = std::move(points);
  return j;
}

SampleGrid gridFromJson(const Json& j) {
  const std::string where = "grid";
  int N = requireInt(j, "N", where);
  const Json& points = require(j, "points", where);
  if (!points.is_array()) fieldError(where, "'points' must be an array");
  std::vector<std::vector<long>> pts;
  int index = 0;
  for (const auto& p : points) {
    pts.push_back(longVecFromJson(p, where + ".points[" + std::to_string(index) + "]"));
    ++index;
  }
  try {
    return gridFromPoints(N, std::move(pts));
  } catch (const std::invalid_argument& ex) {
    fieldError(where, ex.what());
  }
}

Json witnessToJson(const Witness& w) {
  Json j;
  j["r"] = w.r;
  j["x"] = ratVecToJson(w.x);
  Json freqs = Json::array();
  for (const auto& xi : w.frequencies) freqs.push_back(ratVecToJson(xi));
  j["frequencies"] = std::move(freqs);
  j["dependenceCoeffs"] = ratVecToJson(w.dependenceCoeffs);
  Json dirs = Json::array();
  for (const auto& dir : w.directions) dirs.push_back(ratVecToJson(dir));
  j["directions"] = std::move(dirs);
  Json cone = Json::array();
  for (const auto& v : w.coneVectors) cone.push_back(ratVecToJson(v));
  j["coneVectors"] = std::move(cone);
  j["value"] = ratToString(w.value);
  return j;
}

Witness witnessFromJson(const Json& j) {
  const std::string where = "witness";
  Witness w;
  w.r = requireInt(j, "r", where);
  w.x = ratVecFromJson(require(j, "x", where), where + ".x");
  for (const auto& xi : require(j, "frequencies", where))
    w.frequencies.push_back(ratVecFromJson(xi, where + ".frequencies"));
  w.dependenceCoeffs =
      ratVecFromJson(require(j, "dependenceCoeffs", where), where + ".dependenceCoeffs");
  for (const auto& dir : require(j, "directions", where))
    w.directions.push_back(ratVecFromJson(dir, where + ".directions"));
  for (const auto& v : require(j, "coneVectors", where))
    w.coneVectors.push_back(ratVecFromJson(v, where + ".coneVectors"));
  const Json& value = require(j, "value", where);
  if (!value.is_string()) fieldError(where, "'value' must be a string like \"p/q\"");
  w.value = ratFromString(value.get<std::string>());
  return w;
}

namespace {

Json certToJson(const OrderCertificate& cert) {
  Json j;
  j["r"] = cert.r;
  if (cert.skipped) {
    j["skipped"] = true;
    j["note"] = cert.note;
  }
  j["xGridSizes"] = longVecToJson(cert.xGridSizes);
  j["xiGridSizes"] = longVecToJson(cert.xiGridSizes);
  j["lambdaGridSizes"] = longVecToJson(cert.lambdaGridSizes);
  if (!cert.wGridSizes.empty()) j["wGridSizes"] = longVecToJson(cert.wGridSizes);
  j["basisCombinations"] = cert.basisCombinations;
  j["plannedEvaluations"] = cert.plannedEvaluations;
  if (cert.trials > 0) j["trials"] = cert.trials;
  return j;
}

OrderCertificate certFromJson(const Json& j) {
  const std::string where = "certificate";
  OrderCertificate cert;
  cert.r = requireInt(j, "r", where);
  cert.skipped = j.contains("skipped") && j["skipped"].get<bool>();
  if (j.contains("note")) cert.note = j["note"].get<std::string>();
  cert.xGridSizes = longVecFromJson(require(j, "xGridSizes", where), where);
  cert.xiGridSizes = longVecFromJson(require(j, "xiGridSizes", where), where);
  cert.lambdaGridSizes = longVecFromJson(require(j, "lambdaGridSizes", where), where);
  if (j.contains("wGridSizes")) cert.wGridSizes = longVecFromJson(j["wGridSizes"], where);
  cert.basisCombinations = require(j, "basisCombinations", where).get<std::uint64_t>();
  cert.plannedEvaluations = require(j, "plannedEvaluations", where).get<std::uint64_t>();
  if (j.contains("trials")) cert.trials = j["trials"].get<std::uint64_t>();
  return cert;
}

}  // namespace

Json reportToJson(const CheckReport& report) {
  Json j;
  j["verdict"] = verdictName(report.verdict);
  j["checkedOrders"] = report.checkedOrders;
  if (report.witness) j["witness"] = witnessToJson(*report.witness);
  Json certs = Json::array();
  for (const auto& cert : report.certificate) certs.push_back(certToJson(cert));
  j["certificate"] = std::move(certs);
  j["mode"] = report.mode;
  j["clause"] = report.clause;
  j["notes"] = report.notes;
  return j;
}

CheckReport reportFromJson(const Json& j) {
  const std::string where = "report";
  CheckReport report;
  const Json& verdict = require(j, "verdict", where);
  report.verdict = verdictFromName(verdict.get<std::string>());
  for (const auto& r : require(j, "checkedOrders", where)) report.checkedOrders.push_back(r.get<int>());
  if (j.contains("witness")) report.witness = witnessFromJson(j["witness"]);
  for (const auto& cert : require(j, "certificate", where))
    report.certificate.push_back(certFromJson(cert));
  report.mode = require(j, "mode", where).get<std::string>();
  if (j.contains("clause")) report.clause = j["clause"].get<std::string>();
  if (j.contains("notes"))
    for (const auto& note : j["notes"]) report.notes.push_back(note.get<std::string>());
  return report;
}

Json quadBasisToJson(const QuadBasisReport& report) {
  Json j;
  j["d"] = report.d;
  Json forms = Json::array();
  for (const auto& Q : report.forms) forms.push_back(matrixToJson(Q));
  j["forms"] = std::move(forms);
  Json rejected = Json::array();
  for (const auto& Q : report.rejected) rejected.push_back(matrixToJson(Q));
  j["rejected"] = std::move(rejected);
  j["certificate"] = report.certificate;
  return j;
}

Json rankProbeToJson(const RankProbeReport& report) {
  Json j;
  j["verdict"] = report.constantRank ? "PROBABLE-CONSTANT-RANK" : "NOT-CONSTANT-RANK";
  if (report.constantRank) {
    j["commonRank"] = report.commonRank;
  } else {
    j["witness"] = Json{{"xi1", longVecToJson(report.witnessXi1)},
                        {"xi2", longVecToJson(report.witnessXi2)},
                        {"rank1", report.rank1},
                        {"rank2", report.rank2}};
  }
  return j;
}

Json spanProbeToJson(const SpanProbeReport& report) {
  Json j;
  j["spans"] = report.spans;
  j["spanDim"] = report.spanDim;
  j["ambientDim"] = report.ambientDim;
  return j;
}

Json pairCheckToJson(const PairCheckReport& report) {
  Json j;
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  j["compositionZero"] = report.compositionZero;
  j["ranksComplement"] = report.ranksComplement;
  if (!report.compositionZero) {
    Json alpha = Json::array();
    for (auto e : report.monomial) alpha.push_back(e);
    j["compositionWitness"] = Json{{"entryRow", report.entryRow},
                                   {"entryCol", report.entryCol},
                                   {"monomial", std::move(alpha)},
                                   {"coeff", ratToString(report.coeff)}};
  }
  if (!report.ranksComplement) {
    j["rankWitness"] = Json{{"xi", longVecToJson(report.witnessXi)},
                            {"rankA", report.rankA},
                            {"rankB", report.rankB}};
  }
  return j;
}

}  // namespace qav
