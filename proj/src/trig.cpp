#include "qav/trig.hpp"

#include <algorithm>
#include <stdexcept>

namespace qav {

namespace {

using FreqMap = std::map<std::vector<long>, CRat>;

void addInto(FreqMap& target, const std::vector<long>& lambda, const CRat& c) {
  if (c.isZero()) return;
  auto [it, inserted] = target.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) target.erase(it);
  }
}

void guardSupport(std::size_t size, std::uint64_t ceiling) {
  if (size > ceiling)
    throw std::runtime_error("trigonometric support exceeds the ceiling of " +
                             std::to_string(ceiling) + " stored frequencies");
}

FreqMap convolve(const FreqMap& a, const FreqMap& b, std::uint64_t ceiling) {
  FreqMap out;
  std::vector<long> sum;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      sum.resize(la.size());
      for (std::size_t i = 0; i < la.size(); ++i) sum[i] = la[i] + lb[i];
      addInto(out, sum, ca * cb);
      guardSupport(out.size(), ceiling);
    }
  return out;
}

}  // namespace

void validateField(const TrigField& field) {
  if (field.N <= 0) throw std::invalid_argument("field: torus dimension must be positive");
  if (field.m <= 0) throw std::invalid_argument("field: amplitude length must be positive");
  int index = 0;
  for (const auto& mode : field.modes) {
    if (static_cast<int>(mode.lambda.size()) != field.N)
      throw std::invalid_argument("field: mode " + std::to_string(index) +
                                  " frequency length differs from N");
    bool zero = true;
    for (long c : mode.lambda) zero = zero && c == 0;
    if (zero)
      throw std::invalid_argument("field: mode " + std::to_string(index) +
                                  " has zero frequency (fields are zero-mean)");
    if (static_cast<int>(mode.amplitude.size()) != field.m)
      throw std::invalid_argument("field: mode " + std::to_string(index) +
                                  " amplitude length differs from m");
    ++index;
  }
}

TrigPoly::TrigPoly(int N, int valueDim) : N_(N), valueDim_(valueDim) {
  if (N <= 0 || valueDim <= 0) throw std::invalid_argument("TrigPoly: dimensions must be positive");
}

void TrigPoly::add(const std::vector<long>& lambda, int component, const CRat& c) {
  if (static_cast<int>(lambda.size()) != N_)
    throw std::invalid_argument("TrigPoly: frequency length differs from N");
  if (c.isZero()) return;
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) it = coeffs_.emplace(lambda, std::vector<CRat>(valueDim_)).first;
  it->second[component] += c;
  bool allZero = true;
  for (const CRat& x : it->second) allZero = allZero && x.isZero();
  if (allZero) coeffs_.erase(it);
}

CRat TrigPoly::coefficient(const std::vector<long>& lambda, int component) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? CRat{} : it->second[component];
}

std::vector<CRat> TrigPoly::meanVector() const {
  auto it = coeffs_.find(std::vector<long>(N_, 0));
  return it == coeffs_.end() ? std::vector<CRat>(valueDim_) : it->second;
}

bool TrigPoly::realityHolds() const {
  std::vector<long> neg;
  for (const auto& [lambda, amps] : coeffs_) {
    neg.resize(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
    auto it = coeffs_.find(neg);
    for (int c = 0; c < valueDim_; ++c) {
      CRat mirror = it == coeffs_.end() ? CRat{} : it->second[c];
      if (!(mirror == amps[c].conj())) return false;
    }
  }
  return true;
}

long TrigPoly::maxFrequency() const {
  long out = 0;
  for (const auto& [lambda, amps] : coeffs_)
    for (long c : lambda) out = std::max(out, c < 0 ? -c : c);
  return out;
}

TrigPoly TrigPoly::translated(const RatVec& offset) const {
  if (static_cast<int>(offset.size()) != N_)
    throw std::invalid_argument("translate: offset length differs from N");
  TrigPoly out(N_, valueDim_);
  for (const auto& [lambda, amps] : coeffs_) {
    Rat dot(0);
    for (int i = 0; i < N_; ++i) dot += offset[i] * Rat(lambda[i]);
    Rat scaled = dot * 4;
    if (scaled.get_den() != 1)
      throw std::invalid_argument("translate: offsets must be quarter-integers");
    long phase = mpz_class(scaled.get_num() % 4).get_si();
    if (phase < 0) phase += 4;
    // e^{2 pi i lambda . offset} = i^phase
    static const CRat units[4] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)},
                                  {Rat(0), Rat(-1)}};
    for (int c = 0; c < valueDim_; ++c) out.add(lambda, c, amps[c] * units[phase]);
  }
  return out;
}

TrigPoly applySymbol(const HomOperator& B, const TrigField& field) {
  validateField(field);
  if (field.N != B.baseDim)
    throw std::invalid_argument("applySymbol: field torus dimension differs from baseDim");
  if (field.m != B.inDim)
    throw std::invalid_argument("applySymbol: field amplitude length differs from inDim");
  TrigPoly out(B.baseDim, B.outDim);
  const Rat half(1, 2);
  for (const auto& mode : field.modes) {
    RatVec a = symbolAtInt(B, mode.lambda).apply(mode.amplitude);
    bool outCos = (B.order % 2 == 0) ? mode.cosPhase : !mode.cosPhase;
    std::vector<long> neg(mode.lambda.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -mode.lambda[i];
    for (int c = 0; c < B.outDim; ++c) {
      if (isZero(a[c])) continue;
      Rat h = a[c] * half;
      if (outCos) {
        out.add(mode.lambda, c, {h, Rat(0)});
        out.add(neg, c, {h, Rat(0)});
      } else {
        out.add(mode.lambda, c, {Rat(0), -h});
        out.add(neg, c, {Rat(0), h});
      }
    }
  }
  return out;
}

TrigPoly composeIntegrand(const PolyIntegrand& f, const RatVec& shift, const TrigPoly& u,
                          std::uint64_t supportCeiling) {
  if (f.d != u.valueDim())
    throw std::invalid_argument("composeIntegrand: integrand dimension differs from valueDim");
  if (static_cast<int>(shift.size()) != f.d)
    throw std::invalid_argument("composeIntegrand: shift length differs from d");
  const int N = u.torusDim();
  const std::vector<long> zero(N, 0);

  // Scalar map per coordinate: shift + u_c.
  std::vector<FreqMap> coord(f.d);
  for (int c = 0; c < f.d; ++c) addInto(coord[c], zero, {shift[c], Rat(0)});
  for (const auto& [lambda, amps] : u.coefficients())
    for (int c = 0; c < f.d; ++c) addInto(coord[c], lambda, amps[c]);

  // Power tables, grown on demand.
  std::vector<std::vector<FreqMap>> powers(f.d);
  auto powerOf = [&](int c, unsigned e) -> const FreqMap& {
    auto& table = powers[c];
    if (table.empty()) {
      table.emplace_back();
      addInto(table.back(), zero, {Rat(1), Rat(0)});
    }
    while (table.size() <= e) table.push_back(convolve(table.back(), coord[c], supportCeiling));
    return table[e];
  };

  FreqMap acc;
  for (const auto& [alpha, coeff] : f.poly.terms()) {
    FreqMap term;
    addInto(term, zero, {coeff, Rat(0)});
    for (int v = 0; v < f.d; ++v)
      if (alpha[v] > 0) term = convolve(term, powerOf(v, alpha[v]), supportCeiling);
    for (const auto& [lambda, c] : term) addInto(acc, lambda, c);
    guardSupport(acc.size(), supportCeiling);
  }

  TrigPoly out(N, 1);
  for (const auto& [lambda, c] : acc) out.add(lambda, 0, c);
  return out;
}

Rat torusAverage(const PolyIntegrand& f, const RatVec& shift, const HomOperator& B,
                 const TrigField& field, std::uint64_t supportCeiling) {
  TrigPoly composed = composeIntegrand(f, shift, applySymbol(B, field), supportCeiling);
  CRat mean = composed.meanVector()[0];
  if (!isZero(mean.im)) throw std::logic_error("torus mean of a real integrand came out complex");
  return mean.re;
}

TrigField randomField(DetRng& rng, int N, int m, int modeCount, long freqBound) {
  TrigField field;
  field.N = N;
  field.m = m;
  for (int k = 0; k < modeCount; ++k) {
    TrigMode mode;
    mode.lambda.resize(N);
    do {
      for (long& c : mode.lambda) c = rng.nextInt(-freqBound, freqBound);
    } while (std::all_of(mode.lambda.begin(), mode.lambda.end(), [](long c) { return c == 0; }));
    mode.cosPhase = rng.nextBool();
    mode.amplitude.resize(m);
    for (auto& a : mode.amplitude) {
      a = Rat(rng.nextInt(-3, 3), rng.nextInt(1, 2));
      a.canonicalize();
    }
    field.modes.push_back(std::move(mode));
  }
  return field;
}

}  // namespace qav
