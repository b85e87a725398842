#include "qav/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qav {

SparsePoly::SparsePoly(int variableCount) : vars_(variableCount) {
  if (variableCount < 0) throw std::invalid_argument("negative variable count");
}

SparsePoly SparsePoly::constant(int variableCount, const Rat& c) {
  SparsePoly p(variableCount);
  p.addTerm(MultiIndex(variableCount, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(int variableCount, int index) {
  MultiIndex alpha(variableCount, 0);
  alpha.at(index) = 1;
  return monomial(variableCount, alpha, Rat(1));
}

SparsePoly SparsePoly::monomial(int variableCount, MultiIndex alpha, const Rat& c) {
  SparsePoly p(variableCount);
  p.addTerm(alpha, c);
  return p;
}

int SparsePoly::totalDegree() const {
  int deg = -1;
  for (const auto& [alpha, c] : terms_) deg = std::max(deg, static_cast<int>(orderOf(alpha)));
  return deg;
}

int SparsePoly::degreeIn(int variable) const {
  int deg = 0;
  for (const auto& [alpha, c] : terms_) deg = std::max(deg, static_cast<int>(alpha[variable]));
  return deg;
}

Rat SparsePoly::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::addTerm(const MultiIndex& alpha, const Rat& c) {
  if (static_cast<int>(alpha.size()) != vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (qav::isZero(c)) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (qav::isZero(it->second)) terms_.erase(it);
  }
}

void SparsePoly::addScaled(const SparsePoly& p, const Rat& c) {
  if (p.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  if (qav::isZero(c)) return;
  for (const auto& [alpha, coeff] : p.terms_) addTerm(alpha, coeff * c);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& p) {
  addScaled(p, Rat(1));
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& p) {
  addScaled(p, Rat(-1));
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (qav::isZero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& p) const {
  SparsePoly out = *this;
  out += p;
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& p) const {
  SparsePoly out = *this;
  out -= p;
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& p) const {
  if (p.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
  SparsePoly out(vars_);
  MultiIndex gamma(vars_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : p.terms_) {
      for (int v = 0; v < vars_; ++v) gamma[v] = a[v] + b[v];
      out.addTerm(gamma, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
  SparsePoly out = *this;
  out *= c;
  return out;
}

SparsePoly SparsePoly::operator-() const { return *this * Rat(-1); }

Rat SparsePoly::eval(const RatVec& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw std::invalid_argument("evaluation point length mismatch");
  // Power tables per variable, filled on demand.
  std::vector<RatVec> pw(vars_);
  Rat acc(0);
  Rat term;
  for (const auto& [alpha, c] : terms_) {
    term = c;
    for (int v = 0; v < vars_; ++v) {
      unsigned e = alpha[v];
      if (e == 0) continue;
      auto& table = pw[v];
      if (table.empty()) table.push_back(Rat(1));
      while (table.size() <= e) table.push_back(table.back() * point[v]);
      term *= table[e];
    }
    acc += term;
  }
  return acc;
}

SparsePoly SparsePoly::diff(int variable) const {
  if (variable < 0 || variable >= vars_) throw std::invalid_argument("variable out of range");
  SparsePoly out(vars_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[variable] == 0) continue;
    MultiIndex beta = alpha;
    --beta[variable];
    out.addTerm(beta, c * Rat(alpha[variable]));
  }
  return out;
}

SparsePoly SparsePoly::shiftArgument(const RatVec& offset) const {
  if (static_cast<int>(offset.size()) != vars_)
    throw std::invalid_argument("shift vector length mismatch");
  SparsePoly out(vars_);
  for (const auto& [alpha, c] : terms_) {
    // Expand c * prod_v (x_v + offset[v])^alpha[v] one factor at a time.
    SparsePoly term = SparsePoly::constant(vars_, c);
    for (int v = 0; v < vars_; ++v) {
      if (alpha[v] == 0) continue;
      SparsePoly factor = SparsePoly::variable(vars_, v);
      factor.addTerm(MultiIndex(vars_, 0), offset[v]);
      for (unsigned e = 0; e < alpha[v]; ++e) term = term * factor;
    }
    out += term;
  }
  return out;
}

std::map<int, SparsePoly> SparsePoly::homogeneousParts() const {
  std::map<int, SparsePoly> parts;
  for (const auto& [alpha, c] : terms_) {
    int deg = static_cast<int>(orderOf(alpha));
    auto it = parts.find(deg);
    if (it == parts.end()) it = parts.emplace(deg, SparsePoly(vars_)).first;
    it->second.addTerm(alpha, c);
  }
  return parts;
}

std::string SparsePoly::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [alpha, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += ratToString(c);
    for (int v = 0; v < vars_; ++v) {
      if (alpha[v] == 0) continue;
      s += "*x" + std::to_string(v);
      if (alpha[v] > 1) s += "^" + std::to_string(alpha[v]);
    }
  }
  return s;
}

}  // namespace qav
