#include "qav/rational.hpp"

#include <stdexcept>

namespace qav {

Rat ratFromString(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("invalid rational literal: '" + s + "'");
  if (sgn(mpz_class(q.get_den())) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string ratToString(const Rat& q) { return q.get_str(); }

Rat ratPow(const Rat& base, unsigned exponent) {
  if (exponent == 0) return Rat(1);
  Rat out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
  return out;
}

Int intPow(const Int& base, unsigned exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

RatVec ratVec(std::initializer_list<long> entries) {
  RatVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

RatVec ratVecOfLongs(const std::vector<long>& entries) {
  RatVec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

bool isZeroVec(const RatVec& v) {
  for (const Rat& x : v)
    if (!isZero(x)) return false;
  return true;
}

std::string ratVecToString(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += ratToString(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace qav
