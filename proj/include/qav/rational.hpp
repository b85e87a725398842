#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qav {

// Exact rational scalar. GMP keeps values canonical (gcd 1, denominator > 0),
// which is what the serialization below relies on.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument.
Rat ratFromString(const std::string& s);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string ratToString(const Rat& q);

inline bool isZero(const Rat& q) { return sgn(q) == 0; }

Rat ratPow(const Rat& base, unsigned exponent);
Int intPow(const Int& base, unsigned exponent);

RatVec ratVec(std::initializer_list<long> entries);
RatVec ratVecOfLongs(const std::vector<long>& entries);
bool isZeroVec(const RatVec& v);

std::string ratVecToString(const RatVec& v);

}  // namespace qav
