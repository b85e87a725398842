#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qav/hom_operator.hpp"
#include "qav/integrand.hpp"
#include "qav/rational.hpp"
#include "qav/sample_grid.hpp"

namespace qav {

struct CRat {
  Rat re{0}, im{0};
  bool isZero() const { return qav::isZero(re) && qav::isZero(im); }
  CRat conj() const { return {re, -im}; }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat operator*(const CRat& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  bool operator==(const CRat& o) const = default;
};

// Zero-mean test field given by explicit cos/sin modes.
struct TrigMode {
  std::vector<long> lambda;  // nonzero integer frequency
  bool cosPhase = true;
  RatVec amplitude;
};

struct TrigField {
  int N = 0;
  int m = 0;  // amplitude length
  std::vector<TrigMode> modes;
};

void validateField(const TrigField& field);

// Vector-valued trigonometric polynomial on the N-torus in the complex
// exponential basis with rational coefficients. Real-valued by construction:
// coeff(-lambda) == conj(coeff(lambda)).
class TrigPoly {
 public:
  TrigPoly(int N, int valueDim);

  int torusDim() const { return N_; }
  int valueDim() const { return valueDim_; }
  const std::map<std::vector<long>, std::vector<CRat>>& coefficients() const { return coeffs_; }

  void add(const std::vector<long>& lambda, int component, const CRat& c);
  CRat coefficient(const std::vector<long>& lambda, int component) const;
  // coeff(0): for real-valued polys this is the exact torus mean.
  std::vector<CRat> meanVector() const;
  bool realityHolds() const;
  long maxFrequency() const;  // max |lambda_c| over the support

  // y -> y + offset; offset components must be quarter-integers so the phase
  // factors stay rational.
  TrigPoly translated(const RatVec& offset) const;

 private:
  int N_, valueDim_;
  std::map<std::vector<long>, std::vector<CRat>> coeffs_;
};

// Applies the symbol of B mode-wise: the mode-lambda amplitude becomes
// B[lambda] w, with cos/sin phases kept for even order and exchanged for odd
// order. The scalar prefactor of literal differentiation is dropped; the
// output is still annihilated frequency-wise by any verified annihilator.
TrigPoly applySymbol(const HomOperator& B, const TrigField& field);

// Exact expansion of f(shift + u(y)) by convolution of frequency maps.
// Throws when an intermediate support exceeds `supportCeiling`.
TrigPoly composeIntegrand(const PolyIntegrand& f, const RatVec& shift, const TrigPoly& u,
                          std::uint64_t supportCeiling = 1'000'000);

// The exact mean of f(shift + B field): coeff(0) of the composition.
Rat torusAverage(const PolyIntegrand& f, const RatVec& shift, const HomOperator& B,
                 const TrigField& field, std::uint64_t supportCeiling = 1'000'000);

// Seeded random zero-mean field: `modeCount` modes with frequencies in
// [-freqBound, freqBound]^N \ {0} and small rational amplitudes.
TrigField randomField(DetRng& rng, int N, int m, int modeCount, long freqBound);

}  // namespace qav
