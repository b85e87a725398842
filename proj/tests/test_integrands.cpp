#include <doctest.h>

#include "qav/integrand_zoo.hpp"
#include "qav/operator_zoo.hpp"
#include "test_support.hpp"

using namespace qav;
using testsupport::randomIntegrand;
using testsupport::randomRat;
using testsupport::randomRatVec;

namespace {

// Independent oracle: D^r f(x)[v_1..v_r] summed over ordered index tuples
// with iterated formal differentiation, no tensor machinery.
Rat bruteForceApply(const PolyIntegrand& f, int r, const RatVec& x,
                    const std::vector<RatVec>& vectors) {
  Rat acc(0);
  std::vector<int> idx(r, 0);
  for (;;) {
    SparsePoly p = f.poly;
    for (int j = 0; j < r; ++j) p = p.diff(idx[j]);
    if (!p.isZero()) {
      Rat prod = p.eval(x);
      for (int j = 0; j < r; ++j) prod *= vectors[j][idx[j]];
      acc += prod;
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == f.d - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return acc;
}

// The three cone directions behind the counterexample field: B[lambda_k] e_k
// for the hessian with lambda = (1,0), (0,1), (1,1).
std::vector<RatVec> bcoDirections() {
  HomOperator hessian = makeHessian(2, 3);
  std::vector<std::vector<long>> lambdas = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<RatVec> vs;
  for (int k = 0; k < 3; ++k) {
    RatVec w(3, Rat(0));
    w[k] = 1;
    vs.push_back(symbolAtInt(hessian, lambdas[k]).apply(w));
  }
  return vs;
}

}  // namespace

TEST_SUITE_BEGIN("integrands");

TEST_CASE("second derivative of det2 is the constant symplectic pairing") {
  PolyIntegrand det = makeDet(2);
  DerivativeTensor T = DerivativeTensor::of(det, 2);
  RatVec x(4, Rat(0));
  auto unit = [](int i) {
    RatVec v(4, Rat(0));
    v[i] = 1;
    return v;
  };
  CHECK(T.apply(x, {unit(0), unit(3)}) == Rat(1));
  CHECK(T.apply(x, {unit(1), unit(2)}) == Rat(-1));
  CHECK(T.apply(x, {unit(0), unit(0)}) == Rat(0));
  CHECK(T.apply(x, {unit(3), unit(3)}) == Rat(0));
}

TEST_CASE("hessian of the squared norm is twice the identity") {
  PolyIntegrand n2 = makeNormSquared(5);
  DerivativeTensor T = DerivativeTensor::of(n2, 2);
  DetRng rng(201);
  RatVec x = randomRatVec(rng, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      RatVec ei(5, Rat(0)), ej(5, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      CHECK(T.apply(x, {ei, ej}) == (i == j ? Rat(2) : Rat(0)));
    }
}

TEST_CASE("fourth derivative of a cubic vanishes") {
  CHECK(DerivativeTensor::of(makeBcoL(), 4).isZeroTensor());
  CHECK(DerivativeTensor::of(makeDet(2), 3).isZeroTensor());
}

TEST_CASE("rank-one directions annihilate the det2 second derivative") {
  PolyIntegrand det = makeDet(2);
  DerivativeTensor T = DerivativeTensor::of(det, 2);
  DetRng rng(211);
  for (int i = 0; i < 1000; ++i) {
    RatVec xi = randomRatVec(rng, 2, 3, 2);
    RatVec w1 = randomRatVec(rng, 2, 3, 2);
    RatVec w2 = randomRatVec(rng, 2, 3, 2);
    // Row-major xi (x) w.
    auto rankOne = [&](const RatVec& w) {
      RatVec v(4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) v[a * 2 + b] = xi[a] * w[b];
      return v;
    };
    RatVec x = randomRatVec(rng, 4, 3, 2);
    CHECK(T.apply(x, {rankOne(w1), rankOne(w2)}) == Rat(0));
  }
}

TEST_CASE("third derivative of bcoL against the counterexample directions") {
  PolyIntegrand L = makeBcoL();
  DerivativeTensor T = DerivativeTensor::of(L, 3);
  std::vector<RatVec> vs = bcoDirections();
  RatVec x(9, Rat(0));

  // Frozen values, confirmed by the ordered-tuple brute force below:
  // slotwise application gives -1, the fully symmetrized diagonal gives -6.
  CHECK(T.apply(x, vs) == Rat(-1));
  CHECK(bruteForceApply(L, 3, x, vs) == Rat(-1));

  RatVec h(9, Rat(0));
  for (const RatVec& v : vs)
    for (int c = 0; c < 9; ++c) h[c] += v[c];
  CHECK(T.apply(x, {h, h, h}) == Rat(-6));
  CHECK(bruteForceApply(L, 3, x, {h, h, h}) == Rat(-6));
}

TEST_CASE("property: applyTensor agrees with the ordered-tuple brute force") {
  DetRng rng(221);
  for (int i = 0; i < 300; ++i) {
    int d = static_cast<int>(rng.nextInt(2, 4));
    int r = static_cast<int>(rng.nextInt(1, 3));
    PolyIntegrand f = randomIntegrand(rng, d, 4, 5);
    std::vector<RatVec> vs;
    for (int j = 0; j < r; ++j) vs.push_back(randomRatVec(rng, d, 2, 2));
    RatVec x = randomRatVec(rng, d, 2, 2);
    DerivativeTensor T = DerivativeTensor::of(f, r);
    CHECK(T.apply(x, vs) == bruteForceApply(f, r, x, vs));
  }
}

TEST_CASE("property: applyTensor is symmetric in the vector list") {
  DetRng rng(231);
  for (int i = 0; i < 1000; ++i) {
    int d = static_cast<int>(rng.nextInt(2, 4));
    PolyIntegrand f = randomIntegrand(rng, d, 4, 5);
    DerivativeTensor T = DerivativeTensor::of(f, 3);
    std::vector<RatVec> vs = {randomRatVec(rng, d, 2, 2), randomRatVec(rng, d, 2, 2),
                              randomRatVec(rng, d, 2, 2)};
    RatVec x = randomRatVec(rng, d, 2, 2);
    Rat base = T.apply(x, vs);
    std::vector<RatVec> swapped = {vs[2], vs[0], vs[1]};
    CHECK(T.apply(x, swapped) == base);
    std::swap(vs[0], vs[1]);
    CHECK(T.apply(x, vs) == base);
  }
}

TEST_CASE("property: applyTensor is multilinear in each slot") {
  DetRng rng(241);
  for (int i = 0; i < 1000; ++i) {
    int d = static_cast<int>(rng.nextInt(2, 4));
    PolyIntegrand f = randomIntegrand(rng, d, 4, 5);
    DerivativeTensor T = DerivativeTensor::of(f, 2);
    RatVec a = randomRatVec(rng, d, 2, 2), b = randomRatVec(rng, d, 2, 2),
           c = randomRatVec(rng, d, 2, 2);
    RatVec x = randomRatVec(rng, d, 2, 2);
    Rat t = randomRat(rng, 3, 2);
    RatVec combo(d);
    for (int k = 0; k < d; ++k) combo[k] = a[k] + t * b[k];
    CHECK(T.apply(x, {combo, c}) == T.apply(x, {a, c}) + t * T.apply(x, {b, c}));
  }
}

TEST_CASE("property: exact Taylor expansion through the derivative tensors") {
  DetRng rng(251);
  for (int i = 0; i < 1000; ++i) {
    int d = static_cast<int>(rng.nextInt(2, 3));
    PolyIntegrand f = randomIntegrand(rng, d, 4, 4);
    RatVec x = randomRatVec(rng, d, 2, 2);
    RatVec h = randomRatVec(rng, d, 2, 2);
    RatVec moved(d);
    for (int c = 0; c < d; ++c) moved[c] = x[c] + h[c];
    Rat sum = f.poly.eval(x);
    Rat factorial(1);
    std::vector<RatVec> hs;
    for (int r = 1; r <= std::max(f.degree, 0); ++r) {
      factorial *= r;
      hs.push_back(h);
      sum += DerivativeTensor::of(f, r).apply(x, hs) / factorial;
    }
    CHECK(sum == f.poly.eval(moved));
  }
}

TEST_CASE("homogeneous parts of integrands") {
  SparsePoly p(2);
  p.addTerm({0, 0}, Rat(1));
  p.addTerm({1, 0}, Rat(1));
  p.addTerm({1, 1}, Rat(1));
  auto parts = homogeneousParts(makeIntegrand(p));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].degree == 0);
  CHECK(parts[1].degree == 1);
  CHECK(parts[2].degree == 2);

  CHECK(homogeneousParts(makeDet(3)).size() == 1);

  PolyIntegrand detPlusTrace = makeDet(2);
  SparsePoly trace(4);
  trace.addTerm({1, 0, 0, 0}, Rat(1));
  trace.addTerm({0, 0, 0, 1}, Rat(1));
  auto mixed = homogeneousParts(makeIntegrand(detPlusTrace.poly + trace));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].poly == trace);
  CHECK(mixed[1].poly == makeDet(2).poly);
}

TEST_CASE("zoo integrands") {
  PolyIntegrand det2 = makeDet(2);
  CHECK(det2.d == 4);
  CHECK(det2.degree == 2);
  CHECK(det2.poly.coefficient({1, 0, 0, 1}) == Rat(1));
  CHECK(det2.poly.coefficient({0, 1, 1, 0}) == Rat(-1));

  PolyIntegrand dot3 = makeDot(3);
  CHECK(dot3.d == 6);
  CHECK(dot3.poly.terms().size() == 3);
  CHECK(dot3.poly.eval(ratVec({1, 2, 3, 4, 5, 6})) == Rat(32));

  PolyIntegrand L = makeBcoL();
  CHECK(L.d == 9);
  CHECK(L.degree == 3);
  CHECK(L.poly.terms().size() == 6);

  // A 2x2 minor of the 2x3 layout equals det2 on the selected entries.
  PolyIntegrand minor = makeMinor(2, 3, {0, 1}, {0, 2});
  RatVec v = ratVec({1, 9, 2, 3, 9, 4});
  CHECK(minor.poly.eval(v) == Rat(1 * 4 - 2 * 3));

  CHECK_THROWS_AS(makeMinor(2, 3, {0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(makeMinor(2, 3, {0, 2}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(zooIntegrand("mystery", {}), std::invalid_argument);
  CHECK(zooIntegrand("minor", {{"R", "2"}, {"C", "3"}, {"rows", "12"}, {"cols", "13"}}).poly ==
        minor.poly);
}

TEST_SUITE_END();
