#include <doctest.h>

#include "qav/operator_zoo.hpp"
#include "qav/probes.hpp"
#include "test_support.hpp"

using namespace qav;
using testsupport::randomRatVec;

namespace {

// All zoo operators used repeatedly below.
std::vector<HomOperator> zooSamples() {
  return {makeGrad(2, 1), makeGrad(2, 2),  makeGrad(3, 3),
          makeHessian(2, 3), makeCurl(2, 1), makeCurl(3, 2),
          makeDiv(3, 2),     makeDivPotential(3, 3),
          makeDivCurlAnnihilator(2, 1), makeDivCurlPotential(2, 1)};
}

// Operator with symbol xi_1 * I_2: rank drops from 2 to 0 at xi = e_2.
HomOperator rankDropOperator() {
  HomOperator op;
  op.name = "rank-drop";
  op.baseDim = 2;
  op.inDim = 2;
  op.outDim = 2;
  op.order = 1;
  op.terms.emplace(MultiIndex{1, 0}, RatMatrix::identity(2));
  return op;
}

// Symbol [[0, xi_1], [0, xi_2]]: kernel is always span{e_1}.
HomOperator fixedKernelOperator() {
  HomOperator op;
  op.name = "fixed-kernel";
  op.baseDim = 2;
  op.inDim = 2;
  op.outDim = 2;
  op.order = 1;
  RatMatrix a(2, 2), b(2, 2);
  a.at(0, 1) = 1;
  b.at(1, 1) = 1;
  op.terms.emplace(MultiIndex{1, 0}, std::move(a));
  op.terms.emplace(MultiIndex{0, 1}, std::move(b));
  return op;
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("symbol examples") {
  // grad on scalar fields: the symbol is the frequency column.
  RatMatrix g = symbolAt(makeGrad(2, 1), ratVec({1, 2}));
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 1);
  CHECK(g.at(0, 0) == Rat(1));
  CHECK(g.at(1, 0) == Rat(2));

  // hessian on scalar fields at (1,1): all three symmetric components are 1.
  RatMatrix h = symbolAt(makeHessian(2, 1), ratVec({1, 1}));
  CHECK(h.rows() == 3);
  for (int r = 0; r < 3; ++r) CHECK(h.at(r, 0) == Rat(1));

  // div of 2x3 matrix fields at e_1 selects the first column.
  RatMatrix d = symbolAt(makeDiv(3, 2), ratVec({1, 0, 0}));
  CHECK(d.rows() == 2);
  CHECK(d.cols() == 6);
  RatVec v = ratVec({7, 2, 3, -5, 4, 6});
  RatVec out = d.apply(v);
  CHECK(out[0] == Rat(7));
  CHECK(out[1] == Rat(-5));
}

TEST_CASE("property: symbol homogeneity") {
  DetRng rng(101);
  auto ops = zooSamples();
  for (int i = 0; i < 1000; ++i) {
    const HomOperator& op = ops[rng.nextInt(0, static_cast<long>(ops.size()) - 1)];
    RatVec xi = randomRatVec(rng, op.baseDim, 3, 2);
    Rat t = Rat(rng.nextInt(1, 5));
    if (rng.nextBool()) t = -t;
    RatVec txi(xi.size());
    for (std::size_t c = 0; c < xi.size(); ++c) txi[c] = t * xi[c];
    RatMatrix lhs = symbolAt(op, txi);
    RatMatrix rhs = symbolAt(op, xi).scaled(ratPow(t, op.order));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("adjoint is an involution and transposes the symbol") {
  DetRng rng(111);
  for (const HomOperator& op : zooSamples()) {
    HomOperator adj = adjointOf(op);
    HomOperator back = adjointOf(adj);
    CHECK(back.terms == op.terms);
    CHECK(back.inDim == op.inDim);
    CHECK(back.outDim == op.outDim);
    for (int i = 0; i < 50; ++i) {
      RatVec xi = randomRatVec(rng, op.baseDim, 3, 2);
      Rat sign = op.order % 2 == 0 ? Rat(1) : Rat(-1);
      CHECK(symbolAt(adj, xi) == symbolAt(op, xi).transpose().scaled(sign));
    }
  }
}

TEST_CASE("kernelSample examples") {
  // curl on a 2-d vector field: the kernel at xi is the line through xi.
  FrequencySample s = kernelSample(makeCurl(2, 1), ratVec({1, 2}));
  REQUIRE(s.kernelBasis.size() == 1);
  CHECK(s.kernelBasis[0] == ratVec({1, 2}));

  // div of 2x3 fields at e_1: everything with a zero first column.
  FrequencySample t = kernelSample(makeDiv(3, 2), ratVec({1, 0, 0}));
  CHECK(t.kernelBasis.size() == 4);

  CHECK_THROWS_AS(kernelSample(makeCurl(2, 1), ratVec({0, 0})), std::invalid_argument);
}

TEST_CASE("property: kernel vectors satisfy the symbol exactly") {
  DetRng rng(121);
  auto ops = zooSamples();
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const HomOperator& op = ops[rng.nextInt(0, static_cast<long>(ops.size()) - 1)];
    RatVec xi = randomRatVec(rng, op.baseDim, 3, 2);
    if (isZeroVec(xi)) continue;
    RatMatrix symbol = symbolAt(op, xi);
    for (const RatVec& v : nullspaceOf(symbol)) {
      CHECK(isZeroVec(symbol.apply(v)));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("imageSample examples") {
  auto g = imageSample(makeGrad(2, 1), ratVec({1, 2}));
  REQUIRE(g.size() == 1);
  CHECK(g[0] == ratVec({1, 2}));

  auto h = imageSample(makeHessian(2, 1), ratVec({1, 0}));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == ratVec({1, 0, 0}));

  // Column-space reduction oracle: span{xi x e1, xi x e2} at xi = (1,1).
  auto g2 = imageSample(makeGrad(2, 2), ratVec({1, 1}));
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == ratVec({1, 0, 1, 0}));
  CHECK(g2[1] == ratVec({0, 1, 0, 1}));
}

TEST_CASE("constant rank probe") {
  SampleGrid grid3 = defaultSampleGrid(3);
  RankProbeReport div = constantRankProbe(makeDiv(3, 2), grid3);
  CHECK(div.constantRank);
  CHECK(div.commonRank == 2);

  SampleGrid grid2 = defaultSampleGrid(2);
  RankProbeReport grad = constantRankProbe(makeGrad(2, 2), grid2);
  CHECK(grad.constantRank);
  CHECK(grad.commonRank == 2);

  RankProbeReport drop = constantRankProbe(rankDropOperator(), grid2);
  CHECK(!drop.constantRank);
  CHECK(drop.rank1 != drop.rank2);
  // The witness is reproducible from the reported frequencies.
  CHECK(rankOf(symbolAtInt(rankDropOperator(), drop.witnessXi1)) == drop.rank1);
  CHECK(rankOf(symbolAtInt(rankDropOperator(), drop.witnessXi2)) == drop.rank2);
}

TEST_CASE("spanning probe") {
  SampleGrid grid2 = defaultSampleGrid(2);
  SampleGrid grid3 = defaultSampleGrid(3);

  SpanProbeReport gradImage = spanningProbe(makeGrad(2, 2), grid2, ConeSide::ImageOfB);
  CHECK(gradImage.spans);
  CHECK(gradImage.spanDim == 4);

  SpanProbeReport divKernel = spanningProbe(makeDiv(3, 3), grid3, ConeSide::KernelOfA);
  CHECK(divKernel.spans);
  CHECK(divKernel.ambientDim == 9);

  SpanProbeReport stuck = spanningProbe(fixedKernelOperator(), grid2, ConeSide::KernelOfA);
  CHECK(!stuck.spans);
  CHECK(stuck.spanDim == 1);
}

TEST_CASE("verifyPotentialPair certifies the classic pairs") {
  SampleGrid grid2 = defaultSampleGrid(2);
  SampleGrid grid3 = defaultSampleGrid(3);

  CHECK(verifyPotentialPair(makeCurl(2, 1), makeGrad(2, 1), grid2).pass);
  CHECK(verifyPotentialPair(makeCurl(3, 1), makeGrad(3, 1), grid3).pass);
  CHECK(verifyPotentialPair(makeCurl(3, 2), makeGrad(3, 2), grid3).pass);
  CHECK(verifyPotentialPair(makeDiv(3, 3), makeDivPotential(3, 3), grid3).pass);
  CHECK(verifyPotentialPair(makeDivCurlAnnihilator(2, 1), makeDivCurlPotential(2, 1), grid2).pass);

  // div composed with grad is the Laplacian: the composition witness is a
  // second-order diagonal monomial with coefficient 1.
  PairCheckReport broken = verifyPotentialPair(makeDiv(2, 1), makeGrad(2, 1), grid2);
  CHECK(!broken.pass);
  CHECK(!broken.compositionZero);
  CHECK(broken.ranksComplement);
  CHECK(broken.coeff == Rat(1));
  CHECK(orderOf(broken.monomial) == 2);
}

TEST_CASE("adjoint duality of verified pairs") {
  SampleGrid grid2 = defaultSampleGrid(2);
  CHECK(verifyPotentialPair(adjointOf(makeGrad(2, 1)), adjointOf(makeCurl(2, 1)), grid2).pass);
  SampleGrid grid3 = defaultSampleGrid(3);
  CHECK(verifyPotentialPair(adjointOf(makeGrad(3, 1)), adjointOf(makeCurl(3, 1)), grid3).pass);
  CHECK(verifyPotentialPair(adjointOf(makeGrad(3, 2)), adjointOf(makeCurl(3, 2)), grid3).pass);
}

TEST_CASE("image of the potential lies in the kernel of the annihilator") {
  SampleGrid grid2 = defaultSampleGrid(2);
  SampleGrid grid3 = defaultSampleGrid(3);
  struct Pair {
    HomOperator a, b;
    const SampleGrid* grid;
  };
  std::vector<Pair> pairs = {{makeCurl(2, 1), makeGrad(2, 1), &grid2},
                             {makeCurl(3, 1), makeGrad(3, 1), &grid3},
                             {makeDiv(3, 3), makeDivPotential(3, 3), &grid3}};
  for (const auto& pair : pairs) {
    for (const auto& point : pair.grid->points) {
      RatVec xi = ratVecOfLongs(point);
      RatMatrix symbolA = symbolAt(pair.a, xi);
      for (const RatVec& v : imageSample(pair.b, xi)) CHECK(isZeroVec(symbolA.apply(v)));
    }
  }
}

TEST_CASE("validation rejects malformed operators") {
  HomOperator mixed = makeGrad(2, 1);
  mixed.terms.emplace(MultiIndex{1, 1}, RatMatrix(2, 1));
  CHECK_THROWS_WITH_AS(validateOperator(mixed), doctest::Contains("non-homogeneous"),
                       std::invalid_argument);

  HomOperator badShape = makeGrad(2, 1);
  badShape.terms.begin()->second = RatMatrix(3, 1);
  CHECK_THROWS_WITH_AS(validateOperator(badShape), doctest::Contains("term 0"),
                       std::invalid_argument);

  HomOperator zero;
  zero.baseDim = 2;
  zero.inDim = 1;
  zero.outDim = 1;
  zero.order = 1;
  zero.terms.emplace(MultiIndex{1, 0}, RatMatrix(1, 1));
  CHECK_THROWS_WITH_AS(validateOperator(zero), doctest::Contains("zero"), std::invalid_argument);

  CHECK_THROWS_AS(blockDiag(makeGrad(2, 1), makeHessian(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(blockDiag(makeGrad(2, 1), makeGrad(3, 1)), std::invalid_argument);
}

TEST_CASE("zoo registry dispatches and validates") {
  CHECK(zooOperator("grad", {{"N", 2}, {"m", 2}}) == makeGrad(2, 2));
  CHECK(zooOperator("div-potential", {{"N", 3}, {"d", 3}}) == makeDivPotential(3, 3));
  CHECK_THROWS_AS(zooOperator("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(zooOperator("grad", {{"N", 2}}), std::invalid_argument);
  for (const auto& op : zooSamples()) CHECK_NOTHROW(validateOperator(op));
}

TEST_SUITE_END();
