#include <gtest/gtest.h>

#include "drinfeld/properties.hpp"

using namespace drinfeld;

namespace {

Poly P(const FiniteField& f, const char* s) { return Poly::parse(f, s); }

struct Level {
  int q, n, k;
};

}  // namespace

TEST(Vk, ActionIsMultiplicative) {
  const auto& f = FiniteField::get(3);
  Sampler rng(f, 3);
  for (int k : {2, 3, 4, 5}) {
    VkRep vk(f, k);
    EXPECT_EQ(vk.act(identityA(f)), vk.identity());
    for (int s = 0; s < 10; ++s) {
      const Mat2A g = rng.sl2(2), h = rng.sl2(2);
      EXPECT_EQ(vk.act(g * h), vk.act(g) * vk.act(h));
      EXPECT_EQ(vk.actInverse(g), vk.act(g.adjugate()));
    }
    const Mat2A xi = xiMatrix(Poly::t(f), Poly::one(f));
    EXPECT_EQ(vk.act(toK(xi)) * vk.actInverse(toK(xi)), vk.identity());
  }
  VkRep v2(f, 2);
  EXPECT_EQ(v2.act(rng.sl2(3)), v2.identity());
}

TEST(Cocycle, DimensionExamples) {
  for (const Level& L : std::vector<Level>{{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {2, 1, 3}, {2, 1, 5}, {3, 1, 3}}) {
    GroupContext ctx(L.q, L.n);
    const auto S = solveCocycleSpace(ctx, L.k);
    EXPECT_EQ(S->dim(), expectedCocycleDim(L.q, L.n, L.k));
    EXPECT_EQ(S->dim(), dimSk(L.q, L.n, L.k));
  }
}

TEST(Cocycle, TooShallowIsCaught) {
  GroupContext ctx(2, 2);
  EXPECT_THROW(solveCocycleSpace(ctx, 2, 0), DimensionMismatch);
}

TEST(Cocycle, LevelTEvaluations) {
  for (int q : {2, 3, 5}) {
    GroupContext ctx(q, 1);
    auto S = solveCocycleSpace(ctx, 2);
    S->canonicalizeWeight2();
    const auto& f = ctx.field();
    EXPECT_EQ(S->evaluateBasis(edgeOf(matJ(f), 0))(0, 0), S->one());
    EXPECT_EQ(S->evaluateBasis(edgeOf(matJ(f), 0).opposite())(0, 0), -S->one());
    EXPECT_TRUE(S->evaluateBasis(apartmentEdge(f, 1)).is_zero());
    EXPECT_TRUE(heckeUt(*S).m.is_zero() == false);
  }
}

TEST(Cocycle, Properties) {
  for (const Level& L : std::vector<Level>{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {2, 1, 4}, {2, 2, 3}, {3, 1, 3}}) {
    GroupContext ctx(L.q, L.n);
    auto S = solveCocycleSpace(ctx, L.k);
    if (L.k == 2) S->canonicalizeWeight2();
    Sampler rng(ctx.field(), 1000 + L.q * 100 + L.n * 10 + L.k);
    for (const auto& c : {checkHarmonicity(*S), checkAntisymmetry(*S, rng, 20), checkEquivariance(*S, rng, 25),
                          checkSourceSums(*S, 3), checkClassifyInvariance(S->classifier(), rng, 50)})
      EXPECT_TRUE(c.ok) << c.lemma << " q=" << L.q << " n=" << L.n << " k=" << L.k << ": " << c.witness;
    if (L.k == 2) {
      const auto c = checkDeltaBasis(*S);
      EXPECT_TRUE(c.ok) << c.witness;
    }
  }
}

TEST(Hecke, WeightTwoLevelT2) {
  GroupContext ctx(2, 2);
  const auto& f = ctx.field();
  auto S = solveCocycleSpace(ctx, 2);
  S->canonicalizeWeight2();
  const OperatorMatrix U = heckeUt(*S);
  const RatFunc one = S->one();
  const auto x = UniPoly<RatFunc>::x_power(1, one), xm1 = UniPoly<RatFunc>::linear(one, one);
  EXPECT_EQ(U.m.charpoly(one), x * x * xm1 * xm1);
  const OperatorMatrix T = heckeTm(*S, P(f, "t+1"));
  const auto cert = ordinaryCertificate(*S, U.m, {T});
  EXPECT_TRUE(cert.valid()) << cert.witness;
  EXPECT_EQ(cert.r, 2);
  const auto nil = nilpotencyDiagnostics(U.m, one);
  EXPECT_EQ(nil.primary_dim, 2);
  EXPECT_LE(nil.index, 2);
  EXPECT_TRUE(nil.killed_by_dim_power);

  // <1+t>[0,0] = [0,1].
  const OperatorMatrix D = diamond(*S, P(f, "1+t"));
  const int from = S->labelIndex(Poly(f), Poly(f)), to = S->labelIndex(Poly(f), Poly::one(f));
  EXPECT_EQ(D.m(to, from), one);
  EXPECT_EQ(diamond(*S, Poly::one(f)).m, MatK::identity(S->dim(), one));
  for (const auto& c : checkDiamonds(*S, {U, T})) EXPECT_TRUE(c.ok) << c.lemma << ": " << c.witness;
}

TEST(Hecke, LevelTIsTrivial) {
  for (int q : {2, 3}) {
    for (int k = 2; k <= 4; ++k) {
      GroupContext ctx(q, 1);
      auto S = solveCocycleSpace(ctx, k);
      if (k == 2) S->canonicalizeWeight2();
      const OperatorMatrix U = heckeUt(*S);
      const OperatorMatrix T = heckeTm(*S, P(ctx.field(), "t+1"));
      if (k == 2) {
        EXPECT_EQ(U.m, MatK::identity(1, S->one()));
        EXPECT_EQ(T.m, MatK::identity(1, S->one()));
      }
      const auto cert = ordinaryCertificate(*S, U.m, {T});
      EXPECT_TRUE(cert.valid()) << "q=" << q << " k=" << k << ": " << cert.witness;
      EXPECT_EQ(cert.r, 1);
    }
  }
}

TEST(Hecke, ZeroCocycleAndBadInputs) {
  GroupContext ctx(2, 1);
  auto S = solveCocycleSpace(ctx, 2);
  const auto& f = ctx.field();
  const MatK U = S->operatorInCoordinates({xiMatrix(Poly::t(f), Poly(f)), xiMatrix(Poly::t(f), Poly::one(f))});
  EXPECT_TRUE((U * std::vector<RatFunc>(S->unknowns(), S->zero()) == std::vector<RatFunc>(S->unknowns(), S->zero())));
  EXPECT_THROW(heckeTm(*S, Poly::t(f)), std::invalid_argument);
  EXPECT_THROW(heckeTm(*S, P(f, "t^2+1")), std::invalid_argument);
  EXPECT_THROW(diamond(*S, Poly::t(f)), std::invalid_argument);
}

TEST(Hecke, Freeness) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const auto c = verifyFreeness(GroupContext(q, n));
    EXPECT_TRUE(c.ok) << c.witness;
  }
  EXPECT_EQ(verifyFreeness(GroupContext(3, 2)).witness, "3 orbits of size 3");
  EXPECT_EQ(verifyFreeness(GroupContext(2, 2)).witness, "2 orbits of size 2");
}

TEST(Quotient, GraphCounts) {
  GroupContext c1(2, 1), c2(2, 2);
  OrbitEngine e1(c1), e2(c2);
  EdgeClassifier k1(e1), k2(e2);
  EXPECT_EQ(buildQuotientGraph(k1, 3).stableCount(), 1);
  EXPECT_EQ(buildQuotientGraph(k2, 3).stableCount(), 4);
}

TEST(Cocycle, Weight2DeltaBasisEntryPoint) {
  const GroupContext ctx(2, 2);
  const auto S = canonicalWeight2Basis(ctx);
  ASSERT_EQ(S->dim(), 4);
  const auto& f = ctx.field();
  const OrbitEngine eng(ctx);
  EdgeClassifier cls(eng);
  for (const auto& c : ctx.residues())
    for (const auto& d : ctx.residues()) {
      const OrientedEdge e = edgeOf(hMatrix(ctx, c, d) * matJ(f), 0);
      const EdgeClass ec = classifyEdge(cls, e);
      ASSERT_TRUE(ec.stable);
      EXPECT_EQ(ec.c, c);
      EXPECT_EQ(ec.d, d);
      const MatK v = S->evaluateBasis(e);
      for (int j = 0; j < S->dim(); ++j)
        EXPECT_EQ(v(0, j).is_zero(), j != S->labelIndex(c, d));
    }
  EXPECT_EQ(static_cast<long long>(enumerateCusps(2, 2).size()), cuspCount(2, 2));
}
