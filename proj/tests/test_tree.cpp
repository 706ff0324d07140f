#include <gtest/gtest.h>

#include <random>

#include "drinfeld/quotient.hpp"

using namespace drinfeld;

namespace {

Poly P(const FiniteField& f, const char* s) { return Poly::parse(f, s); }

Mat2A randomSL2(const FiniteField& f, std::mt19937& rng, int steps) {
  Mat2A g = identityA(f);
  std::uniform_int_distribution<long long> pick(0, f.q() * f.q() * f.q() - 1);
  for (int k = 0; k < steps; ++k) {
    const Poly b = Poly::from_index(f, pick(rng));
    g = g * upperUnipotent(b, f) * matJ(f);
  }
  return g;
}

}  // namespace

TEST(Tree, ApartmentVertices) {
  const auto& f = FiniteField::get(3);
  for (int i = -3; i <= 3; ++i) {
    const Vertex v = applyMatrix(toK(diagA(Poly::one(f), Poly::one(f))) * Mat2K{tPower(f, i), RatFunc(f), RatFunc(f), RatFunc::one(f)},
                                 apartmentVertex(f, 0));
    EXPECT_EQ(v.r, i);
    EXPECT_TRUE(v.s.is_zero());
  }
  const Vertex w = applyMatrix(matJ(f), apartmentVertex(f, 1));
  EXPECT_EQ(w.r, -1);
  EXPECT_TRUE(w.s.is_zero());
  EXPECT_EQ(applyMatrix(matJ(f), apartmentEdge(f, 0)).origin, apartmentVertex(f, 0));
  EXPECT_EQ(applyMatrix(diagA(Poly::t(f), Poly::one(f)), apartmentEdge(f, 0)), apartmentEdge(f, 1));
}

TEST(Tree, ReductionExamples) {
  const auto& f = FiniteField::get(2);
  const EdgeReduction r3 = reduceToApartment(apartmentEdge(f, 3), f);
  EXPECT_EQ(r3.i, 3);
  EXPECT_EQ(r3.sign, 1);
  EXPECT_EQ(r3.g, identityA(f));
  const EdgeReduction rneg = reduceToApartment(apartmentEdge(f, 0).opposite(), f);
  EXPECT_EQ(rneg.i, 0);
  EXPECT_EQ(rneg.sign, -1);
  EXPECT_EQ(edgeOf(rneg.g, 0).opposite(), apartmentEdge(f, 0).opposite());
  const OrientedEdge e = applyMatrix(upperUnipotent(Poly::t(f), f), apartmentEdge(f, 2));
  const EdgeReduction r = reduceToApartment(e, f);
  EXPECT_EQ(r.i, 2);
  EXPECT_EQ(r.sign, 1);
}

TEST(Tree, ActionAndReductionFuzz) {
  for (int q : {2, 3, 4}) {
    const auto& f = FiniteField::get(q);
    std::mt19937 rng(17 + q);
    for (int trial = 0; trial < 60; ++trial) {
      const Mat2A g = randomSL2(f, rng, 1 + trial % 4), h = randomSL2(f, rng, 1 + trial % 3);
      const int i = trial % 4;
      const Vertex v = apartmentVertex(f, i);
      EXPECT_EQ(applyMatrix(g * h, v), applyMatrix(g, applyMatrix(h, v)));
      const OrientedEdge e = applyMatrix(g, apartmentEdge(f, i));
      EXPECT_EQ(e.origin.r - e.terminus.r == 1 || e.terminus.r - e.origin.r == 1, true);
      const EdgeReduction red = reduceToApartment(e, f);
      const OrientedEdge back = edgeOf(red.g, red.i);
      EXPECT_EQ(red.sign > 0 ? back : back.opposite(), e);
      EXPECT_EQ(red.g.det(), Poly::one(f));
    }
  }
}

TEST(Tree, Stabilizers) {
  for (int q : {2, 3}) {
    const auto& f = FiniteField::get(q);
    for (int i = 0; i <= 3; ++i) {
      const auto st = stabilizerApartment(f, i);
      EXPECT_EQ(st.order, (q - 1) * ipow(q, i + 1));
      const auto elems = stabilizerElements(f, i);
      EXPECT_EQ(static_cast<long long>(elems.size()), st.order);
      for (const auto& s : elems) EXPECT_EQ(applyMatrix(s, apartmentEdge(f, i)), apartmentEdge(f, i));
    }
  }
  EXPECT_EQ(stabilizerApartment(FiniteField::get(2), 1).order, 4);
}

TEST(Quotient, StableOrbitCountAndTransport) {
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      if (q == 3 && n == 3) continue;
      GroupContext ctx(q, n);
      OrbitEngine eng(ctx);
      EdgeClassifier cls(eng);
      EXPECT_EQ(static_cast<long long>(cls.stableOrbits().size()), ipow(q, 2 * (n - 1)));
      const auto& f = ctx.field();
      std::mt19937 rng(5 * q + n);
      for (int trial = 0; trial < 40; ++trial) {
        const Mat2A g = randomSL2(f, rng, 1 + trial % 5);
        const int i = trial % 3;
        const Transport tr = eng.transportEdge(g, i);
        EXPECT_TRUE(isGamma1(tr.gamma, n));
        EXPECT_EQ(applyMatrix(tr.gamma * tr.rep, apartmentEdge(f, i)), applyMatrix(g, apartmentEdge(f, i)));
        const EdgeClass ec = cls.classify(applyMatrix(g, apartmentEdge(f, i)));
        if (ec.stable) {
          EXPECT_TRUE(isGamma1(ec.witness, n));
          const OrientedEdge rep = applyMatrix(ctx.h(ec.c, ec.d) * matJ(f), apartmentEdge(f, 0));
          const OrientedEdge img = applyMatrix(ec.witness, rep);
          EXPECT_EQ(ec.sign > 0 ? img : img.opposite(), applyMatrix(g, apartmentEdge(f, i)));
        }
      }
    }
  }
}

TEST(Quotient, ClassifyExamples) {
  const auto& f = FiniteField::get(2);
  GroupContext ctx(2, 2);
  OrbitEngine eng(ctx);
  EdgeClassifier cls(eng);
  const EdgeClass e1 = cls.classify(apartmentEdge(f, 1));
  EXPECT_FALSE(e1.stable);
  EXPECT_EQ(e1.i, 1);
  EXPECT_FALSE(e1.cusp_end.has_value());
  const EdgeClass lam = cls.classify(applyMatrix(ctx.h(P(f, "1"), P(f, "0")) * matJ(f), apartmentEdge(f, 0)));
  EXPECT_TRUE(lam.stable);
  EXPECT_EQ(lam.c, P(f, "1"));
  EXPECT_TRUE(lam.d.is_zero());
  EXPECT_EQ(lam.sign, 1);
}

TEST(Quotient, GraphStructure) {
  GroupContext ctx(2, 2);
  OrbitEngine eng(ctx);
  EdgeClassifier cls(eng);
  const QuotientGraph G = buildQuotientGraph(cls, 4);
  EXPECT_EQ(G.stableCount(), 4);
  for (const auto& e : G.edges) {
    EXPECT_GE(e.stab_order, 1);
    EXPECT_LT(e.origin, static_cast<int>(G.vertices.size()));
    EXPECT_EQ(G.vertices[e.origin].j, e.i);
    EXPECT_EQ(G.vertices[e.terminus].j, e.i + 1);
  }
  EXPECT_NE(toDot(G).find("color=red"), std::string::npos);
}
