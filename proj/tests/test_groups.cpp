#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "drinfeld/congruence.hpp"

using namespace drinfeld;

namespace {

Poly P(int q, const std::string& s) { return Poly::parse(FiniteField::get(q), s); }

Mat2A M(int q, const char* a, const char* b, const char* c, const char* d) { return {P(q, a), P(q, b), P(q, c), P(q, d)}; }

}  // namespace

TEST(Congruence, MembershipExamples) {
  const auto& f = FiniteField::get(2);
  EXPECT_TRUE(isGamma1(identityA(f), 3));
  EXPECT_TRUE(isGamma1(M(2, "1", "1", "0", "1"), 2));
  EXPECT_FALSE(isGamma1(M(2, "1", "0", "t", "1"), 2));
  EXPECT_TRUE(isGamma1(M(2, "1", "0", "t", "1"), 1));
  // (1+t 1; t^2 1-t+t^2... ) : use (1+t, 1; t^3, 1-t+t^2) with det = 1 + t^3 - t^3 = 1
  Mat2A g = M(3, "1+t", "1", "t^3", "1-t+t^2");
  ASSERT_TRUE(g.det().is_one());
  EXPECT_TRUE(isGamma0p(g, 3));
  EXPECT_FALSE(isGamma1(g, 3));
  EXPECT_THROW(isGamma1(M(3, "1+t", "0", "0", "1"), 2), std::invalid_argument);
}

TEST(Congruence, LiftExamples) {
  for (int q : {2, 3, 4}) {
    const auto& f = FiniteField::get(q);
    EXPECT_EQ(liftSL2(identityA(f), 3), identityA(f));
  }
  EXPECT_EQ(liftSL2(M(2, "1", "0", "t", "1"), 2), M(2, "1", "0", "t", "1"));
  const auto& f2 = FiniteField::get(2);
  Poly u = P(2, "1+t");
  Mat2A gbar = diagA(u, Residue::inverse_mod_tn(u, 2));
  Mat2A g = liftSL2(gbar, 2);
  EXPECT_TRUE(g.det().is_one());
  EXPECT_EQ(reduceMod(g, 2), reduceMod(gbar, 2));
  EXPECT_THROW(liftSL2(diagA(u, Poly::one(f2)), 2), std::invalid_argument);
  (void)f2;
}

TEST(Congruence, LiftRandomMatricesModTn) {
  std::mt19937 rng(17);
  for (int q : {2, 3}) {
    const auto& f = FiniteField::get(q);
    for (int n = 1; n <= 4; ++n) {
      const long long size = ipow(q, n);
      for (int it = 0; it < 60; ++it) {
        // random unimodular bottom row, then a matching top row
        Poly c = Poly::from_index(f, rng() % size), d = Poly::from_index(f, rng() % size);
        if (c.coeff(0) == 0 && d.coeff(0) == 0) continue;
        Mat2A gbar;
        if (d.coeff(0) != 0) {
          Poly b = Poly::from_index(f, rng() % size);
          Poly a = ((Poly::one(f) + b * c) * Residue::inverse_mod_tn(d, n)).mod_tn(n);
          gbar = {a, b, c, d};
        } else {
          Poly a = Poly::from_index(f, rng() % size);
          Poly b = ((a * d - Poly::one(f)) * Residue::inverse_mod_tn(c, n)).mod_tn(n);
          gbar = {a, b, c, d};
        }
        Mat2A g = liftSL2(gbar, n);
        EXPECT_TRUE(g.det().is_one());
        EXPECT_EQ(reduceMod(g, n), gbar);
        EXPECT_EQ(liftSL2(gbar, n), g);  // deterministic
      }
    }
  }
}

TEST(Congruence, HMatrices) {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    GroupContext ctx(q, n);
    const auto& f = ctx.field();
    EXPECT_EQ(ctx.h(Poly(f), Poly(f)), identityA(f));
    std::vector<Mat2A> hs;
    for (const auto& c : ctx.residues())
      for (const auto& d : ctx.residues()) {
        const Mat2A& h = ctx.h(c, d);
        EXPECT_TRUE(isGamma1(h, 1));
        EXPECT_EQ(reduceMod(h, n), reduceMod(ctx.hBar(c, d), n));
        hs.push_back(h);
      }
    // pairwise distinct left Gamma_1(t^n)-cosets
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j) EXPECT_FALSE(isGamma1(hs[i] * hs[j].adjugate(), n));
  }
  GroupContext ctx(2, 2);
  EXPECT_EQ(reduceMod(ctx.h(P(2, "1"), P(2, "0")), 2), M(2, "1", "0", "t", "1"));
}

TEST(Congruence, XiAndEta) {
  const auto& f = FiniteField::get(2);
  EXPECT_EQ(xiMatrix(P(2, "t"), P(2, "0")), M(2, "1", "0", "0", "t"));
  EXPECT_EQ(etaDiamond(P(2, "1+t^2"), 2), identityA(f));
  Mat2A xd = xiDiamond(P(2, "t+1"), 2);
  EXPECT_EQ(xd.det(), P(2, "t+1"));
  // first column (a, 0) times ... : xi_diamond = (* *; 0 1) mod t^2 after removing diag(m,1)
  EXPECT_TRUE(xd.c.mod_tn(2).is_zero());
  EXPECT_EQ(xd.d.mod_tn(2), P(2, "t+1"));
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      GroupContext ctx(q, n);
      for (const auto& a : ctx.theta()) {
        Mat2A eta = etaDiamond(a, n);
        EXPECT_TRUE(isGamma0p(eta, n));
        EXPECT_TRUE(eta.c.mod_tn(n).is_zero());
        EXPECT_EQ(eta.d.mod_tn(n), a.mod_tn(n));
      }
    }
  EXPECT_THROW(etaDiamond(P(2, "t"), 2), std::invalid_argument);
  EXPECT_THROW(xiMatrix(P(2, "t"), P(2, "t")), std::invalid_argument);
}

TEST(Cusps, CountsAndWidths) {
  EXPECT_EQ(cuspCount(2, 1), 2);
  EXPECT_EQ(cuspCount(2, 2), 5);
  EXPECT_EQ(genus(2, 3), 5);
  EXPECT_EQ(dimSk(2, 1, 2), 1);
  EXPECT_EQ(dimSk(2, 2, 2), 4);
  EXPECT_EQ(dimSk(2, 2, 3), 8);
  EXPECT_EQ(dimSk(2, 1, 5), 4);
  for (int q : {2, 3, 4, 5})
    for (int n = 1; n <= (q == 2 ? 5 : 3); ++n) {
      EXPECT_EQ(genus(q, n) - 1 + cuspCount(q, n), ipow(q, 2 * (n - 1))) << q << " " << n;
      GroupContext ctx(q, n);
      auto cs = ctx.cusps();
      // labels are canonical (minimal representative) and distinct
      std::set<std::tuple<int, long long, long long>> seen;
      for (const auto& s : cs) {
        EXPECT_TRUE(seen.insert({static_cast<int>(s.kind), s.c.index(), s.d.index()}).second);
        if (s.kind == CuspKind::Infinity) {
          EXPECT_EQ(s.width_exponent, n - 1 - barVt(s.c, n));
          EXPECT_LT(s.d.degree(), barVt(s.c, n));
        } else {
          EXPECT_EQ(s.width_exponent, n);
        }
      }
    }
  GroupContext c1(3, 1);
  auto cs = c1.cusps();
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].kind, CuspKind::Infinity);
  EXPECT_EQ(cs[1].kind, CuspKind::Zero);
}

TEST(Cusps, LiteralClassEnumeration) {
  // Count classes of (c,d) in A_{n-1}^2 under c = c', d' - d in c A_{n-1} by brute force.
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      GroupContext ctx(q, n);
      std::set<std::pair<long long, std::set<long long>>> classes;
      for (const auto& c : ctx.residues())
        for (const auto& d : ctx.residues()) {
          std::set<long long> cls;
          for (const auto& x : ctx.residues()) cls.insert((d + c * x).mod_tn(n - 1).index());
          classes.insert({c.index(), cls});
        }
      EXPECT_EQ(static_cast<long long>(classes.size()) + ipow(q, n - 1), cuspCount(q, n));
    }
}

TEST(Congruence, LemmaSuites) {
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      GroupContext ctx(q, n);
      auto xi = verifyXiCongruences(ctx);
      EXPECT_TRUE(xi.ok) << xi.witness;
      auto dia = verifyDiamondCongruence(ctx);
      EXPECT_TRUE(dia.ok) << dia.witness;
    }
  // beta = 0, (c,d) = (0,0), item (3): xi_0 J = J diag(t,1) exactly
  const auto& f = FiniteField::get(2);
  EXPECT_EQ(xiMatrix(Poly::t(f), Poly(f)) * matJ(f), matJ(f) * diagA(Poly::t(f), Poly::one(f)));
}
