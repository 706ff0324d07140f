#include <gtest/gtest.h>

#include <random>

#include "drinfeld/carlitz.hpp"

using namespace drinfeld;

namespace {

Poly P(int q, const std::string& s) { return Poly::parse(FiniteField::get(q), s); }

// G_k(X) = sum_j X^{j+1} [w^{k-1}] e(w)^j, from sum_k G_k w^{k-1} = X / (1 - X e(w)).
std::vector<UniPoly<RatFunc>> goss_oracle(const Poly& m, int imax) {
  const auto e = expCoeffs(m);
  const FiniteField& f = *m.field();
  const RatFunc zero = RatFunc::zero(f), one = RatFunc::one(f);
  std::vector<RatFunc> ew(imax, zero);  // e(w) truncated below w^imax
  long long qi = 1;
  for (int i = 0; i <= e.r && qi < imax; ++i, qi *= f.q()) ew[qi] = e.alpha[i];
  std::vector<std::vector<RatFunc>> powers{std::vector<RatFunc>(imax, zero)};
  powers[0][0] = one;
  for (int j = 1; j < imax; ++j) {
    std::vector<RatFunc> next(imax, zero);
    for (int a = 0; a < imax; ++a)
      for (int b = 0; a + b < imax; ++b) next[a + b] += powers[j - 1][a] * ew[b];
    powers.push_back(next);
  }
  std::vector<UniPoly<RatFunc>> G(imax + 1);
  for (int k = 1; k <= imax; ++k) {
    std::vector<RatFunc> c(k + 1, zero);
    for (int j = 0; j < k; ++j) c[j + 1] = powers[j][k - 1];
    G[k] = UniPoly<RatFunc>(c);
  }
  return G;
}

}  // namespace

TEST(Carlitz, PhiExamples) {
  for (int q : {2, 3, 4}) {
    const auto& f = FiniteField::get(q);
    auto phi_t = carlitzPhi(Poly::t(f)).phi;
    ASSERT_EQ(phi_t.size(), 2u);
    EXPECT_EQ(phi_t[0], Poly::t(f));
    EXPECT_EQ(phi_t[1], Poly::one(f));
    auto phi_1 = carlitzPhi(Poly::one(f)).phi;
    EXPECT_EQ(phi_1, std::vector<Poly>{Poly::one(f)});
    auto phi_t2 = carlitzPhi(Poly::t(f).pow(2)).phi;
    ASSERT_EQ(phi_t2.size(), 3u);
    EXPECT_EQ(phi_t2[0], Poly::t(f).pow(2));
    EXPECT_EQ(phi_t2[1], Poly::t(f) + Poly::t(f).pow(q));
    EXPECT_EQ(phi_t2[2], Poly::one(f));
  }
  EXPECT_THROW(carlitzPhi(Poly(FiniteField::get(2))), std::invalid_argument);
}

TEST(Carlitz, ModuleAxiom) {
  std::mt19937 rng(1);
  for (int q : {2, 3}) {
    const auto& f = FiniteField::get(q);
    for (int it = 0; it < 30; ++it) {
      Poly a, b;
      do a = Poly::from_index(f, rng() % (q * q * q * q)); while (a.is_zero());
      do b = Poly::from_index(f, rng() % (q * q * q * q)); while (b.is_zero());
      auto lhs = carlitzPhi(a * b).phi;
      EXPECT_EQ(lhs, composeAdditive(carlitzPhi(a).phi, carlitzPhi(b).phi));
      EXPECT_EQ(lhs[0], a * b);
      EXPECT_EQ(static_cast<int>(lhs.size()) - 1, (a * b).degree());
    }
  }
}

TEST(Carlitz, ExpCoeffsIntegrality) {
  for (int q : {2, 3}) {
    const auto& f = FiniteField::get(q);
    for (int d = 1; d <= 3; ++d)
      for (auto& low : Poly::all_below_degree(f, d)) {
        Poly m = low + Poly::monomial(f, 1, d);
        if (!m.is_irreducible()) continue;
        auto e = expCoeffs(m);
        for (int i = 0; i < e.r; ++i) EXPECT_TRUE(e.alpha[i].is_polynomial()) << m << " i=" << i;
        EXPECT_EQ(e.alpha[e.r], RatFunc(Poly::one(f), m));
      }
  }
  EXPECT_THROW(expCoeffs(P(2, "t^2+1")), std::invalid_argument);
}

TEST(Goss, RecursionMatchesGeneratingFunction) {
  for (int q : {2, 3}) {
    for (const char* ms : {"t", "t+1", "t^2+t+1", "t^2+1"}) {
      Poly m = P(q, ms);
      if (!m.is_irreducible()) continue;
      const int imax = q * q + 3;
      auto G = gossPolynomials(m, imax);
      auto O = goss_oracle(m, imax);
      for (int i = 1; i <= imax; ++i) EXPECT_EQ(G[i], O[i]) << "q=" << q << " m=" << ms << " i=" << i;
      for (int i = 2; i <= imax; ++i) {
        EXPECT_TRUE(G[i].coeff(0).is_zero());
        EXPECT_TRUE(G[i].coeff(1).is_zero());
      }
      for (int i = 1; i <= q; ++i) EXPECT_EQ(G[i], UniPoly<RatFunc>::x_power(i, RatFunc::one(FiniteField::get(q))));
    }
  }
}

TEST(Goss, Examples) {
  const auto& f2 = FiniteField::get(2);
  auto G = gossPolynomials(P(2, "t"), 2);
  EXPECT_EQ(G[1], UniPoly<RatFunc>::x_power(1, RatFunc::one(f2)));
  EXPECT_EQ(G[2], UniPoly<RatFunc>::x_power(2, RatFunc::one(f2)));
}

TEST(Goss, UOfMzExample) {
  auto s = uOfMz(P(2, "t"), 8);
  EXPECT_TRUE(s.c[0].is_zero());
  EXPECT_TRUE(s.c[1].is_zero());
  EXPECT_EQ(s.c[2], P(2, "1"));
  EXPECT_EQ(s.c[3], P(2, "t"));
  EXPECT_EQ(s.c[4], P(2, "t^2"));
  // Phi_t(1/u) * u(tz) = 1: (t u + 1) u^{-2} * s = 1
  Series<Poly> d{std::vector<Poly>(8, P(2, "0"))};
  d.c[0] = P(2, "1");
  d.c[1] = P(2, "t");
  auto prod = s * d;
  for (int j = 0; j < 8; ++j) EXPECT_EQ(prod.c[j], j == 2 ? P(2, "1") : P(2, "0"));
}

TEST(Goss, CoeffLemmaCertificates) {
  for (int q : {2, 3})
    for (const char* ms : {"t", "t+1", "t^2+t+1"}) {
      Poly m = P(q, ms);
      if (!m.is_irreducible()) continue;
      auto c = verifyCoeffLemma(m, q * q, 64);
      EXPECT_TRUE(c.ok) << c.witness;
    }
  EXPECT_TRUE(verifyCoeffLemma(P(2, "t+1"), 8, 64).ok);
  EXPECT_THROW(verifyCoeffLemma(P(3, "t^2+t+2"), 9, 5), std::invalid_argument);
}

TEST(UnifHecke, SeriesMatchesGeometricOracle) {
  const auto& f = FiniteField::get(3);
  for (int l = 1; l <= 3; ++l) {
    auto s = unifHeckeSeries(f, l, 6);
    // coefficient of u^{j+1} is t (-t^l beta zeta)^j
    for (int j = 0; j + 1 < 6; ++j) {
      Poly c = Poly::t(f) * Poly::t(f).pow(static_cast<long long>(l) * j);
      if (j % 2) c = -c;
      EXPECT_EQ(s.c[j + 1], ZetaBetaPoly::monomial(c, j, j));
    }
    EXPECT_TRUE(verifyUnifHeckeLemma(f, l, 64).ok);
  }
  auto s = unifHeckeSeries(FiniteField::get(2), 1, 4);
  EXPECT_EQ(s.c[2], ZetaBetaPoly::monomial(P(2, "t^2"), 1, 1));  // -1 = 1 in char 2
}
