#ifndef DRINFELD_SUITE_HPP
#define DRINFELD_SUITE_HPP

// Verification suites shared by the CLI and the acceptance runner.

#include <array>
#include <future>
#include <string>
#include <vector>

#include "carlitz.hpp"
#include "properties.hpp"

namespace drinfeld {

/// Certificates whose params carry kind=diagnostic are reported but never fail a suite.
inline bool isDiagnostic(const Certificate& c) {
  auto it = c.params.find("kind");
  return it != c.params.end() && it->second == "diagnostic";
}

inline bool suiteOk(const std::vector<Certificate>& cs) {
  for (const auto& c : cs)
    if (!isDiagnostic(c) && !c.ok) return false;
  return true;
}

/// Moduli for the coefficient lemma: t, t+1 and one irreducible of degree 2.
inline std::vector<Poly> gossModuli(const FiniteField& f) {
  std::vector<Poly> out{Poly::t(f), Poly::parse(f, "t+1")};
  const Poly m2 = Poly::parse(f, "t^2+t+1");
  out.push_back(m2.is_irreducible() ? m2 : Poly::parse(f, "t^2+1"));
  if (!out.back().is_irreducible()) {
    for (const auto& b : Poly::all_below_degree(f, 2)) {
      const Poly m = Poly::monomial(f, 1, 2) + b;
      if (m.is_irreducible()) {
        out.back() = m;
        break;
      }
    }
  }
  return out;
}

inline std::vector<Certificate> runGossSuite(int q, int imax, int precision = 64, int lmax = 3) {
  const FiniteField& f = FiniteField::get(q);
  std::vector<Certificate> out;
  for (const auto& m : gossModuli(f)) out.push_back(verifyCoeffLemma(m, imax, precision));
  for (int l = 1; l <= lmax; ++l) out.push_back(verifyUnifHeckeLemma(f, l, precision));
  return out;
}

inline std::vector<Certificate> runCongruenceSuite(int q, int n) {
  const GroupContext ctx(q, n);
  return {verifyXiCongruences(ctx), verifyDiamondCongruence(ctx)};
}

/// Hecke operators T_m used for the triviality check at a level.
inline std::vector<Poly> heckeModuli(const FiniteField& f) {
  std::vector<Poly> out{Poly::parse(f, "t+1")};
  if (f.q() == 2) out.push_back(Poly::parse(f, "t^2+t+1"));
  return out;
}

struct LevelResult {
  int q = 0, n = 0, k = 0;
  std::vector<Certificate> certs;
  OrdinaryCertificate ordinary;
  bool solved = false;
};

inline std::map<std::string, std::string> levelParams(int q, int n, int k) {
  return {{"q", std::to_string(q)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
}

/// Every cocycle-side check for one (q, n, k).
inline LevelResult runLevel(int q, int n, int k, std::uint64_t seed, int depth = -1) {
  LevelResult res{q, n, k, {}, {}, false};
  const GroupContext ctx(q, n);
  const FiniteField& f = ctx.field();
  Certificate dimCert{"cocycle-dimension", levelParams(q, n, k), true, ""};
  std::unique_ptr<CocycleSpace> S;
  try {
    S = solveCocycleSpace(ctx, k, depth);
    if (S->dim() != dimSk(q, n, k)) dimCert.fail("dim " + std::to_string(S->dim()) + " != dim S_k " + std::to_string(dimSk(q, n, k)));
    else dimCert.witness = "dim " + std::to_string(S->dim());
  } catch (const DepthInstability& e) {
    Certificate st{"depth-stability", levelParams(q, n, k), true, ""};
    st.fail(e.what());
    dimCert.fail("no stable solution space");
    res.certs.push_back(dimCert);
    res.certs.push_back(st);
    return res;
  } catch (const std::runtime_error& e) {
    dimCert.fail(e.what());
    res.certs.push_back(dimCert);
    return res;
  }
  res.certs.push_back(dimCert);
  res.certs.push_back({"depth-stability", levelParams(q, n, k), true,
                       "same solution space at depth " + std::to_string(S->depth()) + " and " + std::to_string(S->depth() + 1)});
  res.solved = true;
  if (k == 2) S->canonicalizeWeight2();

  Certificate stableCert{"stable-orbit-count", levelParams(q, n, k), true, ""};
  const long long stable = static_cast<long long>(S->classifier().stableOrbits().size());
  if (stable != ipow(q, 2 * (n - 1))) stableCert.fail(std::to_string(stable) + " stable orbits");
  else stableCert.witness = std::to_string(stable) + " stable orbits";
  res.certs.push_back(stableCert);

  const OperatorMatrix U = heckeUt(*S);
  std::vector<OperatorMatrix> T;
  for (const auto& m : heckeModuli(f)) T.push_back(heckeTm(*S, m));
  res.ordinary = ordinaryCertificate(*S, U.m, T);
  Certificate ord{"ordinary-certificate", levelParams(q, n, k), res.ordinary.valid(), ""};
  ord.witness = res.ordinary.valid() ? "charpoly(Ut) = " + res.ordinary.chi.to_string() : res.ordinary.witness;
  res.certs.push_back(ord);

  Sampler rng(f, seed ^ (static_cast<std::uint64_t>(q) << 32) ^ (static_cast<std::uint64_t>(n) << 16) ^ static_cast<std::uint64_t>(k));
  res.certs.push_back(checkHarmonicity(*S));
  res.certs.push_back(checkAntisymmetry(*S, rng, 25));
  res.certs.push_back(checkEquivariance(*S, rng, 25));
  res.certs.push_back(checkSourceSums(*S, 3));
  res.certs.push_back(checkClassifyInvariance(S->classifier(), rng, 50));
  std::vector<OperatorMatrix> hecke{U};
  hecke.insert(hecke.end(), T.begin(), T.end());
  for (auto& c : checkDiamonds(*S, hecke)) res.certs.push_back(c);

  for (const auto& Tm : T) {
    Certificate diag{"ut-tm-commutator", levelParams(q, n, k), true, ""};
    diag.params["kind"] = "diagnostic";
    diag.params["operator"] = Tm.name;
    diag.witness = commutator(U.m, Tm.m).is_zero() ? "zero" : "nonzero";
    res.certs.push_back(diag);
  }
  if (k == 2) {
    res.certs.push_back(checkDeltaBasis(*S));
    Certificate free = verifyFreeness(ctx);
    res.certs.push_back(free);
    const NilpotencyReport nil = nilpotencyDiagnostics(U.m, S->one());
    Certificate nc{"nilpotent-block", levelParams(q, n, k), true, ""};
    const int expect = S->dim() - static_cast<int>(ipow(q, n - 1));
    if (nil.primary_dim != expect || !nil.killed_by_dim_power) nc.fail("generalized kernel of Ut has dim " + std::to_string(nil.primary_dim));
    else nc.witness = "dim " + std::to_string(nil.primary_dim) + ", nilpotency index " + std::to_string(nil.index) + "; " + nil.note;
    res.certs.push_back(nc);
  }
  return res;
}

/// Runs the given levels in a small work pool; results keep input order.
inline std::vector<LevelResult> runLevels(const std::vector<std::array<int, 3>>& levels, std::uint64_t seed) {
  std::vector<std::future<LevelResult>> jobs;
  for (const auto& L : levels) jobs.push_back(std::async(std::launch::async, runLevel, L[0], L[1], L[2], seed, -1));
  std::vector<LevelResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_SUITE_HPP
