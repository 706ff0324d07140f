#ifndef DRINFELD_PROPERTIES_HPP
#define DRINFELD_PROPERTIES_HPP

// Invariant checks on solved cocycle spaces and operators.

#include <string>
#include <vector>

#include "hecke.hpp"
#include "sampling.hpp"

namespace drinfeld {

inline Certificate makeCert(const std::string& name, const CocycleSpace& S) {
  return {name,
          {{"q", std::to_string(S.context().q())}, {"n", std::to_string(S.context().n())}, {"k", std::to_string(S.k())}},
          true,
          ""};
}

/// The q+1 neighbours of a vertex, from its lattice matrix.
inline std::vector<Vertex> neighbours(const Vertex& w, const FiniteField& f) {
  const Mat2K M = vertexMatrix(w, f);
  const Mat2K up{tPower(f, 1), RatFunc(f), RatFunc(f), RatFunc::one(f)};
  std::vector<Vertex> out{applyMatrix(M * up, apartmentVertex(f, 0))};
  for (int lam = 0; lam < f.q(); ++lam)
    out.push_back(applyMatrix(M * toK(upperUnipotent(Poly::constant(f, static_cast<FqCode>(lam)), f) * matJ(f)) * up,
                              apartmentVertex(f, 0)));
  return out;
}

/// Sum of c(e) over edges into every vertex orbit up to depth D, found from
/// lattice neighbours rather than the orbit recursion.
inline Certificate checkHarmonicity(const CocycleSpace& S) {
  Certificate cert = makeCert("harmonicity", S);
  const FiniteField& f = S.field();
  const QuotientGraph G = buildQuotientGraph(S.classifier(), S.depth());
  int checked = 0;
  for (const auto& v : G.vertices) {
    if (v.j > S.depth()) continue;
    const Vertex w = applyMatrix(S.engine().orbitRep(v.c, v.d), apartmentVertex(f, v.j));
    MatK sum(S.vk().dim(), S.dim(), S.zero());
    for (const auto& nb : neighbours(w, f)) sum = sum + S.evaluateBasis({nb, w});
    ++checked;
    if (!sum.is_zero()) cert.fail("residual at v" + std::to_string(v.j) + " (" + v.c.to_string() + "," + v.d.to_string() + ")");
  }
  if (cert.ok) cert.witness = std::to_string(checked) + " vertex orbits";
  return cert;
}

inline Certificate checkAntisymmetry(const CocycleSpace& S, Sampler& rng, int samples) {
  Certificate cert = makeCert("antisymmetry", S);
  for (int s = 0; s < samples; ++s) {
    const OrientedEdge e = rng.edge(3, 1 + s % 4);
    if (S.evaluateBasis(e.opposite()) != -S.evaluateBasis(e)) cert.fail("c(-e) != -c(e) at sample " + std::to_string(s));
  }
  return cert;
}

inline Certificate checkEquivariance(const CocycleSpace& S, Sampler& rng, int samples) {
  Certificate cert = makeCert("equivariance", S);
  const int n = S.context().n();
  for (int s = 0; s < samples; ++s) {
    const Mat2A g = rng.gamma1(n, 1 + s % 2);
    if (!isGamma1(g, n)) throw std::logic_error("sampler produced an element outside Gamma_1(t^n)");
    const OrientedEdge e = rng.edge(2, 1 + s % 3);
    const MatK want = S.vk().act(g) * S.evaluateBasis(e);
    if (S.evaluateBasis(applyMatrix(g, e)) != want) cert.fail("c(ge) != g o c(e) at sample " + std::to_string(s));
    // Same edge through another representative g r sigma, sigma in Stab(e_i).
    const EdgeReduction red = reduceToApartment(e, S.field());
    for (int r = 0; r < 4; ++r)
      if (S.functionalReduced(g * red.g * rng.apartmentStabilizer(red.i), red.i, red.sign) * S.basis() != want)
        cert.fail("value depends on the representative at sample " + std::to_string(s));
  }
  return cert;
}

/// Table values against the recursive source sum on every edge orbit
/// of depth <= maxDepth, in both orientations.
inline Certificate checkSourceSums(const CocycleSpace& S, int maxDepth) {
  Certificate cert = makeCert("source-sum", S);
  const QuotientGraph G = buildQuotientGraph(S.classifier(), std::min(maxDepth, S.depth()));
  for (const auto& eo : G.edges) {
    const OrientedEdge e = edgeOf(S.engine().orbitRep(eo.c, eo.d), eo.i);
    for (const auto& x : {e, e.opposite()})
      if (S.edgeFunctional(x) * S.basis() != S.sourceSum(x) * S.basis())
        cert.fail("mismatch on e" + std::to_string(eo.i) + " orbit (" + eo.c.to_string() + "," + eo.d.to_string() + ")");
  }
  if (cert.ok) cert.witness = std::to_string(G.edges.size()) + " edge orbits";
  return cert;
}

inline Certificate checkDepthStability(const GroupContext& ctx, int k, int D) {
  Certificate cert{"depth-stability", {{"q", std::to_string(ctx.q())}, {"n", std::to_string(ctx.n())}, {"k", std::to_string(k)}, {"D", std::to_string(D)}}, true, ""};
  const CocycleSpace a(ctx, k, D), b(ctx, k, D + 1);
  if (!a.sameSpace(b)) cert.fail("dimensions " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  return cert;
}

/// [c,d](h_(c',d') J e_0) = delta, and -1 on the reversed edge.
inline Certificate checkDeltaBasis(const CocycleSpace& S) {
  Certificate cert = makeCert("delta-basis", S);
  const FiniteField& f = S.field();
  for (int r = 0; r < static_cast<int>(S.labels().size()); ++r) {
    const auto& [c, d] = S.labels()[r];
    const OrientedEdge e = edgeOf(S.context().h(c, d) * matJ(f), 0);
    const MatK v = S.evaluateBasis(e), w = S.evaluateBasis(e.opposite());
    for (int j = 0; j < S.dim(); ++j) {
      const RatFunc want = j == r ? S.one() : S.zero();
      if (v(0, j) != want || w(0, j) != -want) cert.fail("label [" + c.to_string() + "," + d.to_string() + "]");
    }
  }
  return cert;
}

inline Certificate checkClassifyInvariance(const EdgeClassifier& cls, Sampler& rng, int samples) {
  const OrbitEngine& eng = cls.engine();
  const int n = eng.n();
  Certificate cert{"classify-invariance", {{"q", std::to_string(eng.field().q())}, {"n", std::to_string(n)}}, true, ""};
  for (int s = 0; s < samples; ++s) {
    const OrientedEdge e = rng.edge(3, 1 + s % 4);
    const Mat2A g = rng.gamma1(n, 1 + s % 3);
    const EdgeClass a = cls.classify(e), b = cls.classify(applyMatrix(g, e));
    if (a.stable != b.stable || a.sign != b.sign || a.i != b.i || a.c != b.c || a.d != b.d)
      cert.fail("orbit data changed under a Gamma_1(t^n) translate at sample " + std::to_string(s));
  }
  return cert;
}

/// Diamond operators over Theta_n: commutation with the given Hecke
/// operators and the homomorphism property; in weight 2 also agreement with
/// the closed-form permutation.
inline std::vector<Certificate> checkDiamonds(const CocycleSpace& S, const std::vector<OperatorMatrix>& hecke) {
  Certificate comm = makeCert("diamond-hecke-commutation", S), hom = makeCert("diamond-homomorphism", S),
              closed = makeCert("diamond-closed-form", S);
  const int n = S.context().n();
  const auto& theta = S.context().theta();
  std::vector<MatK> D;
  for (const auto& a : theta) {
    D.push_back(diamond(S, a).m);
    for (const auto& T : hecke)
      if (!commutator(D.back(), T.m).is_zero()) comm.fail("<" + a.to_string() + "> vs " + T.name);
    if (S.k() == 2 && !S.labels().empty() && diamondClosedForm(S, a).m != D.back())
      closed.fail("<" + a.to_string() + ">");
  }
  for (std::size_t i = 0; i < theta.size(); ++i)
    for (std::size_t j = 0; j < theta.size(); ++j) {
      const Poly prod = (theta[i] * theta[j]).mod_tn(n);
      std::size_t k = 0;
      while (theta[k] != prod) ++k;
      if (D[k] != D[i] * D[j]) hom.fail("<" + theta[i].to_string() + "><" + theta[j].to_string() + ">");
    }
  std::vector<Certificate> out{comm, hom};
  if (S.k() == 2 && !S.labels().empty()) out.push_back(closed);
  return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_PROPERTIES_HPP
