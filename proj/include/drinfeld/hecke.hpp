#ifndef DRINFELD_HECKE_HPP
#define DRINFELD_HECKE_HPP

// Hecke and diamond operators on cocycle spaces, and the ordinary-part
// certificate built from the characteristic polynomial of U_t.

#include <set>
#include <string>
#include <vector>

#include "cocycle.hpp"
#include "newton.hpp"
#include "report.hpp"

namespace drinfeld {

struct OperatorMatrix {
  std::string name;
  MatK m;
};

/// U_t: xi_beta = (1 beta; 0 t), beta in F_q.
inline OperatorMatrix heckeUt(const CocycleSpace& S) {
  const FiniteField& f = S.field();
  std::vector<Mat2A> xis;
  for (int b = 0; b < f.q(); ++b) xis.push_back(xiMatrix(Poly::t(f), Poly::constant(f, static_cast<FqCode>(b))));
  return {"Ut", S.inBasis(S.operatorInCoordinates(xis))};
}

/// T_m for m monic irreducible and prime to t.
inline OperatorMatrix heckeTm(const CocycleSpace& S, const Poly& m) {
  if (!m.is_monic() || !m.is_irreducible()) throw std::invalid_argument("T_m needs m monic irreducible: " + m.to_string());
  if (m.coeff(0) == 0) throw std::invalid_argument("T_m needs m prime to t; use Ut");
  std::vector<Mat2A> xis;
  for (const auto& beta : Poly::all_below_degree(S.field(), m.degree())) xis.push_back(xiMatrix(m, beta));
  xis.push_back(xiDiamond(m, S.context().n()));
  return {"Tm:" + m.to_string(), S.inBasis(S.operatorInCoordinates(xis))};
}

/// <alpha> through eta_{alpha,diamond} and transport.
inline OperatorMatrix diamond(const CocycleSpace& S, const Poly& alpha) {
  if (alpha.coeff(0) == 0) throw std::invalid_argument("diamond needs a unit modulo t^n: " + alpha.to_string());
  return {"Diamond:" + alpha.to_string(), S.inBasis(S.operatorInCoordinates({etaDiamond(alpha, S.context().n())}))};
}

/// Image of the label (c, d) under <1+ta>: ((1+ta)^{-1}c, (1+ta)^{-1}(d-a)) in A_{n-1}.
inline std::pair<Poly, Poly> thetaLabelAction(const Poly& a, const Poly& c, const Poly& d, int n) {
  const FiniteField& f = *c.field();
  const int m = n - 1;
  if (m == 0) return {Poly(f), Poly(f)};
  const Poly u = Residue::inverse_mod_tn((Poly::one(f) + Poly::t(f) * a).mod_tn(m), m);
  return {(u * c).mod_tn(m), (u * (d - a)).mod_tn(m)};
}

/// a with alpha = 1 + ta in Theta_n.
inline Poly thetaParameter(const Poly& alpha, int n) {
  const FiniteField& f = *alpha.field();
  const Poly r = alpha.mod_tn(n);
  if (r.coeff(0) != 1) throw std::invalid_argument("not in Theta_n: " + alpha.to_string());
  return (r - Poly::one(f)).shift_down(1).mod_tn(n - 1);
}

/// Weight-2 diamond from the label permutation, in the delta basis.
inline OperatorMatrix diamondClosedForm(const CocycleSpace& S, const Poly& alpha) {
  if (S.k() != 2 || S.labels().empty()) throw std::logic_error("closed form needs the weight-2 delta basis");
  const int n = S.context().n();
  const Poly a = thetaParameter(alpha, n);
  MatK P(S.dim(), S.dim(), S.zero());
  for (int j = 0; j < S.dim(); ++j) {
    const auto& [c, d] = S.labels()[j];
    const auto img = thetaLabelAction(a, c, d, n);
    P(S.labelIndex(img.first, img.second), j) = S.one();
  }
  return {"Diamond:" + alpha.to_string(), P};
}

inline MatK commutator(const MatK& x, const MatK& y) { return x * y - y * x; }

/// Fixed-point-freeness of the Theta_n action on labels and its orbit shape.
inline Certificate verifyFreeness(const GroupContext& ctx) {
  Certificate cert{"theta-freeness", {{"q", std::to_string(ctx.q())}, {"n", std::to_string(ctx.n())}}, true, ""};
  const int n = ctx.n();
  const auto& res = ctx.residues();
  for (const auto& alpha : ctx.theta()) {
    const Poly a = thetaParameter(alpha, n);
    if (a.is_zero()) continue;
    for (const auto& c : res)
      for (const auto& d : res)
        if (thetaLabelAction(a, c, d, n) == std::make_pair(c, d))
          cert.fail("1+t(" + a.to_string() + ") fixes [" + c.to_string() + "," + d.to_string() + "]");
  }
  std::set<std::pair<Poly, Poly>> seen;
  std::map<long long, long long> sizes;
  for (const auto& c : res)
    for (const auto& d : res) {
      if (seen.count({c, d})) continue;
      std::set<std::pair<Poly, Poly>> orbit;
      for (const auto& alpha : ctx.theta()) orbit.insert(thetaLabelAction(thetaParameter(alpha, n), c, d, n));
      seen.insert(orbit.begin(), orbit.end());
      ++sizes[static_cast<long long>(orbit.size())];
    }
  const long long r = ipow(ctx.q(), n - 1);
  if (sizes.size() != 1 || sizes.begin()->first != r || sizes.begin()->second != r) {
    std::string s;
    for (const auto& [size, count] : sizes) s += std::to_string(count) + "x" + std::to_string(size) + " ";
    cert.fail("orbit shape " + s);
  }
  if (cert.ok) cert.witness = std::to_string(r) + " orbits of size " + std::to_string(r);
  return cert;
}

struct HeckeFlag {
  std::string name;
  std::string status;  // pass | scalar-off | fail
  std::string scalar;  // for scalar-off
};

struct OrdinaryCertificate {
  long long r = 0;
  int d = 0;
  UniPoly<RatFunc> chi, chi_plus;
  bool divisibility = false;
  bool positive_slope = false;
  bool unipotence_kill = false;
  std::vector<HeckeFlag> hecke;
  std::string witness;

  bool utFlagsOk() const { return divisibility && positive_slope && unipotence_kill; }
  bool valid() const {
    if (!utFlagsOk()) return false;
    for (const auto& h : hecke)
      if (h.status != "pass") return false;
    return true;
  }
};

inline OrdinaryCertificate ordinaryCertificate(const CocycleSpace& S, const MatK& Ut, const std::vector<OperatorMatrix>& heckeList) {
  OrdinaryCertificate cert;
  const RatFunc one = S.one();
  cert.d = Ut.rows();
  cert.r = ipow(S.context().q(), S.context().n() - 1);
  cert.chi = Ut.charpoly(one);
  UniPoly<RatFunc> rest = cert.chi;
  const auto xm1 = UniPoly<RatFunc>::linear(one, one);
  cert.divisibility = true;
  for (long long j = 0; j < cert.r; ++j) {
    auto [quo, rem] = UniPoly<RatFunc>::divmod(rest, xm1);
    if (rem.degree() >= 0) {
      cert.divisibility = false;
      cert.witness = "(X-1)^" + std::to_string(cert.r) + " does not divide charpoly(Ut) = " + cert.chi.to_string();
      return cert;
    }
    rest = quo;
  }
  cert.chi_plus = rest;
  if (S.k() == 2) {
    cert.positive_slope = rest == UniPoly<RatFunc>::x_power(cert.d - static_cast<int>(cert.r), one);
  } else {
    cert.positive_slope = newtonPolygonSlopeZeroCount(rest) == 0;
  }
  if (!cert.positive_slope) {
    cert.witness = "chi_plus has unit roots: " + rest.to_string();
    return cert;
  }
  const MatK I = MatK::identity(cert.d, one);
  const MatK P = evalPoly(rest, Ut, one);
  cert.unipotence_kill = ((Ut - I) * P).is_zero();
  if (!cert.unipotence_kill) cert.witness = "(Ut-1) chi_plus(Ut) != 0";
  for (const auto& T : heckeList) {
    HeckeFlag flag{T.name, "pass", ""};
    const MatK TP = T.m * P;
    if (!(TP - P).is_zero()) {
      flag.status = "fail";
      // Look for a global scalar s with (T - s) chi_plus(Ut) = 0.
      for (int j = 0; j < P.cols() && flag.status == "fail"; ++j)
        for (int i = 0; i < P.rows(); ++i)
          if (!P(i, j).is_zero()) {
            const RatFunc s = TP(i, j) / P(i, j);
            if ((TP - s * P).is_zero()) {
              flag.status = "scalar-off";
              flag.scalar = s.to_string();
            }
            break;
          }
      if (cert.witness.empty()) cert.witness = T.name + " is not the identity on the ordinary part";
    }
    cert.hecke.push_back(flag);
  }
  return cert;
}

struct NilpotencyReport {
  int primary_dim = 0;  // dimension of the generalized 0-eigenspace of Ut
  int index = 0;        // nilpotency index of Ut there
  bool killed_by_dim_power = false;
  std::string note;
};

inline NilpotencyReport nilpotencyDiagnostics(const MatK& Ut, const RatFunc& one) {
  NilpotencyReport rep;
  const int d = Ut.rows();
  MatK power = MatK::identity(d, one);
  std::vector<int> ranks{d};
  for (int j = 1; j <= d; ++j) {
    power = power * Ut;
    ranks.push_back(power.rank());
  }
  rep.primary_dim = d - ranks[d];
  while (rep.index < d && ranks[rep.index] != ranks[d]) ++rep.index;
  const MatK primary = power.kernel(one);
  rep.killed_by_dim_power = primary.cols() == rep.primary_dim && (power * primary).is_zero();
  rep.note = "the complement of the ordinary part is only seen through this block; S_2^(2) itself is not computed";
  return rep;
}

}  // namespace drinfeld

#endif  // DRINFELD_HECKE_HPP
