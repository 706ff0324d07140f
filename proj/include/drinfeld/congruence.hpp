#ifndef DRINFELD_CONGRUENCE_HPP
#define DRINFELD_CONGRUENCE_HPP

// Gamma_1(t^n), Gamma_0^p(t^n), lifts from SL_2(A_n), the representatives
// h_(c,d), Hecke and diamond matrices, cusps and dimension formulas.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mat2.hpp"
#include "report.hpp"
#include "residue.hpp"

namespace drinfeld {

inline void requireSL2(const Mat2A& g) {
  if (!g.det().is_one()) throw std::invalid_argument("matrix is not in SL_2(A): " + g.to_string());
}

inline bool isGamma1(const Mat2A& g, int n) {
  requireSL2(g);
  const FiniteField& f = *g.a.field();
  return (g.a - Poly::one(f)).mod_tn(n).is_zero() && g.c.mod_tn(n).is_zero() &&
         (g.d - Poly::one(f)).mod_tn(n).is_zero();
}

inline bool isGamma0p(const Mat2A& g, int n) {
  requireSL2(g);
  const FiniteField& f = *g.a.field();
  return g.c.mod_tn(n).is_zero() && (g.a - Poly::one(f)).mod_tn(1).is_zero() &&
         (g.d - Poly::one(f)).mod_tn(1).is_zero();
}

/// An element of SL_2(A) reducing to gbar modulo t^n.
/// The bottom row is lifted with degrees < n; if it is not coprime over A,
/// the entry that is not a unit at t = 0 is shifted by t^n x for the first x
/// (in index order) making it coprime. The top row is the Bezout solution
/// adjusted by the unique multiple of the bottom row of degree < n.
inline Mat2A liftSL2(const Mat2A& gbar, int n) {
  const FiniteField& f = *gbar.a.field();
  Mat2A g = reduceMod(gbar, n);
  if (n == 0) return identityA(f);
  if (!(g.det() - Poly::one(f)).mod_tn(n).is_zero()) throw std::invalid_argument("determinant is not 1 modulo t^n");
  Poly c = g.c, d = g.d;
  if (!Poly::gcd(c, d).is_one()) {
    const Poly tn = Poly::t(f).pow(n);
    const bool shift_c = d.coeff(0) != 0;
    for (long long idx = 1;; ++idx) {
      Poly x = Poly::from_index(f, idx);
      Poly cand = (shift_c ? c : d) + tn * x;
      if (Poly::gcd(shift_c ? cand : c, shift_c ? d : cand).is_one()) {
        (shift_c ? c : d) = cand;
        break;
      }
    }
  }
  auto [gcd, u, v] = Poly::xgcd(d, c);  // u d + v c = 1
  Poly a0 = u, b0 = -v;
  Poly x = d.coeff(0) != 0 ? ((g.b - b0) * Residue::inverse_mod_tn(d, n)).mod_tn(n)
                           : ((g.a - a0) * Residue::inverse_mod_tn(c, n)).mod_tn(n);
  Mat2A r{a0 + x * c, b0 + x * d, c, d};
  if (!r.det().is_one() || reduceMod(r, n) != g) throw std::logic_error("liftSL2 failed for " + gbar.to_string());
  return r;
}

/// xi_{m,beta} = (1 beta; 0 m).
inline Mat2A xiMatrix(const Poly& m, const Poly& beta) {
  if (beta.degree() >= m.degree()) throw std::invalid_argument("xi needs deg beta < deg m");
  const FiniteField& f = *m.field();
  return {Poly::one(f), beta, Poly(f), m};
}

/// eta_{a,diamond}: the lift of diag(a^{-1}, a) mod t^n.
inline Mat2A etaDiamond(const Poly& a, int n) {
  if (a.coeff(0) == 0) throw std::invalid_argument("a must be prime to t");
  const Poly ainv = Residue::inverse_mod_tn(a, n);
  return liftSL2(diagA(ainv, a.mod_tn(n)), n);
}

/// xi_{m,diamond} = eta_{m,diamond} diag(m, 1).
inline Mat2A xiDiamond(const Poly& m, int n) { return etaDiamond(m, n) * diagA(m, Poly::one(*m.field())); }

enum class CuspKind { Infinity, Zero };

struct CuspRecord {
  CuspKind kind;
  Poly c;  // zero for 0-type cusps
  Poly d;
  int width_exponent;
};

/// Shared read-only data for one level t^n.
class GroupContext {
 public:
  GroupContext(int q, int n) : f_(&FiniteField::get(q)), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    residues_ = Poly::all_below_degree(*f_, n - 1);
    theta_ = thetaGroup(*f_, n);
    for (const auto& c : residues_)
      for (const auto& d : residues_) h_.emplace(std::make_pair(c, d), liftSL2(hBar(c, d), n));
  }

  const FiniteField& field() const { return *f_; }
  int q() const { return f_->q(); }
  int n() const { return n_; }
  /// A_{n-1}, ordered by index.
  const std::vector<Poly>& residues() const { return residues_; }
  /// Theta_n = 1 + tA_n.
  const std::vector<Poly>& theta() const { return theta_; }

  /// hbar_(c,d) = (1/(1+td) 0; tc 1+td) over A_n.
  Mat2A hBar(const Poly& c, const Poly& d) const {
    const Poly t = Poly::t(*f_);
    const Poly u = (Poly::one(*f_) + t * d).mod_tn(n_);
    return {Residue::inverse_mod_tn(u, n_), Poly(*f_), (t * c).mod_tn(n_), u};
  }
  /// The fixed lift h_(c,d) in Gamma_1(t); c, d are read modulo t^{n-1}.
  const Mat2A& h(const Poly& c, const Poly& d) const {
    return h_.at(std::make_pair(c.mod_tn(n_ - 1), d.mod_tn(n_ - 1)));
  }

  std::vector<CuspRecord> cusps() const {
    std::vector<CuspRecord> out;
    for (const auto& c : residues_) {
      const int m = barVt(c, n_);
      for (const auto& d : Poly::all_below_degree(*f_, m)) out.push_back({CuspKind::Infinity, c, d, n_ - 1 - m});
    }
    for (const auto& d : residues_) out.push_back({CuspKind::Zero, Poly(*f_), d, n_});
    return out;
  }

 private:
  const FiniteField* f_;
  int n_;
  std::vector<Poly> residues_;
  std::vector<Poly> theta_;
  std::map<std::pair<Poly, Poly>, Mat2A> h_;
};

inline const Mat2A& hMatrix(const GroupContext& ctx, const Poly& c, const Poly& d) { return ctx.h(c, d); }

inline std::vector<CuspRecord> enumerateCusps(int q, int n) { return GroupContext(q, n).cusps(); }

inline long long cuspCount(int q, int n) { return static_cast<long long>(GroupContext(q, n).cusps().size()); }

inline long long genus(int q, int n) {
  long long g = 1 + ipow(q, 2 * n - 2) - (n + 1) * ipow(q, n - 1);
  if (n >= 2) g += (n - 1) * ipow(q, n - 2);
  return g;
}

/// (k-1)(g-1+h); throws if the cusp count and genus formula disagree with q^{2(n-1)}.
inline long long dimSk(int q, int n, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  const long long s = genus(q, n) - 1 + cuspCount(q, n);
  if (s != ipow(q, 2 * (n - 1))) throw std::logic_error("g - 1 + h != q^{2(n-1)}");
  return (k - 1) * s;
}

/// L * R^{-1} over K lies in Gamma_1(t^n).
inline bool inSameGamma1Coset(const Mat2A& L, const Mat2A& R, int n) {
  auto g = toA(toK(L) * inverseK(toK(R)));
  return g && g->det().is_one() && isGamma1(*g, n);
}

inline bool inGamma1t(const Mat2K& g) {
  auto a = toA(g);
  return a && a->det().is_one() && isGamma1(*a, 1);
}

/// Checks the three xi_beta congruences for every beta in F_q and (c,d).
inline Certificate verifyXiCongruences(const GroupContext& ctx) {
  const FiniteField& f = ctx.field();
  const int n = ctx.n();
  const Poly t = Poly::t(f), one = Poly::one(f);
  const Mat2A J = matJ(f);
  Certificate cert{"xi-congruences", {{"q", std::to_string(f.q())}, {"n", std::to_string(n)}}};
  long long checked = 0;
  for (int bc = 0; bc < f.q(); ++bc) {
    const Poly beta = Poly::constant(f, static_cast<FqCode>(bc));
    const Mat2A xi = xiMatrix(t, beta);
    for (const auto& c : ctx.residues())
      for (const auto& d : ctx.residues()) {
        const std::string tag = " beta=" + beta.to_string() + " c=" + c.to_string() + " d=" + d.to_string();
        const Mat2A& h = ctx.h(c, d);
        // (1)
        if (!inSameGamma1Coset(xi * h, ctx.h(t * c, d - beta * c) * xi, n)) cert.fail("item 1" + tag);
        if (bc != 0) {
          // (2)
          const Poly binv = Poly::constant(f, f.inv(static_cast<FqCode>(bc)));
          const Mat2A tail = diagA(one, t) * Mat2A{beta, -one, Poly(f), binv};
          if (!inSameGamma1Coset(xi * h * J, ctx.h(binv * (one + t * d), d - beta * c) * tail, n))
            cert.fail("item 2" + tag);
          if (!inGamma1t(toK(xi * h * J) * inverseK(toK(tail)))) cert.fail("item 2 factorization" + tag);
        } else {
          // (3)
          const Mat2A tail = J * diagA(t, one);
          if (!inSameGamma1Coset(xi * h * J, ctx.h(t * c, d) * tail, n)) cert.fail("item 3" + tag);
          if (!inGamma1t(toK(xi * h * J) * inverseK(toK(tail)))) cert.fail("item 3 factorization" + tag);
        }
        ++checked;
      }
  }
  if (cert.ok) cert.witness = std::to_string(checked) + " tuples";
  return cert;
}

/// eta_{1+ta} h_(c,d) in Gamma_1(t^n) h_((1+ta)c, a+d+tad) for all a, c, d.
inline Certificate verifyDiamondCongruence(const GroupContext& ctx) {
  const FiniteField& f = ctx.field();
  const int n = ctx.n();
  const Poly t = Poly::t(f), one = Poly::one(f);
  Certificate cert{"diamond-congruence", {{"q", std::to_string(f.q())}, {"n", std::to_string(n)}}};
  long long checked = 0;
  for (const auto& a : ctx.residues()) {
    const Poly unit = one + t * a;
    const Mat2A eta = etaDiamond(unit, n);
    if (!isGamma1(eta, 1)) cert.fail("eta not in Gamma_1(t) for a=" + a.to_string());
    for (const auto& c : ctx.residues())
      for (const auto& d : ctx.residues()) {
        if (!inSameGamma1Coset(eta * ctx.h(c, d), ctx.h(unit * c, a + d + t * a * d), n))
          cert.fail("a=" + a.to_string() + " c=" + c.to_string() + " d=" + d.to_string());
        ++checked;
      }
  }
  if (cert.ok) cert.witness = std::to_string(checked) + " tuples";
  return cert;
}

}  // namespace drinfeld

#endif  // DRINFELD_CONGRUENCE_HPP
