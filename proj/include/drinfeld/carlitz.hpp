#ifndef DRINFELD_CARLITZ_HPP
#define DRINFELD_CARLITZ_HPP

// The Carlitz module, exponential coefficients of C[m], Goss polynomials,
// and the power-series identities for the uniformizer u(z).

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"
#include "report.hpp"
#include "unipoly.hpp"

namespace drinfeld {

/// Additive polynomial sum_i phi[i] Z^{q^i} with coefficients in A.
struct CarlitzPoly {
  Poly a;
  std::vector<Poly> phi;
};

/// (f o g) for F_q-linear polynomials: sum f_i g_j^{q^i} tau^{i+j}.
inline std::vector<Poly> composeAdditive(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<Poly> out(f.size() + g.size() - 1, zero_like(f[0]));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j].frobenius(static_cast<int>(i));
  return out;
}

inline CarlitzPoly carlitzPhi(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("Carlitz action of zero");
  const FiniteField& f = *a.field();
  const std::vector<Poly> phi_t{Poly::t(f), Poly::one(f)};
  std::vector<Poly> power{Poly::one(f)};  // Phi_{t^j}
  std::vector<Poly> sum(a.degree() + 1, Poly(f));
  for (int j = 0; j <= a.degree(); ++j) {
    if (j > 0) power = composeAdditive(phi_t, power);
    const FqCode aj = a.coeff(j);
    if (aj == 0) continue;
    for (std::size_t i = 0; i < power.size(); ++i) sum[i] += power[i].scaled(aj);
  }
  return {a, sum};
}

/// alpha_i: coefficient of Z^{q^i} in m^{-1} Phi_m(Z).
struct ExpCoeffs {
  Poly m;
  int r = 0;
  std::vector<RatFunc> alpha;
};

inline ExpCoeffs expCoeffs(const Poly& m) {
  if (!m.is_monic() || !m.is_irreducible()) throw std::invalid_argument("m must be monic irreducible: " + m.to_string());
  auto phi = carlitzPhi(m).phi;
  ExpCoeffs e{m, m.degree(), {}};
  for (const auto& c : phi) e.alpha.push_back(RatFunc(c, m));
  return e;
}

/// G_{1..imax} with respect to C[m]; index 0 holds G_0 = 0.
/// Recursion G_i = X (G_{i-1} + alpha_1 G_{i-q} + alpha_2 G_{i-q^2} + ...),
/// with G_j = 0 for j <= 0.
inline std::vector<UniPoly<RatFunc>> gossPolynomials(const Poly& m, int imax) {
  if (imax < 1) throw std::invalid_argument("imax must be >= 1");
  const ExpCoeffs e = expCoeffs(m);
  const FiniteField& f = *m.field();
  const RatFunc one = RatFunc::one(f);
  const auto X = UniPoly<RatFunc>::x_power(1, one);
  std::vector<UniPoly<RatFunc>> G(imax + 1);
  for (int i = 1; i <= imax; ++i) {
    UniPoly<RatFunc> s = i == 1 ? UniPoly<RatFunc>::constant(one) : G[i - 1];
    long long qi = f.q();
    for (int j = 1; j <= e.r && qi < i; ++j, qi *= f.q()) s = s + e.alpha[j] * G[i - qi];
    G[i] = X * s;
  }
  return G;
}

/// Power series in one variable over a commutative ring R, truncated.
template <class R>
struct Series {
  std::vector<R> c;  // c[j] multiplies u^j; size = precision

  int precision() const { return static_cast<int>(c.size()); }
  int order() const {
    for (int j = 0; j < precision(); ++j)
      if (!c[j].is_zero()) return j;
    return precision();
  }

  friend Series operator*(const Series& a, const Series& b) {
    const int p = std::min(a.precision(), b.precision());
    Series r{std::vector<R>(p, zero_like(a.c[0]))};
    for (int i = 0; i < p; ++i) {
      if (a.c[i].is_zero()) continue;
      for (int j = 0; i + j < p; ++j)
        if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
  }

  /// Inverse of a series with constant term 1; stays inside R.
  Series inverse_unit() const {
    if (!c[0].is_one()) throw std::domain_error("series inverse needs constant term 1");
    Series r{std::vector<R>(precision(), zero_like(c[0]))};
    r.c[0] = c[0];
    for (int i = 1; i < precision(); ++i) {
      R s = zero_like(c[0]);
      for (int j = 1; j <= i; ++j)
        if (!c[j].is_zero()) s = s - c[j] * r.c[i - j];
      r.c[i] = s;
    }
    return r;
  }
};

/// u(mz) = 1/Phi_m(1/u) = u^{q^r} / (1 + c_{r-1} u^{q^r-q^{r-1}} + ... + m u^{q^r-1})
/// as a series in u over A.
inline Series<Poly> uOfMz(const Poly& m, int precision) {
  const auto phi = carlitzPhi(m).phi;
  const FiniteField& f = *m.field();
  const int r = m.degree();
  long long qr = 1;
  for (int i = 0; i < r; ++i) qr *= f.q();
  if (precision <= qr) throw std::invalid_argument("precision too small for u(mz)");
  Series<Poly> den{std::vector<Poly>(precision, Poly(f))};
  long long qi = 1;
  for (int i = 0; i <= r; ++i, qi *= f.q())
    if (qr - qi < precision) den.c[qr - qi] += phi[i];
  Series<Poly> num{std::vector<Poly>(precision, Poly(f))};
  num.c[qr] = Poly::one(f);
  return num * den.inverse_unit();
}

/// Checks items (1)-(3) of the uniformizer coefficient lemma for m.
inline Certificate verifyCoeffLemma(const Poly& m, int imax, int precision) {
  const FiniteField& f = *m.field();
  long long qr = 1;
  for (int i = 0; i < m.degree(); ++i) qr *= f.q();
  if (precision < qr + 2) throw std::invalid_argument("precision too small to certify the order claim");
  Certificate cert{"uniformizer-coefficients", {{"q", std::to_string(f.q())}, {"m", m.to_string()},
                                                {"imax", std::to_string(imax)}, {"precision", std::to_string(precision)}}};
  const ExpCoeffs e = expCoeffs(m);
  for (int i = 0; i < e.r; ++i)
    if (!e.alpha[i].is_polynomial()) cert.fail("alpha_" + std::to_string(i) + " not in A");
  if (e.alpha[e.r] != RatFunc(Poly::one(f), m)) cert.fail("alpha_r != 1/m");

  const auto G = gossPolynomials(m, imax);
  const RatFunc mK(m);
  // (1) G_1(mX) = mX
  if (G[1].degree() != 1 || G[1].coeff(1) * mK != mK || !G[1].coeff(0).is_zero()) cert.fail("G_1(mX) != mX");
  // (2) G_i(mX) in m A[X] with no linear term
  for (int i = 2; i <= imax; ++i) {
    RatFunc mj = RatFunc::one(f);
    for (int j = 0; j <= G[i].degree(); ++j, mj = mj * mK) {
      const RatFunc c = G[i].coeff(j) * mj;
      if ((j <= 1 && !c.is_zero()) || !(c / mK).is_polynomial()) {
        cert.fail("G_" + std::to_string(i) + "(mX) coefficient of X^" + std::to_string(j) + " = " + c.to_string());
        break;
      }
    }
  }
  // (3) u(mz) in u^2 A[[u]] with leading term u^{q^r}
  const auto s = uOfMz(m, precision);
  if (s.order() < 2 || s.order() != qr || !s.c[qr].is_one()) cert.fail("u(mz) has order " + std::to_string(s.order()));
  if (cert.ok) cert.witness = "u(mz) = u^" + std::to_string(qr) + " + ... to O(u^" + std::to_string(precision) + ")";
  return cert;
}

/// Polynomials in the formal symbols zeta, beta with coefficients in A.
class ZetaBetaPoly {
 public:
  using Key = std::pair<int, int>;  // (exponent of zeta, exponent of beta)

  ZetaBetaPoly() = default;
  static ZetaBetaPoly monomial(const Poly& c, int ez, int eb) {
    ZetaBetaPoly p;
    if (!c.is_zero()) p.terms_[{ez, eb}] = c;
    return p;
  }

  const std::map<Key, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second.is_one(); }

  friend ZetaBetaPoly operator+(const ZetaBetaPoly& a, const ZetaBetaPoly& b) {
    ZetaBetaPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  ZetaBetaPoly operator-() const {
    ZetaBetaPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  friend ZetaBetaPoly operator-(const ZetaBetaPoly& a, const ZetaBetaPoly& b) { return a + (-b); }
  friend ZetaBetaPoly operator*(const ZetaBetaPoly& a, const ZetaBetaPoly& b) {
    ZetaBetaPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  friend bool operator==(const ZetaBetaPoly& a, const ZetaBetaPoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes beta = 0.
  ZetaBetaPoly beta_zero() const {
    ZetaBetaPoly r;
    for (const auto& [k, c] : terms_)
      if (k.second == 0) r.terms_[k] = c;
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (k.first) s += "*z^" + std::to_string(k.first);
      if (k.second) s += "*b^" + std::to_string(k.second);
    }
    return s;
  }

 private:
  void add_term(const Key& k, const Poly& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Key, Poly> terms_;
};

inline ZetaBetaPoly zero_like(const ZetaBetaPoly&) { return {}; }

/// t u / (1 + t^l beta zeta u) as a series in u over A[zeta, beta].
inline Series<ZetaBetaPoly> unifHeckeSeries(const FiniteField& f, int l, int precision) {
  Series<ZetaBetaPoly> den{std::vector<ZetaBetaPoly>(precision)};
  den.c[0] = ZetaBetaPoly::monomial(Poly::one(f), 0, 0);
  if (precision > 1) den.c[1] = ZetaBetaPoly::monomial(Poly::t(f).pow(l), 1, 1);
  Series<ZetaBetaPoly> num{std::vector<ZetaBetaPoly>(precision)};
  if (precision > 1) num.c[1] = ZetaBetaPoly::monomial(Poly::t(f), 0, 0);
  return num * den.inverse_unit();
}

inline Certificate verifyUnifHeckeLemma(const FiniteField& f, int l, int precision) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (precision < 2) throw std::invalid_argument("precision must be >= 2");
  Certificate cert{"uniformizer-level-shift",
                   {{"q", std::to_string(f.q())}, {"l", std::to_string(l)}, {"precision", std::to_string(precision)}}};
  const auto s = unifHeckeSeries(f, l, precision);
  // Membership in A[zeta, beta] holds by construction once the inverse
  // stayed inside the ring; the remaining claims are order and leading term.
  if (s.order() != 1) cert.fail("order " + std::to_string(s.order()));
  else if (!(s.c[1] == ZetaBetaPoly::monomial(Poly::t(f), 0, 0))) cert.fail("leading coefficient " + s.c[1].to_string());
  for (int j = 2; j < precision && cert.ok; ++j)
    if (!s.c[j].beta_zero().is_zero()) cert.fail("beta = 0 specialization nonzero at u^" + std::to_string(j));
  if (cert.ok) cert.witness = "t*u - t^" + std::to_string(l + 1) + "*zeta*beta*u^2 + ...";
  return cert;
}

}  // namespace drinfeld

#endif  // DRINFELD_CARLITZ_HPP
