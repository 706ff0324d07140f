#ifndef DRINFELD_LAURENT_HPP
#define DRINFELD_LAURENT_HPP

// Truncated Laurent series in pi = 1/t, realizing K inside K_infinity.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace drinfeld {

struct Laurent {
  const FiniteField* field = nullptr;
  int lead_exponent = 0;         // valuation in pi of the first stored term
  std::vector<FqCode> coeffs;    // coeffs[j] multiplies pi^(lead_exponent + j)
  int precision = 0;             // number of known terms

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](FqCode c) { return c == 0; });
  }
  /// Exponent up to which the series is known (exclusive).
  int known_until() const { return lead_exponent + precision; }
  FqCode coeff_at(int exponent) const {
    const int j = exponent - lead_exponent;
    if (j < 0) return 0;
    if (j >= precision) throw std::out_of_range("Laurent coefficient beyond precision");
    return j < static_cast<int>(coeffs.size()) ? coeffs[j] : 0;
  }

  std::string to_string() const {
    std::string s;
    for (int j = 0; j < precision; ++j) {
      if (coeffs[j] == 0) continue;
      if (!s.empty()) s += " + ";
      const int e = lead_exponent + j;
      if (coeffs[j] != 1 || e == 0) s += std::to_string(coeffs[j]);
      if (e != 0) s += (coeffs[j] != 1 ? "*" : std::string()) + "pi^" + std::to_string(e);
    }
    return (s.empty() ? "0" : s) + " + O(pi^" + std::to_string(known_until()) + ")";
  }
};

namespace detail {

// Power series quotient a/b in one variable, b(0) != 0, to prec terms.
inline std::vector<FqCode> series_div(const FiniteField& f, const std::vector<FqCode>& a,
                                      const std::vector<FqCode>& b, int prec) {
  std::vector<FqCode> out(prec, 0);
  const FqCode b0inv = f.inv(b.at(0));
  for (int i = 0; i < prec; ++i) {
    FqCode s = i < static_cast<int>(a.size()) ? a[i] : 0;
    for (int j = 1; j <= i && j < static_cast<int>(b.size()); ++j) s = f.sub(s, f.mul(b[j], out[i - j]));
    out[i] = f.mul(s, b0inv);
  }
  return out;
}

inline std::vector<FqCode> reversed(const Poly& p) {
  std::vector<FqCode> r(p.coeffs().rbegin(), p.coeffs().rend());
  return r;
}

}  // namespace detail

/// Expansion of x at infinity with `precision` terms from the leading one.
inline Laurent laurentExpand(const RatFunc& x, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  Laurent L;
  L.field = x.field();
  L.precision = precision;
  if (x.is_zero()) {
    L.coeffs.assign(precision, 0);
    return L;
  }
  // num(t) = pi^{-deg num} rev(num)(pi), likewise for den.
  L.lead_exponent = x.den().degree() - x.num().degree();
  L.coeffs = detail::series_div(*L.field, detail::reversed(x.num()), detail::reversed(x.den()), precision);
  return L;
}

/// Product of two expansions, to the precision both determine.
inline Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.field = a.field ? a.field : b.field;
  r.lead_exponent = a.lead_exponent + b.lead_exponent;
  r.precision = std::min(a.precision, b.precision);
  r.coeffs.assign(r.precision, 0);
  for (int i = 0; i < r.precision; ++i)
    for (int j = 0; i + j < r.precision; ++j)
      r.coeffs[i + j] = r.field->add(r.coeffs[i + j], r.field->mul(a.coeffs[i], b.coeffs[j]));
  return r;
}

}  // namespace drinfeld

#endif  // DRINFELD_LAURENT_HPP
