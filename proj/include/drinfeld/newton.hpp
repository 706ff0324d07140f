#ifndef DRINFELD_NEWTON_HPP
#define DRINFELD_NEWTON_HPP

// t-adic slope data of polynomials over K.

#include <stdexcept>

#include "ratfunc.hpp"
#include "unipoly.hpp"

namespace drinfeld {

/// Value at t = 0 of a t-integral element of K.
inline FqCode reduceModT(const RatFunc& x) {
  if (x.is_zero()) return 0;
  if (x.vt() < 0) throw std::domain_error("element not t-integral: " + x.to_string());
  const FiniteField& f = *x.field();
  return f.div(x.num().coeff(0), x.den().coeff(0));
}

/// Number of roots (with multiplicity) of t-adic valuation zero of a monic,
/// t-integral polynomial: deg f minus the multiplicity of X in f mod t.
inline int newtonPolygonSlopeZeroCount(const UniPoly<RatFunc>& f) {
  if (f.is_zero() || !f.lead().is_one()) throw std::invalid_argument("slope count needs a monic polynomial");
  int lowest = -1;
  for (int i = 0; i <= f.degree(); ++i) {
    if (reduceModT(f.coeff(i)) != 0 && lowest < 0) lowest = i;
  }
  return f.degree() - lowest;
}

}  // namespace drinfeld

#endif  // DRINFELD_NEWTON_HPP
