#ifndef DRINFELD_MAT2_HPP
#define DRINFELD_MAT2_HPP

// 2x2 matrices over A or K.

#include <optional>
#include <stdexcept>
#include <string>

#include "ratfunc.hpp"

namespace drinfeld {

template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  /// (d -b; -c a); the inverse when det = 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  std::string to_string() const {
    return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
  }
};

using Mat2A = Mat2<Poly>;
using Mat2K = Mat2<RatFunc>;

inline Mat2A identityA(const FiniteField& f) { return {Poly::one(f), Poly(f), Poly(f), Poly::one(f)}; }
inline Mat2A matJ(const FiniteField& f) { return {Poly(f), -Poly::one(f), Poly::one(f), Poly(f)}; }
inline Mat2A diagA(const Poly& x, const Poly& y) { return {x, zero_like(x), zero_like(x), y}; }
inline Mat2A upperUnipotent(const Poly& b, const FiniteField& f) { return {Poly::one(f), b, Poly(f), Poly::one(f)}; }

inline Mat2K toK(const Mat2A& m) { return {RatFunc(m.a), RatFunc(m.b), RatFunc(m.c), RatFunc(m.d)}; }

/// The matrix over A if all entries are polynomials.
inline std::optional<Mat2A> toA(const Mat2K& m) {
  if (!m.a.is_polynomial() || !m.b.is_polynomial() || !m.c.is_polynomial() || !m.d.is_polynomial()) return std::nullopt;
  return Mat2A{m.a.num(), m.b.num(), m.c.num(), m.d.num()};
}

inline Mat2K inverseK(const Mat2K& m) {
  const RatFunc det = m.det();
  if (det.is_zero()) throw std::domain_error("singular 2x2 matrix");
  const RatFunc inv = det.inverse();
  return {inv * m.d, -inv * m.b, -inv * m.c, inv * m.a};
}

inline Mat2A reduceMod(const Mat2A& m, int n) { return {m.a.mod_tn(n), m.b.mod_tn(n), m.c.mod_tn(n), m.d.mod_tn(n)}; }

/// Entrywise product modulo t^n.
inline Mat2A mulMod(const Mat2A& x, const Mat2A& y, int n) { return reduceMod(x * y, n); }

inline bool operator<(const Mat2A& x, const Mat2A& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

}  // namespace drinfeld

#endif  // DRINFELD_MAT2_HPP
