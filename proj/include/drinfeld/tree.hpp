#ifndef DRINFELD_TREE_HPP
#define DRINFELD_TREE_HPP

// Vertices and oriented edges of the Bruhat-Tits tree of SL_2(K_infinity).
//
// Lattices are spanned by rows; g acts by L -> L g^{-1}, so the vertex
// M v_0 is the class of O^2 M^{-1}. Every class has a unique basis of rows
// (pi^r, s), (0, 1) with s in K_infinity / O, i.e. s a polynomial in t with
// zero constant term. The vertex is stored as (r, s) and equals
// M(r, s) v_0 with M(r, s) = (t^r, -t^r s; 0, 1).

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mat2.hpp"

namespace drinfeld {

struct Vertex {
  int r = 0;
  Poly s;  // in tF_q[t]

  friend bool operator==(const Vertex& x, const Vertex& y) { return x.r == y.r && x.s == y.s; }
  friend bool operator!=(const Vertex& x, const Vertex& y) { return !(x == y); }
  friend bool operator<(const Vertex& x, const Vertex& y) { return x.r != y.r ? x.r < y.r : x.s < y.s; }
  std::string to_string() const { return "(" + std::to_string(r) + ", " + s.to_string() + ")"; }
};

struct OrientedEdge {
  Vertex origin, terminus;

  OrientedEdge opposite() const { return {terminus, origin}; }
  friend bool operator==(const OrientedEdge& x, const OrientedEdge& y) {
    return x.origin == y.origin && x.terminus == y.terminus;
  }
  friend bool operator!=(const OrientedEdge& x, const OrientedEdge& y) { return !(x == y); }
  std::string to_string() const { return origin.to_string() + " -> " + terminus.to_string(); }
};

/// t^r in K for any integer r.
inline RatFunc tPower(const FiniteField& f, int r) {
  return r >= 0 ? RatFunc(Poly::t(f).pow(r)) : RatFunc(Poly::one(f), Poly::t(f).pow(-r));
}

/// Canonical form of the vertex M v_0.
inline Vertex canonicalVertex(const Mat2K& M) {
  const FiniteField& f = *M.a.field();
  const Mat2K N = inverseK(M);
  RatFunc p1 = N.a, p2 = N.b, o1 = N.c, o2 = N.d;
  // Pivot on the row whose first entry has the largest degree.
  if (p1.is_zero() || (!o1.is_zero() && o1.degree() > p1.degree())) {
    std::swap(p1, o1);
    std::swap(p2, o2);
  }
  if (!o1.is_zero()) o2 = o2 - (o1 / p1) * p2;
  const int r = o2.degree() - p1.degree();
  const RatFunc y = p2 / p1 * tPower(f, -r);
  Poly s = Poly::divmod(y.num(), y.den()).first;
  s.set_coeff(0, 0);
  return {r, s};
}

inline Mat2K vertexMatrix(const Vertex& v, const FiniteField& f) {
  const RatFunc tr = tPower(f, v.r);
  return {tr, -tr * RatFunc(v.s), RatFunc::zero(f), RatFunc::one(f)};
}

/// v_i = diag(t^i, 1) v_0.
inline Vertex apartmentVertex(const FiniteField& f, int i) { return {i, Poly(f)}; }
/// e_i = (v_i -> v_{i+1}).
inline OrientedEdge apartmentEdge(const FiniteField& f, int i) { return {apartmentVertex(f, i), apartmentVertex(f, i + 1)}; }

inline Vertex applyMatrix(const Mat2K& g, const Vertex& v) {
  if (g.det().is_zero()) throw std::invalid_argument("singular matrix acting on the tree");
  return canonicalVertex(g * vertexMatrix(v, *g.a.field()));
}
inline Vertex applyMatrix(const Mat2A& g, const Vertex& v) { return applyMatrix(toK(g), v); }
inline OrientedEdge applyMatrix(const Mat2K& g, const OrientedEdge& e) {
  return {applyMatrix(g, e.origin), applyMatrix(g, e.terminus)};
}
inline OrientedEdge applyMatrix(const Mat2A& g, const OrientedEdge& e) { return applyMatrix(toK(g), e); }

/// The edge g e_i for g over K.
inline OrientedEdge edgeOf(const Mat2K& g, int i) {
  const FiniteField& f = *g.a.field();
  const Mat2K di{tPower(f, i), RatFunc::zero(f), RatFunc::zero(f), RatFunc::one(f)};
  const Mat2K dj{tPower(f, i + 1), RatFunc::zero(f), RatFunc::zero(f), RatFunc::one(f)};
  return {canonicalVertex(g * di), canonicalVertex(g * dj)};
}
inline OrientedEdge edgeOf(const Mat2A& g, int i) { return edgeOf(toK(g), i); }

struct VertexReduction {
  Mat2A gamma;  // gamma v = v_j
  int j;
};

/// Moves a vertex to the half-line {v_j : j >= 0} by SL_2(A):
/// translate by the polynomial part of the slope, invert by J, repeat.
inline VertexReduction reduceVertex(const Vertex& v, const FiniteField& f) {
  Mat2A gamma = identityA(f);
  Vertex cur = v;
  const int bound = 4 * (std::abs(v.r) + std::max(v.s.degree(), 0)) + 8;
  for (int step = 0; step < bound; ++step) {
    if (cur.r >= 0) {
      gamma = upperUnipotent(Poly::t(f).pow(cur.r) * cur.s, f) * gamma;
      return {gamma, cur.r};
    }
    const int R = -cur.r;
    const Mat2A move = matJ(f) * upperUnipotent(cur.s.shift_down(R), f);
    gamma = move * gamma;
    cur = applyMatrix(move, cur);
  }
  throw std::logic_error("vertex reduction did not terminate for " + v.to_string());
}

struct EdgeReduction {
  Mat2A g;   // e = sign * g e_i
  int i;
  int sign;
};

/// Writes e = sign * g e_i with g in SL_2(A) and i >= 0.
inline EdgeReduction reduceToApartment(const OrientedEdge& e, const FiniteField& f) {
  const auto [gamma, j] = reduceVertex(e.origin, f);
  const Vertex term = applyMatrix(gamma, e.terminus);
  const Mat2A ginv = gamma.adjugate();
  if (term == apartmentVertex(f, j + 1)) return {ginv, j, +1};
  // Remaining neighbours: (j-1, -lambda t).
  if (term.r != j - 1 || term.s.degree() > 1) throw std::logic_error("edge endpoints are not adjacent: " + e.to_string());
  const FqCode lambda = f.neg(term.s.coeff(1));
  if (j >= 1) {
    const Mat2A sigma = upperUnipotent(Poly::monomial(f, lambda, j), f);
    return {ginv * sigma, j - 1, -1};
  }
  const Mat2A sigma = upperUnipotent(Poly::constant(f, lambda), f) * matJ(f);
  return {ginv * sigma, 0, +1};
}

/// Stab(SL_2(A), e_i) = {(a b; 0 a^{-1}) : a in F_q^*, deg b <= i}.
struct ApartmentStabilizer {
  int i;
  long long order;
  std::vector<Mat2A> generators;
};

inline ApartmentStabilizer stabilizerApartment(const FiniteField& f, int i) {
  if (i < 0) throw std::invalid_argument("apartment index must be >= 0");
  ApartmentStabilizer st{i, f.q() - 1, {}};
  const FqCode g = f.primitive_element();
  if (f.q() > 2) st.generators.push_back(diagA(Poly::constant(f, g), Poly::constant(f, f.inv(g))));
  for (int j = 0; j <= i; ++j) {
    st.order *= f.q();
    for (int e = 0; e < f.e(); ++e)
      st.generators.push_back(upperUnipotent(Poly::monomial(f, static_cast<FqCode>(ipow(f.p(), e)), j), f));
  }
  return st;
}

/// All elements of Stab(e_i) (small i only).
inline std::vector<Mat2A> stabilizerElements(const FiniteField& f, int i) {
  std::vector<Mat2A> out;
  for (int a = 1; a < f.q(); ++a)
    for (const auto& b : Poly::all_below_degree(f, i + 1))
      out.push_back({Poly::constant(f, static_cast<FqCode>(a)), b, Poly(f), Poly::constant(f, f.inv(static_cast<FqCode>(a)))});
  return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_TREE_HPP
