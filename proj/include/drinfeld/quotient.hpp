#ifndef DRINFELD_QUOTIENT_HPP
#define DRINFELD_QUOTIENT_HPP

// Gamma_1(t^n)-orbits of tree edges and vertices.
//
// The coset Gamma_1(t^n) g is determined by the bottom row (c, d) of g
// modulo t^n. An edge g e_i is therefore labelled by (c, d) modulo the right
// action of Stab(e_i) = {(a b; 0 a^{-1}) : deg b <= i}, which sends (c, d)
// to (ac, cb + a^{-1}d). Keys are canonical representatives of these
// classes; the vertex v_0 uses SL_2(F_q) instead.

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "tree.hpp"

namespace drinfeld {

/// Thrown when a configured size bound would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long maxOrbitsFromEnv() {
  if (const char* s = std::getenv("DRINFELD_MAX_ORBITS")) return std::atoll(s);
  return 200000;
}

struct RowCanon {
  Poly c, d;  // canonical bottom row, degrees < n
  Mat2A s;    // stabilizer element with (c0, d0) s = (c, d) mod t^n
};

struct Transport {
  int i;         // apartment index
  Poly c, d;     // orbit key
  Mat2A gamma;   // in Gamma_1(t^n)
  Mat2A rep;     // g e_i = gamma rep e_i
};

class OrbitEngine {
 public:
  explicit OrbitEngine(const GroupContext& ctx) : ctx_(&ctx), f_(&ctx.field()), n_(ctx.n()) {
    const FiniteField& f = *f_;
    qn_ = ipow(f.q(), n_);
    for (int a = 0; a < f.q(); ++a)
      for (int b = 0; b < f.q(); ++b)
        for (int c = 0; c < f.q(); ++c)
          for (int d = 0; d < f.q(); ++d)
            if (f.sub(f.mul(a, d), f.mul(b, c)) == 1)
              sl2fq_.push_back({Poly::constant(f, a), Poly::constant(f, b), Poly::constant(f, c), Poly::constant(f, d)});
    const long long rows = qn_ * qn_;
    edge_.resize(n_);
    for (auto& tbl : edge_) tbl.resize(rows);
    vertex0_.resize(rows);
    rep_.resize(rows);
    for (long long idx = 0; idx < rows; ++idx) {
      const Poly c = Poly::from_index(f, idx / qn_), d = Poly::from_index(f, idx % qn_);
      if (c.coeff(0) == 0 && d.coeff(0) == 0) continue;
      for (int ie = 0; ie < n_; ++ie) edge_[ie][idx] = canonStab(c, d, ie);
      vertex0_[idx] = canonSL2Fq(c, d);
      rep_[idx] = liftSL2(topCompletion(c, d), n_);
    }
  }

  const GroupContext& context() const { return *ctx_; }
  const FiniteField& field() const { return *f_; }
  int n() const { return n_; }

  long long rowIndex(const Poly& c, const Poly& d) const { return c.mod_tn(n_).index() * qn_ + d.mod_tn(n_).index(); }

  /// All bottom rows that are unimodular modulo t^n.
  std::vector<std::pair<Poly, Poly>> unimodularRows() const {
    std::vector<std::pair<Poly, Poly>> out;
    for (long long idx = 0; idx < qn_ * qn_; ++idx) {
      const Poly c = Poly::from_index(*f_, idx / qn_), d = Poly::from_index(*f_, idx % qn_);
      if (c.coeff(0) != 0 || d.coeff(0) != 0) out.emplace_back(c, d);
    }
    return out;
  }

  const RowCanon& edgeCanon(const Poly& c, const Poly& d, int i) const {
    return edge_[std::min(i, n_ - 1)][rowIndex(c, d)];
  }
  const RowCanon& vertexCanon(const Poly& c, const Poly& d, int j) const {
    return j == 0 ? vertex0_[rowIndex(c, d)] : edgeCanon(c, d, j);
  }
  /// Fixed lift of the canonical row to SL_2(A).
  const Mat2A& orbitRep(const Poly& c, const Poly& d) const { return rep_[rowIndex(c, d)]; }

  Transport transportEdge(const Mat2A& g, int i) const { return transport(g, i, edgeCanon(g.c, g.d, i)); }
  Transport transportVertex(const Mat2A& g, int j) const { return transport(g, j, vertexCanon(g.c, g.d, j)); }

  /// Number of s in Stab(e_i) with rep s rep^{-1} in Gamma_1(t^n).
  long long edgeStabOrder(const Poly& c, const Poly& d, int i) const {
    const int ie = std::min(i, n_ - 1);
    long long count = 0;
    for (const auto& s : stabilizerElements(*f_, ie))
      if (fixesRow(c, d, s)) ++count;
    return count * ipow(f_->q(), std::max(0, i + 1 - n_));
  }
  long long vertexStabOrder(const Poly& c, const Poly& d, int j) const {
    if (j > 0) return edgeStabOrder(c, d, j);
    long long count = 0;
    for (const auto& s : sl2fq_)
      if (fixesRow(c, d, s)) ++count;
    return count;
  }

  /// Nontrivial elements of Stab(Gamma_1(t^n), rep e_0).
  std::vector<Mat2A> edgeStabilizer0(const Poly& c, const Poly& d) const {
    std::vector<Mat2A> out;
    const Mat2A& rep = orbitRep(c, d);
    for (const auto& s : stabilizerElements(*f_, 0))
      if (s != identityA(*f_) && fixesRow(c, d, s)) out.push_back(rep * s * rep.adjugate());
    return out;
  }

  /// Gamma_1(t)-stability of rep e_i: only depth 0 with c(0) != 0.
  static bool isGamma1tStable(const Poly& c, int i) { return i == 0 && c.coeff(0) != 0; }

  const std::vector<Mat2A>& sl2Fq() const { return sl2fq_; }

 private:
  bool fixesRow(const Poly& c, const Poly& d, const Mat2A& s) const {
    return (c * s.a + d * s.c - c).mod_tn(n_).is_zero() && (c * s.b + d * s.d - d).mod_tn(n_).is_zero();
  }

  Transport transport(const Mat2A& g, int i, const RowCanon& rc) const {
    const Mat2A& rep = orbitRep(rc.c, rc.d);
    return {i, rc.c, rc.d, g * rc.s * rep.adjugate(), rep};
  }

  /// Top row making (top; c d) of determinant 1 modulo t^n.
  Mat2A topCompletion(const Poly& c, const Poly& d) const {
    if (d.coeff(0) != 0) return {Residue::inverse_mod_tn(d, n_), Poly(*f_), c, d};
    return {Poly(*f_), (-Residue::inverse_mod_tn(c, n_)).mod_tn(n_), c, d};
  }

  RowCanon canonStab(const Poly& c, const Poly& d, int ie) const {
    const FiniteField& f = *f_;
    // Echelon basis (by top degree) of span{c t^j mod t^n : j <= ie}, with
    // the multiplier b such that vector = c b mod t^n.
    std::vector<std::pair<Poly, Poly>> basis;
    for (int j = 0; j <= ie; ++j) {
      Poly v = c.shift_up(j).mod_tn(n_), b = Poly::monomial(f, 1, j);
      bool changed = true;
      while (!v.is_zero() && changed) {
        changed = false;
        for (const auto& [w, bw] : basis)
          if (w.degree() == v.degree()) {
            const Poly k = Poly::constant(f, v.lead());
            v = v - k * w;
            b = b - k * bw;
            changed = true;
            break;
          }
      }
      if (v.is_zero()) continue;
      const FqCode inv = f.inv(v.lead());
      basis.emplace_back(v.scaled(inv), b.scaled(inv));
    }
    std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return x.first.degree() > y.first.degree(); });
    std::optional<RowCanon> best;
    for (int a = 1; a < f.q(); ++a) {
      const FqCode ainv = f.inv(static_cast<FqCode>(a));
      const Poly ca = c.scaled(static_cast<FqCode>(a));
      Poly dd = d.scaled(ainv);
      Poly B(f);
      for (const auto& [w, bw] : basis) {
        const FqCode k = dd.coeff(w.degree());
        if (k == 0) continue;
        dd = dd - w.scaled(k);
        B = B + bw.scaled(k);
      }
      RowCanon cand{ca, dd, {Poly::constant(f, static_cast<FqCode>(a)), -B, Poly(f), Poly::constant(f, ainv)}};
      if (!best || std::make_pair(cand.c, cand.d) < std::make_pair(best->c, best->d)) best = cand;
    }
    return *best;
  }

  RowCanon canonSL2Fq(const Poly& c, const Poly& d) const {
    std::optional<RowCanon> best;
    for (const auto& s : sl2fq_) {
      RowCanon cand{(c * s.a + d * s.c).mod_tn(n_), (c * s.b + d * s.d).mod_tn(n_), s};
      if (!best || std::make_pair(cand.c, cand.d) < std::make_pair(best->c, best->d)) best = cand;
    }
    return *best;
  }

  const GroupContext* ctx_;
  const FiniteField* f_;
  int n_;
  long long qn_ = 0;
  std::vector<Mat2A> sl2fq_;
  std::vector<std::vector<RowCanon>> edge_;
  std::vector<RowCanon> vertex0_;
  std::vector<Mat2A> rep_;
};

/// Classification of an oriented edge.
struct EdgeClass {
  bool stable = false;  // Gamma_1(t)-stable
  int sign = 1;         // e = sign * witness * (representative edge)
  int i = 0;            // apartment index of the representative
  Poly c, d;            // stable: label (c, d) in A_{n-1}^2 of h_(c,d) J e_0; else orbit key
  Mat2A witness;        // stable: in Gamma_1(t^n); unstable: in SL_2(A) with e = sign * witness e_i
  std::optional<RatFunc> cusp_end;  // unstable only; nullopt means the end infinity
  Transport orbit;      // Gamma_1(t^n)-orbit data for the unsigned edge
};

class EdgeClassifier {
 public:
  explicit EdgeClassifier(const OrbitEngine& eng) : eng_(&eng) {
    const GroupContext& ctx = eng.context();
    const FiniteField& f = ctx.field();
    for (const auto& c : ctx.residues())
      for (const auto& d : ctx.residues()) {
        const Mat2A hJ = ctx.h(c, d) * matJ(f);
        const Transport tr = eng.transportEdge(hJ, 0);
        const long long key = eng.rowIndex(tr.c, tr.d);
        if (stable_.count(key)) throw std::logic_error("two representatives h_(c,d) J e_0 share an orbit");
        stable_.emplace(key, StableEntry{c, d, tr.gamma});
      }
  }

  const OrbitEngine& engine() const { return *eng_; }

  /// Label of the stable orbit with key (c, d), with hJe_0 = gamma rep e_0.
  struct StableEntry {
    Poly c, d;
    Mat2A gamma;
  };
  const std::map<long long, StableEntry>& stableOrbits() const { return stable_; }

  EdgeClass classify(const OrientedEdge& e) const {
    const FiniteField& f = eng_->field();
    const EdgeReduction red = reduceToApartment(e, f);
    return classifyReduced(red.g, red.i, red.sign);
  }

  /// Classification of sign * g e_i.
  EdgeClass classifyReduced(const Mat2A& g, int i, int sign) const {
    EdgeClass out;
    out.sign = sign;
    out.i = i;
    out.orbit = eng_->transportEdge(g, i);
    if (OrbitEngine::isGamma1tStable(out.orbit.c, i)) {
      const auto& entry = stable_.at(eng_->rowIndex(out.orbit.c, out.orbit.d));
      out.stable = true;
      out.c = entry.c;
      out.d = entry.d;
      out.witness = out.orbit.gamma * entry.gamma.adjugate();
      return out;
    }
    out.c = out.orbit.c;
    out.d = out.orbit.d;
    out.witness = g;
    if (!g.c.is_zero()) out.cusp_end = RatFunc(g.a, g.c);
    return out;
  }

 private:
  const OrbitEngine* eng_;
  std::map<long long, StableEntry> stable_;
};

struct VertexOrbit {
  int j;
  Poly c, d;
  long long stab_order;
};

struct EdgeOrbit {
  int i;
  Poly c, d;
  long long stab_order;
  bool stable;
  Poly label_c, label_d;  // meaningful when stable
  int origin, terminus;   // indices into QuotientGraph::vertices
};

struct QuotientGraph {
  int q = 0, n = 0, depth = 0;
  std::vector<VertexOrbit> vertices;
  std::vector<EdgeOrbit> edges;

  int stableCount() const {
    int s = 0;
    for (const auto& e : edges) s += e.stable;
    return s;
  }
  friend bool operator==(const QuotientGraph& x, const QuotientGraph& y) {
    if (x.q != y.q || x.n != y.n || x.depth != y.depth) return false;
    if (x.vertices.size() != y.vertices.size() || x.edges.size() != y.edges.size()) return false;
    for (std::size_t k = 0; k < x.vertices.size(); ++k) {
      const auto &a = x.vertices[k], &b = y.vertices[k];
      if (a.j != b.j || a.c != b.c || a.d != b.d || a.stab_order != b.stab_order) return false;
    }
    for (std::size_t k = 0; k < x.edges.size(); ++k) {
      const auto &a = x.edges[k], &b = y.edges[k];
      if (a.i != b.i || a.c != b.c || a.d != b.d || a.stab_order != b.stab_order || a.stable != b.stable ||
          a.label_c != b.label_c || a.label_d != b.label_d || a.origin != b.origin || a.terminus != b.terminus)
        return false;
    }
    return true;
  }
};

/// Edge orbits of e_i-type for i <= D and their endpoint vertex orbits.
inline QuotientGraph buildQuotientGraph(const EdgeClassifier& cls, int D) {
  if (D < 0) throw std::invalid_argument("depth must be >= 0");
  const OrbitEngine& eng = cls.engine();
  const FiniteField& f = eng.field();
  const long long bound = maxOrbitsFromEnv();
  QuotientGraph G{f.q(), eng.n(), D, {}, {}};
  std::map<std::pair<int, long long>, int> vindex, eindex;
  auto vertex_id = [&](const Mat2A& g, int j) {
    const RowCanon& rc = eng.vertexCanon(g.c, g.d, j);
    const auto key = std::make_pair(j, eng.rowIndex(rc.c, rc.d));
    auto it = vindex.find(key);
    if (it != vindex.end()) return it->second;
    const int id = static_cast<int>(G.vertices.size());
    G.vertices.push_back({j, rc.c, rc.d, eng.vertexStabOrder(rc.c, rc.d, j)});
    vindex.emplace(key, id);
    return id;
  };
  const auto rows = eng.unimodularRows();
  for (int i = 0; i <= D; ++i)
    for (const auto& [c, d] : rows) {
      const RowCanon& rc = eng.edgeCanon(c, d, i);
      const auto key = std::make_pair(i, eng.rowIndex(rc.c, rc.d));
      if (eindex.count(key)) continue;
      if (static_cast<long long>(G.edges.size() + G.vertices.size()) >= bound)
        throw ResourceError("quotient graph exceeds DRINFELD_MAX_ORBITS=" + std::to_string(bound));
      const Mat2A& rep = eng.orbitRep(rc.c, rc.d);
      EdgeOrbit eo{i, rc.c, rc.d, eng.edgeStabOrder(rc.c, rc.d, i), OrbitEngine::isGamma1tStable(rc.c, i),
                   Poly(f), Poly(f), vertex_id(rep, i), vertex_id(rep, i + 1)};
      if (eo.stable) {
        const auto& entry = cls.stableOrbits().at(key.second);
        eo.label_c = entry.c;
        eo.label_d = entry.d;
      }
      eindex.emplace(key, static_cast<int>(G.edges.size()));
      G.edges.push_back(eo);
    }
  return G;
}

inline std::string toDot(const QuotientGraph& G) {
  std::string s = "graph quotient {\n  label=\"Gamma_1(t^" + std::to_string(G.n) + ") q=" + std::to_string(G.q) +
                  " depth=" + std::to_string(G.depth) + "\";\n";
  for (std::size_t k = 0; k < G.vertices.size(); ++k) {
    const auto& v = G.vertices[k];
    s += "  v" + std::to_string(k) + " [label=\"v" + std::to_string(v.j) + " (" + v.c.to_string() + "," +
         v.d.to_string() + ") |Stab|=" + std::to_string(v.stab_order) + "\"];\n";
  }
  for (const auto& e : G.edges) {
    s += "  v" + std::to_string(e.origin) + " -- v" + std::to_string(e.terminus) + " [label=\"e" + std::to_string(e.i);
    if (e.stable) s += " [" + e.label_c.to_string() + "," + e.label_d.to_string() + "]\", color=red, penwidth=2";
    else s += " |Stab|=" + std::to_string(e.stab_order) + "\"";
    s += "];\n";
  }
  return s + "}\n";
}

inline EdgeClass classifyEdge(const EdgeClassifier& cls, const OrientedEdge& e) { return cls.classify(e); }

}  // namespace drinfeld

#endif  // DRINFELD_QUOTIENT_HPP
