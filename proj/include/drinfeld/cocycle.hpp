#ifndef DRINFELD_COCYCLE_HPP
#define DRINFELD_COCYCLE_HPP

// Gamma_1(t^n)-equivariant harmonic cocycles with values in V_k.
//
// Unknowns are the values x_O on the representatives rep_O e_0 of the
// depth-0 edge orbits. Harmonicity at rep v_i (i >= 1) gives
//   c(rep e_i) = sum_lambda c(rep u(lambda t^i) e_{i-1}),
// so every deeper orbit value is a fixed linear map E_O applied to x. The
// remaining conditions are stabilizer invariance at depth 0, harmonicity at
// vertices of type v_0, and vanishing at depth D + 1.

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quotient.hpp"
#include "vk.hpp"

namespace drinfeld {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DepthInstability : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int defaultDepth(int n, int k) { return std::max(2 * n + 3, n + k + 2); }

/// Expected dimension (k-1) q^{2(n-1)}.
inline long long expectedCocycleDim(int q, int n, int k) { return (k - 1) * ipow(q, 2 * (n - 1)); }

class CocycleSpace {
 public:
  CocycleSpace(const GroupContext& ctx, int k, int depth)
      : ctx_(&ctx), eng_(ctx), cls_(eng_), vk_(ctx.field(), k), depth_(depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    const FiniteField& f = ctx.field();
    rows_ = eng_.unimodularRows();
    for (const auto& [c, d] : rows_) {
      const RowCanon& rc = eng_.edgeCanon(c, d, 0);
      const long long key = eng_.rowIndex(rc.c, rc.d);
      if (block_.count(key)) continue;
      block_.emplace(key, static_cast<int>(depth0_.size()));
      depth0_.push_back({rc.c, rc.d});
    }
    const int w = vk_.dim();
    unknowns_ = w * static_cast<int>(depth0_.size());
    table_.resize(depth + 2);
    for (std::size_t b = 0; b < depth0_.size(); ++b) {
      MatK E(w, unknowns_, RatFunc(f));
      for (int l = 0; l < w; ++l) E(l, static_cast<int>(b) * w + l) = RatFunc::one(f);
      table_[0].emplace(eng_.rowIndex(depth0_[b].first, depth0_[b].second), std::move(E));
    }
    for (int i = 1; i <= depth + 1; ++i)
      for (const auto& [c, d] : rows_) {
        const RowCanon& rc = eng_.edgeCanon(c, d, i);
        const long long key = eng_.rowIndex(rc.c, rc.d);
        if (table_[i].count(key)) continue;
        const Mat2A& rep = eng_.orbitRep(rc.c, rc.d);
        MatK E(w, unknowns_, RatFunc(f));
        for (int lam = 0; lam < f.q(); ++lam)
          E = E + tableFunctional(rep * upperUnipotent(Poly::monomial(f, static_cast<FqCode>(lam), i), f), i - 1);
        table_[i].emplace(key, std::move(E));
      }
    solve();
  }

  CocycleSpace(const CocycleSpace&) = delete;
  CocycleSpace& operator=(const CocycleSpace&) = delete;

  const GroupContext& context() const { return *ctx_; }
  const OrbitEngine& engine() const { return eng_; }
  const EdgeClassifier& classifier() const { return cls_; }
  const VkRep& vk() const { return vk_; }
  const FiniteField& field() const { return ctx_->field(); }
  int k() const { return vk_.k(); }
  int depth() const { return depth_; }
  int unknowns() const { return unknowns_; }
  int dim() const { return basis_.cols(); }
  /// Columns are basis cocycles in depth-0 coordinates.
  const MatK& basis() const { return basis_; }
  const std::vector<std::pair<Poly, Poly>>& depth0Orbits() const { return depth0_; }
  /// Labels (c, d) of the basis after canonicalizeWeight2.
  const std::vector<std::pair<Poly, Poly>>& labels() const { return labels_; }
  int constraintRank() const { return constraint_rank_; }

  RatFunc zero() const { return RatFunc(field()); }
  RatFunc one() const { return RatFunc::one(field()); }

  /// F with c(sign * g e_i) = F x, where x are depth-0 coordinates.
  MatK functionalReduced(const Mat2A& g, int i, int sign) const {
    if (i > depth_) return MatK(vk_.dim(), unknowns_, zero());
    MatK F = tableFunctional(g, i);
    return sign > 0 ? F : -F;
  }
  MatK edgeFunctional(const OrientedEdge& e) const {
    const EdgeReduction red = reduceToApartment(e, field());
    return functionalReduced(red.g, red.i, red.sign);
  }
  /// Values at e of all basis cocycles, as a (k-1) x dim matrix.
  MatK evaluateBasis(const OrientedEdge& e) const { return edgeFunctional(e) * basis_; }
  std::vector<RatFunc> evaluate(const OrientedEdge& e, const std::vector<RatFunc>& x) const { return edgeFunctional(e) * x; }

  /// Independent recursion through sources: stable edges read the depth-0
  /// table, unstable ones sum the q edges that feed their origin. Ignores
  /// the depth cutoff, so it is exponential in the depth of e.
  MatK sourceSum(const OrientedEdge& e) const {
    const EdgeReduction red = reduceToApartment(e, field());
    MatK F = sourceSumReduced(red.g, red.i);
    return red.sign > 0 ? F : -F;
  }

  /// Sum over the q+1 edges with origin g v_0 (harmonicity at a type-0 vertex).
  MatK vertexZeroStar(const Mat2A& g) const {
    const FiniteField& f = field();
    MatK S = tableFunctional(g, 0);
    for (int lam = 0; lam < f.q(); ++lam)
      S = S + tableFunctional(g * upperUnipotent(Poly::constant(f, static_cast<FqCode>(lam)), f) * matJ(f), 0);
    return S;
  }

  /// Matrix in depth-0 coordinates of c -> sum_xi xi^{-1} o c(xi e).
  MatK operatorInCoordinates(const std::vector<Mat2A>& xis) const {
    const int w = vk_.dim();
    const int blocks = static_cast<int>(depth0_.size());
    std::vector<MatK> parts(blocks);
    auto work = [&](int b) {
      const Mat2A& rep = eng_.orbitRep(depth0_[b].first, depth0_[b].second);
      MatK acc(w, unknowns_, zero());
      for (const auto& xi : xis) acc = acc + vk_.actInverse(xi) * edgeFunctional(edgeOf(xi * rep, 0));
      parts[b] = std::move(acc);
    };
    const int threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < threads; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (int b = t; b < blocks; b += threads) work(b);
      }));
    for (auto& j : jobs) j.get();
    MatK out(unknowns_, unknowns_, zero());
    for (int b = 0; b < blocks; ++b)
      for (int l = 0; l < w; ++l)
        for (int j = 0; j < unknowns_; ++j) out(b * w + l, j) = parts[b](l, j);
    return out;
  }

  /// Matrix of an operator (given in coordinates) with respect to basis().
  MatK inBasis(const MatK& op) const {
    const MatK Y = op * basis_;
    MatK Bp(dim(), dim(), zero()), Yp(dim(), dim(), zero());
    for (int r = 0; r < dim(); ++r)
      for (int j = 0; j < dim(); ++j) {
        Bp(r, j) = basis_(pivot_rows_[r], j);
        Yp(r, j) = Y(pivot_rows_[r], j);
      }
    const auto inv = Bp.inverse(one());
    if (!inv) throw std::logic_error("basis pivot block is singular");
    MatK C = *inv * Yp;
    if (basis_ * C != Y) throw std::runtime_error("operator image leaves the cocycle space (depth too small?)");
    return C;
  }

  /// Replaces the weight-2 basis by the delta basis [c, d] on h_(c,d) J e_0.
  void canonicalizeWeight2() {
    if (k() != 2) throw std::logic_error("delta basis exists only in weight 2");
    const FiniteField& f = field();
    const auto& res = ctx_->residues();
    MatK Ev(dim(), dim(), zero());
    std::vector<std::pair<Poly, Poly>> labels;
    int r = 0;
    for (const auto& c : res)
      for (const auto& d : res) {
        if (r >= dim()) throw DimensionMismatch("more stable representatives than basis vectors");
        const MatK v = evaluateBasis(edgeOf(ctx_->h(c, d) * matJ(f), 0));
        for (int j = 0; j < dim(); ++j) Ev(r, j) = v(0, j);
        labels.emplace_back(c, d);
        ++r;
      }
    if (r != dim()) throw DimensionMismatch("stable representative count differs from dimension");
    const auto inv = Ev.inverse(one());
    if (!inv) throw std::runtime_error("evaluation matrix on stable representatives is singular");
    basis_ = basis_ * *inv;
    labels_ = std::move(labels);
    computePivots();
  }

  /// Index of label (c, d) in labels().
  int labelIndex(const Poly& c, const Poly& d) const {
    for (std::size_t j = 0; j < labels_.size(); ++j)
      if (labels_[j].first == c && labels_[j].second == d) return static_cast<int>(j);
    throw std::out_of_range("unknown label");
  }

  /// True if the column spans of the two bases agree.
  bool sameSpace(const CocycleSpace& o) const {
    if (o.unknowns_ != unknowns_ || o.dim() != dim()) return false;
    RowEchelon<RatFunc> ech(unknowns_);
    for (int j = 0; j < dim(); ++j) ech.add(basis_.column(j));
    for (int j = 0; j < o.dim(); ++j)
      if (ech.add(o.basis_.column(j))) return false;
    return true;
  }

 private:
  MatK tableFunctional(const Mat2A& g, int i) const {
    const Transport tr = eng_.transportEdge(g, i);
    const MatK& E = table_[i].at(eng_.rowIndex(tr.c, tr.d));
    return vk_.k() == 2 ? E : vk_.act(tr.gamma) * E;
  }

  MatK sourceSumReduced(const Mat2A& g, int i) const {
    const FiniteField& f = field();
    const Transport tr = eng_.transportEdge(g, i);
    if (OrbitEngine::isGamma1tStable(tr.c, i)) return tableFunctional(g, 0);
    MatK S(vk_.dim(), unknowns_, zero());
    if (i >= 1) {
      for (int lam = 0; lam < f.q(); ++lam)
        S = S + sourceSumReduced(g * upperUnipotent(Poly::monomial(f, static_cast<FqCode>(lam), i), f), i - 1);
      return S;
    }
    for (int lam = 0; lam < f.q(); ++lam)
      S = S - sourceSumReduced(g * upperUnipotent(Poly::constant(f, static_cast<FqCode>(lam)), f) * matJ(f), 0);
    return S;
  }

  void addRows(RowEchelon<RatFunc>& ech, const MatK& M) {
    for (int r = 0; r < M.rows(); ++r) ech.add(M.row(r));
  }

  void solve() {
    RowEchelon<RatFunc> ech(unknowns_);
    const MatK I = vk_.identity();
    for (const auto& [c, d] : depth0_) {
      const MatK E = tableFunctional(eng_.orbitRep(c, d), 0);
      if (vk_.k() > 2)
        for (const auto& gamma : eng_.edgeStabilizer0(c, d)) addRows(ech, (vk_.act(gamma) - I) * E);
      addRows(ech, vertexZeroStar(eng_.orbitRep(c, d)));
    }
    for (const auto& [key, E] : table_[depth_ + 1]) addRows(ech, E);
    constraint_rank_ = ech.rank();
    basis_ = ech.kernel(one());
    computePivots();
  }

  void computePivots() {
    pivot_rows_.clear();
    RowEchelon<RatFunc> ech(dim());
    for (int r = 0; r < basis_.rows() && static_cast<int>(pivot_rows_.size()) < dim(); ++r)
      if (ech.add(basis_.row(r))) pivot_rows_.push_back(r);
  }

  const GroupContext* ctx_;
  OrbitEngine eng_;
  EdgeClassifier cls_;
  VkRep vk_;
  int depth_;
  int unknowns_ = 0;
  int constraint_rank_ = 0;
  std::vector<std::pair<Poly, Poly>> rows_;
  std::vector<std::pair<Poly, Poly>> depth0_;
  std::map<long long, int> block_;
  std::vector<std::map<long long, MatK>> table_;
  MatK basis_;
  std::vector<int> pivot_rows_;
  std::vector<std::pair<Poly, Poly>> labels_;
};

/// Solves at depth D and D + 1; throws unless both have the expected
/// dimension and the same solution space.
inline std::unique_ptr<CocycleSpace> solveCocycleSpace(const GroupContext& ctx, int k, int D = -1) {
  if (D < 0) D = defaultDepth(ctx.n(), k);
  auto space = std::make_unique<CocycleSpace>(ctx, k, D);
  const long long want = expectedCocycleDim(ctx.q(), ctx.n(), k);
  if (space->dim() != want)
    throw DimensionMismatch("cocycle space has dimension " + std::to_string(space->dim()) + ", expected " +
                            std::to_string(want) + " at depth " + std::to_string(D));
  const CocycleSpace next(ctx, k, D + 1);
  if (!space->sameSpace(next))
    throw DepthInstability("solution space changes between depth " + std::to_string(D) + " and " + std::to_string(D + 1));
  return space;
}

/// Weight-2 space in the delta basis, columns labelled by (c, d).
inline std::unique_ptr<CocycleSpace> canonicalWeight2Basis(const GroupContext& ctx, int D = -1) {
  auto space = solveCocycleSpace(ctx, 2, D);
  space->canonicalizeWeight2();
  return space;
}

}  // namespace drinfeld

#endif  // DRINFELD_COCYCLE_HPP
