#ifndef DRINFELD_VK_HPP
#define DRINFELD_VK_HPP

// V_k: the dual of homogeneous forms of degree k-2 in (X, Y), with
// (g o w)(P) = w(P((X, Y) g^{-1})). Coordinates are w_j = w(X^j Y^{k-2-j}).

#include <stdexcept>
#include <vector>

#include "mat2.hpp"
#include "matrix.hpp"

namespace drinfeld {

using MatK = Matrix<RatFunc>;

class VkRep {
 public:
  VkRep(const FiniteField& f, int k) : f_(&f), k_(k) {
    if (k < 2) throw std::invalid_argument("weight must be >= 2");
    binom_.assign(k - 1, std::vector<FqCode>(k - 1, 0));
    for (int a = 0; a <= k - 2; ++a) {
      binom_[a][0] = 1;
      for (int b = 1; b <= a; ++b)
        binom_[a][b] = f.add(binom_[a - 1][b - 1], b <= a - 1 ? binom_[a - 1][b] : FqCode{0});
    }
  }

  int k() const { return k_; }
  int dim() const { return k_ - 1; }
  const FiniteField& field() const { return *f_; }

  /// M with P_j((X, Y) m) = sum_l M(l, j) P_l.
  MatK substitution(const Mat2K& m) const {
    const int w = k_ - 2;
    MatK M(dim(), dim(), RatFunc(*f_));
    const auto pa = powers(m.a), pb = powers(m.b), pc = powers(m.c), pd = powers(m.d);
    for (int j = 0; j <= w; ++j) {
      // (aX + cY)^j (bX + dY)^{w-j}
      for (int u = 0; u <= j; ++u) {
        const RatFunc left = RatFunc::constant(*f_, binom_[j][u]) * pa[u] * pc[j - u];
        if (left.is_zero()) continue;
        for (int v = 0; v <= w - j; ++v) {
          const RatFunc right = RatFunc::constant(*f_, binom_[w - j][v]) * pb[v] * pd[w - j - v];
          M(u + v, j) += left * right;
        }
      }
    }
    return M;
  }

  /// Matrix of w -> g o w.
  MatK act(const Mat2K& g) const { return substitution(inverseK(g)).transpose(); }
  MatK act(const Mat2A& g) const { return act(toK(g)); }
  /// Matrix of w -> g^{-1} o w.
  MatK actInverse(const Mat2K& g) const { return substitution(g).transpose(); }
  MatK actInverse(const Mat2A& g) const { return actInverse(toK(g)); }

  MatK identity() const { return MatK::identity(dim(), RatFunc::one(*f_)); }

 private:
  std::vector<RatFunc> powers(const RatFunc& x) const {
    std::vector<RatFunc> p(k_ - 1, RatFunc::one(*f_));
    for (int i = 1; i < k_ - 1; ++i) p[i] = p[i - 1] * x;
    return p;
  }

  const FiniteField* f_;
  int k_;
  std::vector<std::vector<FqCode>> binom_;
};

}  // namespace drinfeld

#endif  // DRINFELD_VK_HPP
