#ifndef DRINFELD_SAMPLING_HPP
#define DRINFELD_SAMPLING_HPP

// Seeded random group elements and edges for property checks.

#include <random>

#include "congruence.hpp"
#include "tree.hpp"

namespace drinfeld {

class Sampler {
 public:
  Sampler(const FiniteField& f, std::uint64_t seed) : f_(&f), rng_(seed) {}

  Poly poly(int max_degree) {
    std::uniform_int_distribution<long long> pick(0, ipow(f_->q(), max_degree + 1) - 1);
    return Poly::from_index(*f_, pick(rng_));
  }

  /// Word of `steps` factors u(b) J in SL_2(A).
  Mat2A sl2(int steps, int max_degree = 2) {
    Mat2A g = identityA(*f_);
    for (int s = 0; s < steps; ++s) g = g * upperUnipotent(poly(max_degree), *f_) * matJ(*f_);
    return g;
  }

  /// Product of upper and lower unipotents in Gamma_1(t^n).
  Mat2A gamma1(int n, int steps, int max_degree = 1) {
    Mat2A g = identityA(*f_);
    for (int s = 0; s < steps; ++s) {
      const Poly b = poly(max_degree), c = poly(max_degree).shift_up(n);
      g = g * upperUnipotent(b, *f_) * Mat2A{Poly::one(*f_), Poly(*f_), c, Poly::one(*f_)};
    }
    return g;
  }

  /// Random element (a b; 0 a^{-1}) of Stab(e_i), deg b <= i.
  Mat2A apartmentStabilizer(int i) {
    const FqCode a = static_cast<FqCode>(std::uniform_int_distribution<int>(1, f_->q() - 1)(rng_));
    return {Poly::constant(*f_, a), poly(i), Poly(*f_), Poly::constant(*f_, f_->inv(a))};
  }

  OrientedEdge edge(int max_index, int steps) {
    std::uniform_int_distribution<int> pick(0, max_index);
    const OrientedEdge e = edgeOf(sl2(steps), pick(rng_));
    return std::bernoulli_distribution(0.5)(rng_) ? e : e.opposite();
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  const FiniteField* f_;
  std::mt19937_64 rng_;
};

}  // namespace drinfeld

#endif  // DRINFELD_SAMPLING_HPP
