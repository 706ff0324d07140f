#ifndef DRINFELD_RESIDUE_HPP
#define DRINFELD_RESIDUE_HPP

// The quotient rings A_n = A/(t^n).

#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace drinfeld {

class Residue {
 public:
  Residue() = default;
  Residue(Poly value, int n) : n_(n), v_(value.mod_tn(n)) {
    if (n < 0) throw std::invalid_argument("negative level exponent");
  }

  int n() const { return n_; }
  const Poly& value() const { return v_; }
  const FiniteField* field() const { return v_.field(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_unit() const { return n_ == 0 || v_.coeff(0) != 0; }

  friend Residue operator+(const Residue& a, const Residue& b) { return {a.v_ + b.v_, check(a, b)}; }
  friend Residue operator-(const Residue& a, const Residue& b) { return {a.v_ - b.v_, check(a, b)}; }
  friend Residue operator*(const Residue& a, const Residue& b) {
    const int n = check(a, b);
    return {(a.v_ * b.v_).mod_tn(n), n};
  }
  Residue operator-() const { return {-v_, n_}; }
  friend bool operator==(const Residue& a, const Residue& b) { return a.n_ == b.n_ && a.v_ == b.v_; }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }
  friend bool operator<(const Residue& a, const Residue& b) { return a.v_ < b.v_; }

  /// Inverse of a unit; throws otherwise.
  Residue inverse() const { return {inverse_mod_tn(v_, n_), n_}; }

  /// min(v_t(lift), n); equals the level for the zero class.
  int vt_capped() const { return std::min(v_.vt(), n_); }

  static Poly inverse_mod_tn(const Poly& a, int n) {
    if (a.coeff(0) == 0) throw std::domain_error("not a unit modulo t^n: " + a.to_string());
    const FiniteField& f = *a.field();
    // Power-series inversion, one coefficient at a time.
    std::vector<FqCode> inv(n, 0);
    const FqCode a0inv = f.inv(a.coeff(0));
    for (int i = 0; i < n; ++i) {
      FqCode s = (i == 0) ? 1 : 0;
      for (int j = 1; j <= i; ++j) s = f.sub(s, f.mul(a.coeff(j), inv[i - j]));
      inv[i] = f.mul(s, a0inv);
    }
    return Poly(f, std::move(inv));
  }

  /// All classes of A_n, ordered by index of the representative.
  static std::vector<Residue> all(const FiniteField& f, int n) {
    std::vector<Residue> out;
    for (auto& p : Poly::all_below_degree(f, n)) out.emplace_back(p, n);
    return out;
  }

 private:
  static int check(const Residue& a, const Residue& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mixed residue levels");
    return a.n_;
  }

  int n_ = 0;
  Poly v_;
};

/// min(v_t(c), n-1) for a class c of A_{n-1}; independent of the lift.
inline int barVt(const Poly& c, int n) {
  if (n < 1) throw std::invalid_argument("barVt needs n >= 1");
  const int v = c.mod_tn(n - 1).vt();
  return std::min(v, n - 1);
}

/// Theta_n = 1 + tA_n, as representatives of degree < n.
inline std::vector<Poly> thetaGroup(const FiniteField& f, int n) {
  std::vector<Poly> out;
  for (auto& a : Poly::all_below_degree(f, n - 1)) out.push_back(Poly::one(f) + a.shift_up(1));
  return out;
}

}  // namespace drinfeld

#endif  // DRINFELD_RESIDUE_HPP
