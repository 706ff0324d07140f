#ifndef DRINFELD_RATFUNC_HPP
#define DRINFELD_RATFUNC_HPP

// The rational function field K = F_q(t), kept in lowest terms with
// monic denominator.

#include <ostream>
#include <stdexcept>
#include <string>

#include "poly.hpp"

namespace drinfeld {

class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FiniteField& f) : num_(f), den_(Poly::one(f)) {}
  RatFunc(Poly num) : num_(std::move(num)) {  // NOLINT: implicit A -> K
    if (num_.field()) den_ = Poly::one(*num_.field());
  }
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc constant(const FiniteField& f, FqCode a) { return RatFunc(Poly::constant(f, a)); }
  static RatFunc zero(const FiniteField& f) { return RatFunc(f); }
  static RatFunc one(const FiniteField& f) { return constant(f, 1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FiniteField* field() const { return num_.field() ? num_.field() : den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.degree() <= 0; }

  /// t-adic valuation; kPlusInfinity for zero.
  int vt() const { return is_zero() ? kPlusInfinity : num_.vt() - den_.vt(); }
  /// deg num - deg den (the negative of the valuation at infinity).
  int degree() const { return is_zero() ? kMinusInfinity : num_.degree() - den_.degree(); }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in K");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b.field() ? b : a;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return a.field() ? a : zero_of(b);
    if (b.is_zero()) return b.field() ? b : zero_of(a);
    if (a.is_polynomial() && b.is_polynomial()) {
      RatFunc r;
      r.num_ = a.num_ * b.num_;
      r.den_ = a.den_;
      return r;
    }
    // Cross-cancel before multiplying.
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    r.make_den_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static RatFunc zero_of(const RatFunc& x) { return x.field() ? RatFunc(*x.field()) : RatFunc(); }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one(*den_.field());
      if (!num_.field()) num_ = Poly(*den_.field());
      return;
    }
    if (den_.degree() > 0) {
      Poly g = Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    make_den_monic();
  }
  void make_den_monic() {
    const FqCode l = den_.lead();
    if (l != 1) {
      const FqCode inv = den_.field()->inv(l);
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

using RatFuncK = RatFunc;

inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

inline RatFunc zero_like(const RatFunc& x) { return x.field() ? RatFunc(*x.field()) : RatFunc(); }
inline RatFunc one_like(const RatFunc& x) {
  if (!x.field()) throw std::logic_error("one_like on field-less zero");
  return RatFunc::one(*x.field());
}

}  // namespace drinfeld

#endif  // DRINFELD_RATFUNC_HPP
