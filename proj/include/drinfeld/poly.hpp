#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

// Dense polynomials over F_q in the variable t (the ring A = F_q[t]).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fq.hpp"

namespace drinfeld {

/// Degree of the zero polynomial, and valuation of zero.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();
inline constexpr int kPlusInfinity = std::numeric_limits<int>::max();

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

class Poly {
 public:
  Poly() = default;
  explicit Poly(const FiniteField& f) : f_(&f) {}
  Poly(const FiniteField& f, std::vector<FqCode> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const FiniteField& f) { return Poly(f); }
  static Poly constant(const FiniteField& f, FqCode a) { return Poly(f, {a}); }
  static Poly one(const FiniteField& f) { return constant(f, 1); }
  static Poly t(const FiniteField& f) { return Poly(f, {0, 1}); }
  static Poly monomial(const FiniteField& f, FqCode a, int k) {
    std::vector<FqCode> c(static_cast<std::size_t>(k) + 1, 0);
    c[k] = a;
    return Poly(f, std::move(c));
  }
  /// Polynomial from an integer code: base-q digits are the coefficients.
  static Poly from_index(const FiniteField& f, long long index) {
    std::vector<FqCode> c;
    while (index > 0) {
      c.push_back(static_cast<FqCode>(index % f.q()));
      index /= f.q();
    }
    return Poly(f, std::move(c));
  }
  /// Inverse of from_index.
  long long index() const {
    long long r = 0;
    for (int i = degree(); i >= 0; --i) r = r * q() + c_[i];
    return r;
  }

  const FiniteField* field() const { return f_; }
  int q() const { return f_ ? f_->q() : 0; }
  const std::vector<FqCode>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  FqCode coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  FqCode lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lead() == 1; }
  bool is_constant() const { return degree() <= 0; }

  void set_coeff(int i, FqCode a) {
    if (i >= static_cast<int>(c_.size())) {
      if (a == 0) return;
      c_.resize(i + 1, 0);
    }
    c_[i] = a;
    trim();
  }

  /// t-adic valuation; kPlusInfinity for zero.
  int vt() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return kPlusInfinity;
  }

  FqCode eval(FqCode x) const {
    FqCode r = 0;
    for (int i = degree(); i >= 0; --i) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
  }

  /// Class modulo t^n (degree < n).
  Poly mod_tn(int n) const {
    Poly r = *this;
    if (static_cast<int>(r.c_.size()) > n) r.c_.resize(std::max(n, 0));
    r.trim();
    return r;
  }
  /// Quotient by t^n, discarding lower terms.
  Poly shift_down(int n) const {
    if (n <= 0) return shift_up(-n);
    if (static_cast<int>(c_.size()) <= n) return Poly(*f_);
    return Poly(*f_, std::vector<FqCode>(c_.begin() + n, c_.end()));
  }
  Poly shift_up(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<FqCode> c(n, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(*f_, std::move(c));
  }

  Poly scaled(FqCode a) const {
    if (a == 0 || is_zero()) return Poly(*field_or_die());
    std::vector<FqCode> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], a);
    return Poly(*f_, std::move(c));
  }
  Poly monic() const { return is_zero() ? *this : scaled(f_->inv(lead())); }

  /// g(t) -> g(t^q); equals g^q since F_q is fixed by Frobenius.
  Poly frobenius(int times = 1) const {
    if (is_zero()) return *this;
    long long step = 1;
    for (int i = 0; i < times; ++i) step *= q();
    std::vector<FqCode> c(static_cast<std::size_t>(degree()) * step + 1, 0);
    for (int i = 0; i <= degree(); ++i) c[static_cast<std::size_t>(i) * step] = c_[i];
    return Poly(*f_, std::move(c));
  }

  Poly pow(long long k) const {
    Poly r = one(*field_or_die());
    Poly b = *this;
    while (k > 0) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const FiniteField* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    std::vector<FqCode> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(*f, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const FiniteField* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    std::vector<FqCode> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(*f, std::move(c));
  }
  Poly operator-() const {
    if (!f_) return {};
    std::vector<FqCode> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->neg(c_[i]);
    return Poly(*f_, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const FiniteField* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    if (a.is_zero() || b.is_zero()) return Poly(*f);
    std::vector<FqCode> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const FqCode ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == 0) continue;
        c[i + j] = f->add(c[i + j], f->mul(ai, b.c_[j]));
      }
    }
    return Poly(*f, std::move(c));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FiniteField& f = *b.f_;
    if (a.degree() < b.degree()) return {Poly(f), a.f_ ? a : Poly(f)};
    std::vector<FqCode> r = a.c_;
    const int db = b.degree();
    std::vector<FqCode> qt(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const FqCode inv_lead = f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
      if (r[i] == 0) continue;
      const FqCode factor = f.mul(r[i], inv_lead);
      qt[i - db] = factor;
      for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, b.c_[j]));
    }
    return {Poly(f, std::move(qt)), Poly(f, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Monic gcd (zero iff both are zero).
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, u, v) with u a + v b = g = gcd(a, b) monic.
  static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    const FiniteField& f = a.f_ ? *a.f_ : *b.f_;
    Poly r0 = a, r1 = b;
    Poly s0 = one(f), s1 = zero(f);
    Poly t0 = zero(f), t1 = one(f);
    while (!r1.is_zero()) {
      auto [qt, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s = s0 - qt * s1;
      s0 = std::move(s1);
      s1 = std::move(s);
      Poly tt = t0 - qt * t1;
      t0 = std::move(t1);
      t1 = std::move(tt);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FqCode inv = f.inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  /// Total order: by degree, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (FqCode c : c_) h = (h ^ c) * 1099511628211ull;
    return h;
  }

  /// Human-readable form such as "t^2+2t+1"; coefficients print as codes.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const FqCode a = c_[i];
      if (a == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a;
        os << 't';
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

  /// Parses "t^2+t+1", "2t-1", "1+t". Integer coefficients n are read as
  /// the code n mod q; a leading '-' on a term negates it.
  static Poly parse(const FiniteField& f, const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Poly result(f);
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool negative = false;
      if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
      }
      long long coeff = 1;
      bool have_coeff = false;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          coeff = coeff * 10 + (s[pos] - '0');
          ++pos;
        }
        have_coeff = true;
      }
      if (pos < s.size() && s[pos] == '*') ++pos;
      int exponent = 0;
      if (pos < s.size() && (s[pos] == 't' || s[pos] == 'T')) {
        ++pos;
        exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("bad exponent in '" + text + "'");
          exponent = 0;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            exponent = exponent * 10 + (s[pos] - '0');
            ++pos;
          }
        }
      } else if (!have_coeff) {
        throw std::invalid_argument("cannot parse polynomial '" + text + "'");
      }
      if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("unexpected character in '" + text + "'");
      FqCode a = static_cast<FqCode>(((coeff % f.q()) + f.q()) % f.q());
      if (negative) a = f.neg(a);
      result += monomial(f, a, exponent);
    }
    return result;
  }

  /// All polynomials of degree < n, ordered by index.
  static std::vector<Poly> all_below_degree(const FiniteField& f, int n) {
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= f.q();
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) out.push_back(from_index(f, i));
    return out;
  }

  /// Irreducibility by trial division over monic polynomials of degree <= deg/2.
  bool is_irreducible() const {
    const int d = degree();
    if (d <= 0) return false;
    for (int k = 1; 2 * k <= d; ++k) {
      long long count = 1;
      for (int i = 0; i < k; ++i) count *= q();
      for (long long idx = 0; idx < count; ++idx) {
        Poly g = from_index(*f_, idx) + monomial(*f_, 1, k);
        if ((*this % g).is_zero()) return false;
      }
    }
    return true;
  }

 private:
  const FiniteField* field_or_die() const {
    if (!f_) throw std::logic_error("field-less polynomial");
    return f_;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FiniteField* f_ = nullptr;
  std::vector<FqCode> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

inline Poly zero_like(const Poly& x) { return x.field() ? Poly(*x.field()) : Poly(); }
inline Poly one_like(const Poly& x) {
  if (!x.field()) throw std::logic_error("one_like on field-less zero");
  return Poly::one(*x.field());
}

using PolyA = Poly;

struct PolyHash {
  std::size_t operator()(const Poly& p) const { return p.hash(); }
};

}  // namespace drinfeld

#endif  // DRINFELD_POLY_HPP
