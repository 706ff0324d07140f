#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

// Finite fields F_q, q = p^e, in a fixed polynomial basis over F_p.
//
// An element is encoded as the integer sum_j a_j p^j, where a_j are the
// coefficients of x^j in the basis {1, x, ..., x^{e-1}} and x is a root of
// the stored modulus. The modulus is the lexicographically first monic
// irreducible polynomial of degree e over F_p, so encodings are stable
// between runs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace drinfeld {

using FqCode = std::uint16_t;

class FiniteField {
 public:
  static constexpr int kMaxOrder = 256;

  /// Returns the unique shared field of order q. Throws for non-prime-powers.
  static const FiniteField& get(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(q);
    if (it != registry.end()) return *it->second;
    auto field = std::unique_ptr<FiniteField>(new FiniteField(q));
    auto* raw = field.get();
    registry.emplace(q, std::move(field));
    return *raw;
  }

  static bool is_prime_power(int q, int* p_out = nullptr, int* e_out = nullptr) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = q;
    int e = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
  }

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  /// Coefficients over F_p of the defining polynomial, ascending, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  FqCode add(FqCode a, FqCode b) const { return add_[a * q_ + b]; }
  FqCode sub(FqCode a, FqCode b) const { return add_[a * q_ + neg_[b]]; }
  FqCode neg(FqCode a) const { return neg_[a]; }
  FqCode mul(FqCode a, FqCode b) const { return mul_[a * q_ + b]; }
  FqCode inv(FqCode a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return inv_[a];
  }
  FqCode div(FqCode a, FqCode b) const { return mul(a, inv(b)); }
  FqCode pow(FqCode a, long long k) const {
    FqCode r = 1;
    FqCode b = a;
    if (k < 0) {
      b = inv(a);
      k = -k;
    }
    while (k > 0) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  /// Image of an integer under Z -> F_p -> F_q.
  FqCode from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<FqCode>(r);
  }

  /// A generator of the multiplicative group (smallest code).
  FqCode primitive_element() const { return primitive_; }

 private:
  explicit FiniteField(int q) : q_(q) {
    if (!is_prime_power(q, &p_, &e_) || q > kMaxOrder) {
      throw std::invalid_argument("unsupported field order q=" + std::to_string(q));
    }
    modulus_ = find_modulus();
    build_tables();
  }

  // Digits of code c in base p.
  std::vector<int> digits(int c) const {
    std::vector<int> d(e_, 0);
    for (int j = 0; j < e_; ++j) {
      d[j] = c % p_;
      c /= p_;
    }
    return d;
  }
  int undigits(const std::vector<int>& d) const {
    int c = 0;
    for (int j = e_ - 1; j >= 0; --j) c = c * p_ + d[j];
    return c;
  }

  // Remainder of a (ascending, over F_p) modulo monic b.
  std::vector<int> mod_fp(std::vector<int> a, const std::vector<int>& b) const {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      int f = a[i];
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) {
        a[i - db + j] = ((a[i - db + j] - f * b[j]) % p_ + p_) % p_;
      }
    }
    a.resize(std::max(0, db));
    return a;
  }

  std::vector<int> find_modulus() const {
    if (e_ == 1) return {0, 1};
    // Enumerate monic degree-e polynomials; lower coefficients in base-p
    // order. A polynomial of degree <= 3 is irreducible iff it has no root;
    // in general test divisibility by every monic polynomial of degree <= e/2.
    long long count = 1;
    for (int j = 0; j < e_; ++j) count *= p_;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> f(e_ + 1, 0);
      long long c = code;
      for (int j = 0; j < e_; ++j) {
        f[j] = static_cast<int>(c % p_);
        c /= p_;
      }
      f[e_] = 1;
      if (f[0] == 0) continue;
      bool irreducible = true;
      for (int d = 1; d <= e_ / 2 && irreducible; ++d) {
        long long dc = 1;
        for (int j = 0; j < d; ++j) dc *= p_;
        for (long long g = 0; g < dc && irreducible; ++g) {
          std::vector<int> h(d + 1, 0);
          long long gg = g;
          for (int j = 0; j < d; ++j) {
            h[j] = static_cast<int>(gg % p_);
            gg /= p_;
          }
          h[d] = 1;
          auto r = mod_fp(f, h);
          bool zero = true;
          for (int v : r) zero = zero && v == 0;
          if (zero) irreducible = false;
        }
      }
      if (irreducible) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables() {
    const int n = q_ * q_;
    add_.assign(n, 0);
    mul_.assign(n, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<int> dn(e_);
      for (int j = 0; j < e_; ++j) dn[j] = (p_ - da[j]) % p_;
      neg_[a] = static_cast<FqCode>(undigits(dn));
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> s(e_);
        for (int j = 0; j < e_; ++j) s[j] = (da[j] + db[j]) % p_;
        add_[a * q_ + b] = static_cast<FqCode>(undigits(s));
        std::vector<int> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        auto r = mod_fp(prod, modulus_);
        r.resize(e_, 0);
        mul_[a * q_ + b] = static_cast<FqCode>(undigits(r));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FqCode>(b);
    for (int g = 1; g < q_; ++g) {
      int order = 1;
      FqCode x = static_cast<FqCode>(g);
      while (x != 1) {
        x = mul(x, static_cast<FqCode>(g));
        ++order;
      }
      if (order == q_ - 1) {
        primitive_ = static_cast<FqCode>(g);
        break;
      }
    }
  }

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::vector<FqCode> add_, mul_, neg_, inv_;
  FqCode primitive_ = 1;
};

/// Element of F_q carrying its field, for generic linear algebra over F_q.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FiniteField& f, FqCode v) : f_(&f), v_(v) {}

  const FiniteField* field() const { return f_; }
  FqCode code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string to_string() const { return std::to_string(v_); }

  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    const auto* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    return {*f, f->add(a.v_, b.v_)};
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    const auto* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    return {*f, f->sub(a.v_, b.v_)};
  }
  FqElem operator-() const { return f_ ? FqElem(*f_, f_->neg(v_)) : FqElem(); }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    const auto* f = a.f_ ? a.f_ : b.f_;
    if (!f) return {};
    return {*f, f->mul(a.v_, b.v_)};
  }
  friend FqElem operator/(const FqElem& a, const FqElem& b) {
    if (!b.f_) throw std::domain_error("division by zero in F_q");
    return {*b.f_, b.f_->div(a.v_, b.v_)};
  }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  friend bool operator==(const FqElem& a, const FqElem& b) { return a.v_ == b.v_; }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return a.v_ != b.v_; }

 private:
  const FiniteField* f_ = nullptr;
  FqCode v_ = 0;
};

inline FqElem zero_like(const FqElem& x) { return x.field() ? FqElem(*x.field(), 0) : FqElem(); }
inline FqElem one_like(const FqElem& x) {
  if (!x.field()) throw std::logic_error("one_like on field-less zero");
  return FqElem(*x.field(), 1);
}

}  // namespace drinfeld

#endif  // DRINFELD_FQ_HPP
