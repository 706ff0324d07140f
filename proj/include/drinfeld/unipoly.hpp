#ifndef DRINFELD_UNIPOLY_HPP
#define DRINFELD_UNIPOLY_HPP

// Univariate polynomials in X over a field T (T = RatFunc or FqElem).

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drinfeld {

template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static UniPoly constant(const T& a) { return UniPoly(std::vector<T>{a}); }
  static UniPoly x_power(int k, const T& one) {
    std::vector<T> c(static_cast<std::size_t>(k) + 1, zero_like(one));
    c[k] = one;
    return UniPoly(std::move(c));
  }
  /// X - a.
  static UniPoly linear(const T& a, const T& one) { return UniPoly(std::vector<T>{-a, one}); }

  int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    return c_.empty() ? T() : zero_like(c_[0]);
  }
  const T& lead() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.get(i) + b.get(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.get(i) - b.get(i);
    return UniPoly(std::move(c));
  }
  UniPoly operator-() const {
    std::vector<T> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const T& s, const UniPoly& a) {
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<T> r = a.c_;
    const int db = b.degree();
    std::vector<T> qt(static_cast<std::size_t>(a.degree() - db) + 1, zero_like(b.lead()));
    for (int i = a.degree(); i >= db; --i) {
      if (r[i].is_zero()) continue;
      const T factor = r[i] / b.lead();
      qt[i - db] = factor;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b.c_[j];
    }
    return {UniPoly(std::move(qt)), UniPoly(std::move(r))};
  }

  T eval(const T& x) const {
    if (c_.empty()) return zero_like(x);
    T r = c_.back();
    for (int i = degree() - 1; i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")";
      if (i > 0) s += "*X^" + std::to_string(i);
    }
    return s;
  }

 private:
  T get(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace drinfeld

#endif  // DRINFELD_UNIPOLY_HPP
