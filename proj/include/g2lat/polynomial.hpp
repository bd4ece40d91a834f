#pragma once

// Dense univariate polynomials over a coefficient field, indeterminate t.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "g2lat/base_field.hpp"

namespace g2lat {

template <CoefficientField K>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(K c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, K c = K(1)) {
    if (c.is_zero()) return {};
    std::vector<K> v(degree + 1, K(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<K>& coefficients() const { return c_; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }
  K constant_term() const { return coeff(0); }

  // Exponent of the largest power of t dividing this polynomial.
  int t_adic_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  Polynomial shift_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Polynomial(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }
  Polynomial shift_up(std::size_t k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<K> v(k, K(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<K> v(big);
    for (std::size_t i = 0; i < small.size(); ++i) v[i] += small[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<K> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(-x);
    Polynomial r;
    r.c_ = std::move(v);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const K& s, const Polynomial& a) {
    if (s.is_zero()) return {};
    std::vector<K> v;
    v.reserve(a.c_.size());
    for (const auto& x : a.c_) v.push_back(s * x);
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    const K inv_lead = K(1) / b.c_.back();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i].is_zero()) continue;
      K f = r[i] * inv_lead;
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  // Exact division; the caller guarantees b | a.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.c_.size() == 1) return (K(1) / b.c_[0]) * a;
    return divrem(a, b).first;
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return (K(1) / leading()) * *this;
  }

  static Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.c_.size() < b.c_.size()) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.c_.size() == 1) return Polynomial(K(1));
      Polynomial r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

}  // namespace g2lat
