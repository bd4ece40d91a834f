#pragma once

// Exact elements of F = k(t), viewed inside k((t)) through the t-adic
// valuation.
//
// A nonzero element is stored as t^v * n(t) / d(t) with n(0) != 0, d(0) = 1
// and gcd(n, d) = 1.  This form is unique, so equality is representational.
// Every element of the valuation ring O = k[t]_(t) has v >= 0.

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2lat/base_field.hpp"
#include "g2lat/errors.hpp"
#include "g2lat/polynomial.hpp"

namespace g2lat {

inline constexpr int kInfiniteValuation = INT_MAX;

template <CoefficientField K>
class RationalScalar {
 public:
  using Coeff = K;
  using Poly = Polynomial<K>;

  RationalScalar() = default;
  RationalScalar(K c) : num_(std::move(c)) {}
  RationalScalar(long long c) : num_(K(c)) {}

  // t^exponent * c
  static RationalScalar monomial(int exponent, K c = K(1)) {
    RationalScalar r;
    if (c.is_zero()) return r;
    r.val_ = exponent;
    r.num_ = Poly(std::move(c));
    return r;
  }
  static RationalScalar t() { return monomial(1); }

  // t^v * num / den for arbitrary polynomials; den must be nonzero.
  static RationalScalar from_parts(int v, Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    RationalScalar r;
    r.normalize(v, std::move(num), std::move(den));
    return r;
  }
  static RationalScalar from_polynomial(Poly p) { return from_parts(0, std::move(p), Poly(K(1))); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return val_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent_polynomial() const { return den_.is_one(); }

  // t-adic valuation; kInfiniteValuation for zero.
  int valuation() const { return is_zero() ? kInfiniteValuation : val_; }
  bool is_integral() const { return valuation() >= 0; }
  bool is_unit() const { return !is_zero() && val_ == 0; }

  // Leading coefficient of the t-adic expansion (the angular component).
  K leading_coefficient() const { return is_zero() ? K(0) : num_.constant_term(); }
  // Image in the residue field; requires an integral element.
  K residue() const {
    if (!is_integral()) throw PreconditionViolated("residue of a non-integral scalar");
    return val_ == 0 ? num_.constant_term() : K(0);
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  int t_exponent() const { return val_; }

  // The unit part u = n/d, so that x = t^v * u.
  RationalScalar unit_part() const {
    if (is_zero()) return {};
    RationalScalar r = *this;
    r.val_ = 0;
    return r;
  }

  // First `count` coefficients of the power series n/d.
  std::vector<K> unit_series(std::size_t count) const {
    std::vector<K> s(count, K(0));
    if (is_zero()) return s;
    const auto& n = num_.coefficients();
    const auto& d = den_.coefficients();
    for (std::size_t i = 0; i < count; ++i) {
      K acc = i < n.size() ? n[i] : K(0);
      for (std::size_t j = 1; j <= i && j < d.size(); ++j) acc -= d[j] * s[i - j];
      s[i] = acc;
    }
    return s;
  }

  // Coefficient of t^k in the Laurent expansion.
  K expansion_coefficient(int k) const {
    if (is_zero() || k < val_) return K(0);
    return unit_series(static_cast<std::size_t>(k - val_ + 1)).back();
  }

  // Sum of the terms t^k (k < bound) of the Laurent expansion, as a Laurent
  // polynomial.  x - x.truncate_below(b) has valuation >= b.
  RationalScalar truncate_below(int bound) const {
    if (is_zero() || val_ >= bound) return {};
    if (den_.is_one() && val_ + num_.degree() < bound) return *this;
    auto s = unit_series(static_cast<std::size_t>(bound - val_));
    RationalScalar r;
    r.normalize(val_, Poly(std::move(s)), Poly(K(1)));
    return r;
  }

  friend RationalScalar operator+(const RationalScalar& a, const RationalScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int m = std::min(a.val_, b.val_);
    Poly an = a.num_.shift_up(static_cast<std::size_t>(a.val_ - m));
    Poly bn = b.num_.shift_up(static_cast<std::size_t>(b.val_ - m));
    RationalScalar r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.normalize_laurent(m, an + bn);
      return r;
    }
    if (a.den_ == b.den_) {
      r.normalize(m, an + bn, a.den_);
      return r;
    }
    Poly g = Poly::gcd(a.den_, b.den_);
    Poly ad = Poly::exact_div(a.den_, g);
    Poly bd = Poly::exact_div(b.den_, g);
    r.normalize(m, an * bd + bn * ad, a.den_ * bd);
    return r;
  }
  friend RationalScalar operator-(const RationalScalar& a) {
    RationalScalar r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalScalar operator-(const RationalScalar& a, const RationalScalar& b) { return a + (-b); }
  friend RationalScalar operator*(const RationalScalar& a, const RationalScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalScalar r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.val_ = a.val_ + b.val_;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly n = Poly::exact_div(a.num_, g1) * Poly::exact_div(b.num_, g2);
    Poly d = Poly::exact_div(a.den_, g2) * Poly::exact_div(b.den_, g1);
    r.rescale(a.val_ + b.val_, std::move(n), std::move(d));
    return r;
  }
  RationalScalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    RationalScalar r;
    r.rescale(-val_, den_, num_);
    return r;
  }
  friend RationalScalar operator/(const RationalScalar& a, const RationalScalar& b) { return a * b.inverse(); }
  RationalScalar& operator+=(const RationalScalar& b) { return *this = *this + b; }
  RationalScalar& operator-=(const RationalScalar& b) { return *this = *this - b; }
  RationalScalar& operator*=(const RationalScalar& b) { return *this = *this * b; }
  RationalScalar& operator/=(const RationalScalar& b) { return *this = *this / b; }

  friend bool operator==(const RationalScalar& a, const RationalScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.val_ == b.val_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalScalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalScalar base = *this, r(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  // Canonical text in the scalar grammar.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string n = laurent_to_string(val_, num_);
    if (den_.is_one()) return n;
    bool multi = num_.coefficients().size() > 1 && count_terms(num_) > 1;
    std::string out = multi ? "(" + n + ")" : n;
    return out + "/(" + laurent_to_string(0, den_) + ")";
  }

 private:
  static std::size_t count_terms(const Poly& p) {
    std::size_t c = 0;
    for (const auto& x : p.coefficients()) c += x.is_zero() ? 0 : 1;
    return c;
  }

  static std::string term_to_string(const K& c, int e) {
    std::string cs = c.to_string();
    if (e == 0) return cs;
    std::string mono = e == 1 ? "t" : "t^" + std::to_string(e);
    if (c == K(1)) return mono;
    if (c == K(-1)) return "-" + mono;
    return cs + "*" + mono;
  }

  static std::string laurent_to_string(int v, const Poly& p) {
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i].is_zero()) continue;
      std::string term = term_to_string(c[i], v + static_cast<int>(i));
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  void normalize_laurent(int v, Poly num) {
    if (num.is_zero()) {
      *this = RationalScalar{};
      return;
    }
    int k = num.t_adic_order();
    val_ = v + k;
    num_ = k ? num.shift_down(static_cast<std::size_t>(k)) : std::move(num);
    den_ = Poly(K(1));
  }

  void normalize(int v, Poly num, Poly den) {
    if (num.is_zero()) {
      *this = RationalScalar{};
      return;
    }
    int k = num.t_adic_order();
    int m = den.t_adic_order();
    if (k) num = num.shift_down(static_cast<std::size_t>(k));
    if (m) den = den.shift_down(static_cast<std::size_t>(m));
    if (!den.is_one() && den.degree() > 0) {
      Poly g = Poly::gcd(num, den);
      if (!g.is_one()) {
        num = Poly::exact_div(num, g);
        den = Poly::exact_div(den, g);
      }
    }
    rescale(v + k - m, std::move(num), std::move(den));
  }

  // Inputs already coprime with nonzero constant terms.
  void rescale(int v, Poly num, Poly den) {
    K c = den.constant_term();
    if (!(c == K(1))) {
      K ic = K(1) / c;
      num = ic * num;
      den = ic * den;
    }
    val_ = v;
    num_ = std::move(num);
    den_ = std::move(den);
  }

  int val_ = 0;
  Poly num_;
  Poly den_{K(1)};
};

// ---------------------------------------------------------------------------
// Scalar grammar: integers, t, + - * / ^ with integer exponents (negative
// exponents on t only), parentheses; whitespace is insignificant.

namespace detail {

template <CoefficientField K>
class ScalarParser {
 public:
  using S = RationalScalar<K>;
  explicit ScalarParser(std::string_view text) : s_(text) {}

  S parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
    S v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  S expr() {
    S v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  S term() {
    S v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else {
        skip();
        std::size_t at = pos_;
        if (!accept('/')) return v;
        S d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      }
    }
  }

  S unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  S power() {
    skip();
    bool base_is_t = pos_ < s_.size() && s_[pos_] == 't';
    S base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t at = pos_;
    bool neg = accept('-');
    skip();
    std::string digits = read_digits();
    if (digits.empty()) throw ParseError("expected integer exponent", pos_);
    if (digits.size() > 6) throw ParseError("exponent too large", at);
    long long e = std::stoll(digits);
    if (neg && !base_is_t) throw ParseError("negative exponent allowed on t only", at);
    return base.pow(neg ? -e : e);
  }

  S primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      S v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == 't') {
      ++pos_;
      return S::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return S(K::from_decimal(read_digits()));
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField K>
RationalScalar<K> parse_scalar(std::string_view text) {
  return detail::ScalarParser<K>(text).parse();
}

}  // namespace g2lat
