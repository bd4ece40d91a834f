#pragma once

// Coefficient fields k for the rational function field k(t).
//
// Two families are provided: prime fields Zp<P> of odd characteristic and the
// rationals Qq (GMP backed).  Both are value types with exact arithmetic.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "g2lat/errors.hpp"

namespace g2lat {

template <std::uint32_t P>
class Zp {
  static_assert(P > 2, "characteristic 2 is not supported");

 public:
  static constexpr std::uint32_t modulus = P;
  static constexpr bool is_finite = true;

  constexpr Zp() = default;
  constexpr Zp(long long v) : v_(reduce(v)) {}

  static constexpr std::uint32_t characteristic() { return P; }
  static std::string name() { return "F" + std::to_string(P); }

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_one() const { return v_ == 1; }

  friend constexpr Zp operator+(Zp a, Zp b) {
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= P ? s - P : s);
  }
  friend constexpr Zp operator-(Zp a, Zp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
  friend constexpr Zp operator-(Zp a) { return raw(a.v_ == 0 ? 0 : P - a.v_); }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % P));
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  friend constexpr bool operator==(Zp a, Zp b) = default;

  constexpr Zp pow(std::uint64_t e) const {
    Zp base = *this, r = raw(1);
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  Zp inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in " + name());
    return pow(P - 2);
  }

  bool is_square() const { return v_ == 0 || pow((P - 1) / 2).is_one(); }

  // Tonelli-Shanks; returns the root r with r <= p - r.
  std::optional<Zp> sqrt() const {
    if (v_ == 0) return Zp{};
    if (!is_square()) return std::nullopt;
    std::uint32_t q = P - 1, s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    Zp z = raw(2);
    while (z.is_square()) z += raw(1);
    Zp c = z.pow(q), r = pow((q + 1) / 2), tt = pow(q);
    std::uint32_t m = s;
    while (!tt.is_one()) {
      std::uint32_t i = 0;
      Zp t2 = tt;
      while (!t2.is_one()) {
        t2 = t2 * t2;
        ++i;
      }
      Zp b = c;
      for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = b * b;
      m = i;
      c = b * b;
      tt = tt * c;
      r = r * b;
    }
    if (r.v_ > P - r.v_) r = -r;
    return r;
  }

  std::string to_string() const { return std::to_string(v_); }

  // Decimal integer literal, reduced mod P.
  static Zp from_decimal(std::string_view digits) {
    std::uint64_t acc = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal integer");
      acc = (acc * 10 + static_cast<std::uint64_t>(ch - '0')) % P;
    }
    return raw(static_cast<std::uint32_t>(acc));
  }

  template <class Rng>
  static Zp random(Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, P - 1);
    return raw(d(rng));
  }

  // Enumeration index, used by exhaustive residue searches.
  static constexpr std::uint64_t cardinality() { return P; }
  static constexpr Zp element(std::uint64_t i) { return raw(static_cast<std::uint32_t>(i % P)); }

 private:
  static constexpr Zp raw(std::uint32_t v) {
    Zp z;
    z.v_ = v;
    return z;
  }
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t v_ = 0;
};

// The rational numbers.
class Qq {
 public:
  static constexpr bool is_finite = false;

  Qq() = default;
  Qq(long long v) : v_(static_cast<long>(v)) {}
  explicit Qq(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static constexpr std::uint32_t characteristic() { return 0; }
  static std::string name() { return "Q"; }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  friend Qq operator+(const Qq& a, const Qq& b) { return Qq(mpq_class(a.v_ + b.v_)); }
  friend Qq operator-(const Qq& a, const Qq& b) { return Qq(mpq_class(a.v_ - b.v_)); }
  friend Qq operator-(const Qq& a) { return Qq(mpq_class(-a.v_)); }
  friend Qq operator*(const Qq& a, const Qq& b) { return Qq(mpq_class(a.v_ * b.v_)); }
  friend Qq operator/(const Qq& a, const Qq& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q");
    return Qq(mpq_class(a.v_ / b.v_));
  }
  Qq& operator+=(const Qq& b) { return *this = *this + b; }
  Qq& operator-=(const Qq& b) { return *this = *this - b; }
  Qq& operator*=(const Qq& b) { return *this = *this * b; }
  friend bool operator==(const Qq& a, const Qq& b) { return a.v_ == b.v_; }

  Qq inverse() const { return Qq(1) / *this; }

  std::optional<Qq> sqrt() const {
    if (sgn(v_) < 0) return std::nullopt;
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Qq(mpq_class(rn, rd));
  }

  // Square-free integer representative of the square class (sign kept).
  mpz_class squarefree_part() const {
    if (is_zero()) return 0;
    mpz_class n = v_.get_num() * v_.get_den();
    int sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    mpz_class r = 1;
    for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
      }
      if (e & 1) r *= p;
    }
    return sign * r * n;
  }

  std::string to_string() const { return v_.get_str(); }

  static Qq from_decimal(std::string_view digits) {
    for (char ch : digits)
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal integer");
    return Qq(mpq_class(mpz_class(std::string(digits))));
  }

  template <class Rng>
  static Qq random(Rng& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    return Qq(d(rng));
  }

 private:
  mpq_class v_{0};
};

template <class K>
concept CoefficientField = requires(const K& a, const K& b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.sqrt() } -> std::same_as<std::optional<K>>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { K::name() } -> std::convertible_to<std::string>;
  { K::characteristic() } -> std::convertible_to<std::uint32_t>;
  { K::is_finite } -> std::convertible_to<bool>;
};

using F3 = Zp<3>;
using F5 = Zp<5>;
using F7 = Zp<7>;
using F11 = Zp<11>;
using F13 = Zp<13>;

}  // namespace g2lat
