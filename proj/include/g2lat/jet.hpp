#pragma once

// Truncated Laurent series: the value is known modulo t^precision.
//
// Precision is tracked pessimistically: every operation returns the largest
// absolute precision that the inputs justify, never more.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "g2lat/errors.hpp"
#include "g2lat/scalar.hpp"

namespace g2lat {

template <CoefficientField K>
class LaurentJet {
 public:
  using Scalar = RationalScalar<K>;

  // The zero jet known modulo t^precision.
  explicit LaurentJet(int precision = 0) : start_(precision), prec_(precision) {}

  // coefficient of t^(start + i) is coeffs[i]
  LaurentJet(int start, std::vector<K> coeffs, int precision) : start_(start), c_(std::move(coeffs)), prec_(precision) {
    normalize();
  }

  static LaurentJet from_scalar(const Scalar& x, int precision) {
    if (x.is_zero() || x.valuation() >= precision) return LaurentJet(precision);
    int v = x.valuation();
    return LaurentJet(v, x.unit_series(static_cast<std::size_t>(precision - v)), precision);
  }

  int precision() const { return prec_; }
  // Valuation of the known part; equals precision() when the jet is zero to
  // the known precision.
  int valuation() const { return c_.empty() ? prec_ : start_; }
  bool is_zero() const { return c_.empty(); }
  // Number of significant coefficients.
  int relative_precision() const { return prec_ - valuation(); }

  K coefficient(int k) const {
    if (k < start_ || k >= start_ + static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<std::size_t>(k - start_)];
  }
  K leading_coefficient() const { return c_.empty() ? K(0) : c_.front(); }

  // The known terms as an exact Laurent polynomial.
  Scalar truncation() const {
    Scalar r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) r += Scalar::monomial(start_ + static_cast<int>(i), c_[i]);
    return r;
  }

  LaurentJet with_precision(int p) const { return LaurentJet(start_, c_, std::min(p, prec_)); }

  friend LaurentJet operator+(const LaurentJet& a, const LaurentJet& b) {
    int p = std::min(a.prec_, b.prec_);
    int s = std::min(a.valuation(), b.valuation());
    if (s >= p) return LaurentJet(p);
    std::vector<K> v(static_cast<std::size_t>(p - s), K(0));
    for (int k = s; k < p; ++k) v[static_cast<std::size_t>(k - s)] = a.coefficient(k) + b.coefficient(k);
    return LaurentJet(s, std::move(v), p);
  }
  friend LaurentJet operator-(const LaurentJet& a) {
    LaurentJet r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentJet operator-(const LaurentJet& a, const LaurentJet& b) { return a + (-b); }

  friend LaurentJet operator*(const LaurentJet& a, const LaurentJet& b) {
    int va = a.valuation(), vb = b.valuation();
    int p = std::min(va + b.prec_, vb + a.prec_);
    if (a.is_zero() || b.is_zero() || va + vb >= p) return LaurentJet(p);
    std::size_t n = static_cast<std::size_t>(p - va - vb);
    std::vector<K> v(n, K(0));
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentJet(va + vb, std::move(v), p);
  }

  LaurentJet inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of a jet that vanishes to its precision");
    int v = start_;
    std::size_t n = c_.size();
    std::vector<K> r(n, K(0));
    K inv0 = K(1) / c_[0];
    for (std::size_t i = 0; i < n; ++i) {
      K acc = i == 0 ? K(1) : K(0);
      for (std::size_t j = 1; j <= i; ++j) acc -= c_[j] * r[i - j];
      r[i] = acc * inv0;
    }
    return LaurentJet(-v, std::move(r), -v + static_cast<int>(n));
  }
  friend LaurentJet operator/(const LaurentJet& a, const LaurentJet& b) { return a * b.inverse(); }

  // Square root with leading coefficient `residue_root` (or the field's own
  // choice when none is given).
  LaurentJet sqrt(std::optional<K> residue_root = std::nullopt) const {
    if (is_zero()) throw PreconditionViolated("square root of a jet that vanishes to its precision");
    if (start_ % 2 != 0) throw PreconditionViolated("square root of odd valuation");
    K r0;
    if (residue_root) {
      r0 = *residue_root;
      if (!(r0 * r0 == c_[0])) throw PreconditionViolated("supplied residue root does not square to the leading term");
    } else {
      auto s = c_[0].sqrt();
      if (!s) throw NeedsEtaleExtension("leading coefficient " + c_[0].to_string() + " is not a square", 2);
      r0 = *s;
    }
    std::size_t n = c_.size();
    std::vector<K> r(n, K(0));
    r[0] = r0;
    K inv2r0 = K(1) / (r0 + r0);
    for (std::size_t k = 1; k < n; ++k) {
      K acc = c_[k];
      for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
      r[k] = acc * inv2r0;
    }
    int h = start_ / 2;
    return LaurentJet(h, std::move(r), h + static_cast<int>(n));
  }

  // Equality of the parts both jets know.
  friend bool agree(const LaurentJet& a, const LaurentJet& b) { return (a - b).is_zero(); }

  std::string to_string() const {
    std::string s = truncation().to_string();
    return s + " + O(t^" + std::to_string(prec_) + ")";
  }

 private:
  void normalize() {
    int known = prec_ - start_;
    if (known < static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(std::max(known, 0)));
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      start_ = prec_;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<int>(lead);
  }

  int start_;
  std::vector<K> c_;
  int prec_;
};

template <CoefficientField K>
LaurentJet<K> jet_sqrt(const LaurentJet<K>& x) {
  return x.sqrt();
}
template <CoefficientField K>
LaurentJet<K> jet_sqrt(const LaurentJet<K>& x, const K& residue_root) {
  return x.sqrt(residue_root);
}

}  // namespace g2lat
