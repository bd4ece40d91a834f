#pragma once

// The split octonions C_s over F = k(t) in Zorn vector-matrix form.
//
// Coordinates are taken in the fixed basis (e1, e2, u1, u2, u3, v1, v2, v3).
// A Zorn matrix (a w; phi b) corresponds to a*e1 + b*e2 + sum w_i u_i +
// sum phi_i v_i.  The para-octonion product is x * y = conj(x) . conj(y).

#include <array>
#include <cstddef>
#include <string>

#include "g2lat/matrix.hpp"
#include "g2lat/scalar.hpp"

namespace g2lat {

enum BasisIndex : std::size_t { E1 = 0, E2, U1, U2, U3, V1, V2, V3 };

inline const std::array<const char*, 8>& basis_names() {
  static const std::array<const char*, 8> names{"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
  return names;
}

// Index of the basis vector paired with i under the bilinear form.
constexpr std::size_t pairing_partner(std::size_t i) {
  constexpr std::size_t p[8] = {1, 0, 5, 6, 7, 2, 3, 4};
  return p[i];
}

template <CoefficientField K>
class Octonion {
 public:
  using Scalar = RationalScalar<K>;

  Octonion() { c_.fill(Scalar()); }
  explicit Octonion(std::array<Scalar, 8> c) : c_(std::move(c)) {}
  explicit Octonion(const Vec<Scalar>& v) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] = v.at(i);
  }

  static Octonion basis(std::size_t i, Scalar coeff = Scalar(1)) {
    Octonion x;
    x.c_[i] = std::move(coeff);
    return x;
  }
  static Octonion para_unit() { return basis(E1) + basis(E2); }

  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Scalar, 8>& coords() const { return c_; }
  Vec<Scalar> to_vec() const { return Vec<Scalar>(c_.begin(), c_.end()); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -a.c_[i];
    return r;
  }
  friend Octonion operator*(const Scalar& s, const Octonion& a) {
    Octonion r;
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < 8; ++i)
      if (!a.c_[i].is_zero()) r.c_[i] = s * a.c_[i];
    return r;
  }
  Octonion& operator+=(const Octonion& b) { return *this = *this + b; }
  Octonion& operator-=(const Octonion& b) { return *this = *this - b; }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

  // Minimal valuation of the coordinates.
  int valuation() const {
    int v = kInfiniteValuation;
    for (const auto& x : c_) v = std::min(v, x.valuation());
    return v;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 8; ++i) {
      if (c_[i].is_zero()) continue;
      std::string s = c_[i].to_string();
      bool compound = s.find_first_of("/ ") != std::string::npos;
      std::string term;
      if (s == "1") {
        term = basis_names()[i];
      } else if (s == "-1") {
        term = std::string("-") + basis_names()[i];
      } else {
        term = (compound ? "(" + s + ")" : s) + "*" + basis_names()[i];
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Scalar, 8> c_;
};

// Zorn view of an element.
template <CoefficientField K>
struct ZornMatrix {
  using Scalar = RationalScalar<K>;
  Scalar a;
  std::array<Scalar, 3> w;
  std::array<Scalar, 3> phi;
  Scalar b;

  static ZornMatrix from(const Octonion<K>& x) {
    return {x[E1], {x[U1], x[U2], x[U3]}, {x[V1], x[V2], x[V3]}, x[E2]};
  }
  Octonion<K> to_octonion() const {
    return Octonion<K>(std::array<Scalar, 8>{a, b, w[0], w[1], w[2], phi[0], phi[1], phi[2]});
  }
};

namespace detail {

template <class S>
std::array<S, 3> cross(const std::array<S, 3>& x, const std::array<S, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}
template <class S>
S dot(const std::array<S, 3>& x, const std::array<S, 3>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

}  // namespace detail

// The Zorn product x . y.
template <CoefficientField K>
Octonion<K> oct_mul(const Octonion<K>& x, const Octonion<K>& y) {
  auto X = ZornMatrix<K>::from(x);
  auto Y = ZornMatrix<K>::from(y);
  ZornMatrix<K> Z;
  Z.a = X.a * Y.a - detail::dot(Y.phi, X.w);
  Z.b = X.b * Y.b - detail::dot(X.phi, Y.w);
  auto fx = detail::cross(X.phi, Y.phi);
  auto wx = detail::cross(X.w, Y.w);
  for (std::size_t i = 0; i < 3; ++i) {
    Z.w[i] = X.a * Y.w[i] + Y.b * X.w[i] + fx[i];
    Z.phi[i] = Y.a * X.phi[i] + X.b * Y.phi[i] + wx[i];
  }
  return Z.to_octonion();
}

template <CoefficientField K>
RationalScalar<K> bilinear(const Octonion<K>& x, const Octonion<K>& y) {
  RationalScalar<K> s;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& a = x[i];
    const auto& b = y[pairing_partner(i)];
    if (!a.is_zero() && !b.is_zero()) s += a * b;
  }
  return s;
}

template <CoefficientField K>
RationalScalar<K> norm(const Octonion<K>& x) {
  return x[E1] * x[E2] + x[U1] * x[V1] + x[U2] * x[V2] + x[U3] * x[V3];
}

template <CoefficientField K>
Octonion<K> conj(const Octonion<K>& x) {
  auto s = bilinear(x, Octonion<K>::para_unit());
  return s * Octonion<K>::para_unit() - x;
}

// Structure constants of a product on the standard basis: basis_i * basis_j
// = sign * basis_index (sign 0 for a zero product).  Every product of two
// standard basis vectors is 0 or a signed basis vector.
struct ProductTable {
  struct Entry {
    int sign = 0;
    std::size_t index = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::array<std::array<Entry, 8>, 8> entry{};
  friend bool operator==(const ProductTable&, const ProductTable&) = default;
};

namespace detail {

// Derives the para-product table from the Zorn formula.  Computed over F3(t)
// because the constants are 0 or +-1 in every characteristic.
inline ProductTable derive_para_table() {
  using K = Zp<3>;
  ProductTable t;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      auto p = oct_mul(conj(Octonion<K>::basis(i)), conj(Octonion<K>::basis(j)));
      for (std::size_t k = 0; k < 8; ++k) {
        if (p[k].is_zero()) continue;
        t.entry[i][j] = {p[k].is_one() ? 1 : -1, k};
      }
    }
  return t;
}

}  // namespace detail

inline const ProductTable& para_table() {
  static const ProductTable t = detail::derive_para_table();
  return t;
}

// x * y through a structure-constant table (the para-product by default).
template <CoefficientField K>
Octonion<K> para_mul(const Octonion<K>& x, const Octonion<K>& y, const ProductTable& table = para_table()) {
  Octonion<K> r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const auto& en = table.entry[i][j];
      if (en.sign == 0 || y[j].is_zero()) continue;
      auto c = x[i] * y[j];
      if (en.sign > 0) {
        r[en.index] += c;
      } else {
        r[en.index] -= c;
      }
    }
  }
  return r;
}

// para_mul evaluated directly from the definition, bypassing the table.
template <CoefficientField K>
Octonion<K> para_mul_direct(const Octonion<K>& x, const Octonion<K>& y) {
  return oct_mul(conj(x), conj(y));
}

// The Gram matrix of the bilinear form on the standard basis.
template <CoefficientField K>
Matrix<RationalScalar<K>> standard_gram() {
  Matrix<RationalScalar<K>> g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, pairing_partner(i)) = RationalScalar<K>(1);
  return g;
}

}  // namespace g2lat
