#pragma once

// Finitely generated O-submodules of C_s (x) F, O = k[t]_(t).
//
// Canonical form (column Hermite form over O): processing coordinate rows
// top to bottom, the basis vector with pivot row p has
//   * zeros in all rows above p,
//   * the entry t^a in row p,
//   * in the pivot row p' of every later basis vector (exponent a'), a
//     Laurent polynomial with only exponents < a'.
// Two modules are equal exactly when their canonical bases are equal.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lat/matrix.hpp"
#include "g2lat/octonion.hpp"

namespace g2lat {

template <CoefficientField K>
class Lattice {
 public:
  using S = RationalScalar<K>;
  using O = Octonion<K>;

  Lattice() = default;

  static Lattice from_generators(std::vector<O> gens) {
    Lattice L;
    std::vector<O> rest;
    for (auto& g : gens)
      if (!g.is_zero()) rest.push_back(std::move(g));
    for (std::size_t row = 0; row < 8 && !rest.empty(); ++row) {
      std::size_t best = rest.size();
      int bv = kInfiniteValuation;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        int v = rest[j][row].valuation();
        if (v < bv) {
          bv = v;
          best = j;
        }
      }
      if (best == rest.size()) continue;
      O p = std::move(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
      S unit = p[row].unit_part();
      if (!unit.is_one()) p = unit.inverse() * p;
      const S pivot_inv = S::monomial(-bv);
      std::vector<O> next;
      for (auto& r : rest) {
        if (!r[row].is_zero()) r -= (r[row] * pivot_inv) * p;
        if (!r.is_zero()) next.push_back(std::move(r));
      }
      rest = std::move(next);
      L.basis_.push_back(std::move(p));
      L.pivot_rows_.push_back(row);
      L.exponents_.push_back(bv);
    }
    L.reduce();
    return L;
  }

  static Lattice from_matrix(const Matrix<S>& m) {
    std::vector<O> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) gens.emplace_back(m.column(j));
    return from_generators(std::move(gens));
  }

  // span(t^{a_i} basis_i)
  static Lattice monomial(const std::array<int, 8>& a) {
    std::vector<O> gens;
    for (std::size_t i = 0; i < 8; ++i) gens.push_back(O::basis(i, S::monomial(a[i])));
    return from_generators(std::move(gens));
  }
  static Lattice standard() { return monomial({0, 0, 0, 0, 0, 0, 0, 0}); }

  std::size_t rank() const { return basis_.size(); }
  bool is_full_rank() const { return basis_.size() == 8; }
  const std::vector<O>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }
  const std::vector<int>& pivot_exponents() const { return exponents_; }

  Matrix<S> matrix() const {
    Matrix<S> m(8, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (std::size_t i = 0; i < 8; ++i) m(i, j) = basis_[j][i];
    return m;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

  // Coordinates of x in the canonical basis if x lies in the F-span.
  std::optional<Vec<S>> coordinates(const O& x) const {
    O r = x;
    Vec<S> c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const S& entry = r[pivot_rows_[k]];
      if (entry.is_zero()) continue;
      c[k] = entry * S::monomial(-exponents_[k]);
      r -= c[k] * basis_[k];
    }
    if (!r.is_zero()) return std::nullopt;
    return c;
  }

  bool contains(const O& x) const {
    auto c = coordinates(x);
    if (!c) return false;
    for (const auto& s : *c)
      if (s.valuation() < 0) return false;
    return true;
  }
  bool contains(const Lattice& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  // Minimal valuation of the coordinates of x (negative means x not in L).
  std::optional<int> coordinate_valuation(const O& x) const {
    auto c = coordinates(x);
    if (!c) return std::nullopt;
    int v = kInfiniteValuation;
    for (const auto& s : *c) v = std::min(v, s.valuation());
    return v;
  }

  // Valuation of the determinant of a basis (full rank only).
  int det_valuation() const {
    require_full_rank("det_valuation");
    int s = 0;
    for (int a : exponents_) s += a;
    return s;
  }

  Lattice dual() const {
    require_full_rank("dual");
    Matrix<S> inv = inverse(matrix());
    std::vector<O> gens;
    for (std::size_t j = 0; j < 8; ++j) {
      O d;
      for (std::size_t i = 0; i < 8; ++i) d[pairing_partner(i)] = inv(j, i);
      gens.push_back(std::move(d));
    }
    return from_generators(std::move(gens));
  }

  Lattice scaled(const S& f) const {
    if (f.is_zero()) throw PreconditionViolated("scaling a lattice by zero");
    std::vector<O> gens;
    for (const auto& b : basis_) gens.push_back(f * b);
    return from_generators(std::move(gens));
  }

  friend Lattice sum(const Lattice& a, const Lattice& b) {
    std::vector<O> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return from_generators(std::move(gens));
  }

  friend Lattice intersect(const Lattice& a, const Lattice& b) { return sum(a.dual(), b.dual()).dual(); }

  // Gram matrix of the bilinear form on the canonical basis.
  Matrix<S> gram() const {
    Matrix<S> g(basis_.size(), basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i; j < basis_.size(); ++j) g(i, j) = g(j, i) = bilinear(basis_[i], basis_[j]);
    return g;
  }

  // Image under a linear map given by its matrix on standard coordinates.
  Lattice transformed(const Matrix<S>& g) const {
    std::vector<O> gens;
    for (const auto& b : basis_) gens.emplace_back(g * b.to_vec());
    return from_generators(std::move(gens));
  }

  void require_full_rank(const char* what) const {
    if (!is_full_rank()) throw PreconditionViolated(std::string(what) + " needs a full-rank lattice");
  }

 private:
  void reduce() {
    for (std::size_t k = 0; k < basis_.size(); ++k)
      for (std::size_t j = k + 1; j < basis_.size(); ++j) {
        const S& entry = basis_[k][pivot_rows_[j]];
        if (entry.is_zero()) continue;
        S rem = entry.truncate_below(exponents_[j]);
        if (rem == entry) continue;
        S c = (entry - rem) * S::monomial(-exponents_[j]);
        basis_[k] -= c * basis_[j];
      }
  }

  std::vector<O> basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<int> exponents_;
};

// O-length of big / small; small must be contained in big.
template <CoefficientField K>
int length(const Lattice<K>& small, const Lattice<K>& big) {
  if (!big.contains(small)) throw PreconditionViolated("length of a non-inclusion");
  return small.det_valuation() - big.det_valuation();
}

// O-span of all products x * y, x in a, y in b.
template <CoefficientField K>
Lattice<K> product_span(const Lattice<K>& a, const Lattice<K>& b) {
  std::vector<Octonion<K>> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(para_mul(x, y));
  return Lattice<K>::from_generators(std::move(gens));
}

template <CoefficientField K>
struct OrderWitness {
  enum class Kind { ParaUnitMissing, ProductOutside } kind;
  Octonion<K> x, y, product;  // unused for ParaUnitMissing
  int coordinate_valuation = 0;
};

template <CoefficientField K>
struct OrderCheck {
  bool is_order = false;
  std::optional<OrderWitness<K>> witness;
  explicit operator bool() const { return is_order; }
};

template <CoefficientField K>
OrderCheck<K> is_order(const Lattice<K>& L) {
  using O = Octonion<K>;
  OrderCheck<K> r;
  if (!L.contains(O::para_unit())) {
    r.witness = OrderWitness<K>{OrderWitness<K>::Kind::ParaUnitMissing, O::para_unit(), O{}, O{},
                                L.coordinate_valuation(O::para_unit()).value_or(kInfiniteValuation)};
    return r;
  }
  const auto& B = L.basis();
  for (const auto& x : B)
    for (const auto& y : B) {
      O p = para_mul(x, y);
      auto v = L.coordinate_valuation(p);
      if (!v || *v < 0) {
        r.witness = OrderWitness<K>{OrderWitness<K>::Kind::ProductOutside, x, y, p, v.value_or(kInfiniteValuation)};
        return r;
      }
    }
  r.is_order = true;
  return r;
}

template <CoefficientField K>
bool is_selfdual(const Lattice<K>& L) {
  return L.is_full_rank() && L == L.dual();
}

template <CoefficientField K>
bool is_maximal_order(const Lattice<K>& L) {
  if (!is_order(L)) throw PreconditionViolated("maximality is defined for orders only");
  return is_selfdual(L);
}

// Determinant of the Gram matrix modulo squares of units.
struct DiscriminantClass {
  int valuation = 0;
  bool even() const { return valuation % 2 == 0; }
  // Over F_p: whether the unit part is a square.  Over Q: the square-free
  // integer representing the unit part (as decimal text).
  bool unit_is_square = true;
  std::string unit_class;
};

template <CoefficientField K>
DiscriminantClass discriminant_class(const Lattice<K>& L) {
  L.require_full_rank("discriminant_class");
  auto d = determinant(L.gram());
  DiscriminantClass c;
  c.valuation = d.valuation();
  K u = d.leading_coefficient();
  if constexpr (K::is_finite) {
    c.unit_is_square = u.is_square();
    c.unit_class = c.unit_is_square ? "square" : "nonsquare";
  } else {
    auto sf = u.squarefree_part();
    c.unit_is_square = sf == 1;
    c.unit_class = sf.get_str();
  }
  return c;
}

// Smith normal form over O of a matrix with entries in F:
// left * A * right = diag(t^{exponents}) (padded with zeros).
template <CoefficientField K>
struct SmithForm {
  Matrix<RationalScalar<K>> left, right;
  std::vector<int> exponents;
};

template <CoefficientField K>
SmithForm<K> smith_form(Matrix<RationalScalar<K>> A) {
  using S = RationalScalar<K>;
  const std::size_t m = A.rows(), n = A.cols();
  Matrix<S> U = Matrix<S>::identity(m), V = Matrix<S>::identity(n);
  std::vector<int> ex;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    std::size_t bi = m, bj = n;
    int bv = kInfiniteValuation;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < n; ++j) {
        int v = A(i, j).valuation();
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == m) break;
    if (bi != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(A(bi, j), A(k, j));
    if (bi != k)
      for (std::size_t j = 0; j < m; ++j) std::swap(U(bi, j), U(k, j));
    if (bj != k)
      for (std::size_t i = 0; i < m; ++i) std::swap(A(i, bj), A(i, k));
    if (bj != k)
      for (std::size_t i = 0; i < n; ++i) std::swap(V(i, bj), V(i, k));
    S uinv = A(k, k).unit_part().inverse();
    for (std::size_t j = 0; j < n; ++j) A(k, j) *= uinv;
    for (std::size_t j = 0; j < m; ++j) U(k, j) *= uinv;
    const S pinv = S::monomial(-bv);
    for (std::size_t i = k + 1; i < m; ++i) {
      if (A(i, k).is_zero()) continue;
      S f = A(i, k) * pinv;
      for (std::size_t j = 0; j < n; ++j)
        if (!A(k, j).is_zero()) A(i, j) -= f * A(k, j);
      for (std::size_t j = 0; j < m; ++j)
        if (!U(k, j).is_zero()) U(i, j) -= f * U(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (A(k, j).is_zero()) continue;
      S f = A(k, j) * pinv;
      for (std::size_t i = 0; i < m; ++i)
        if (!A(i, k).is_zero()) A(i, j) -= f * A(i, k);
      for (std::size_t i = 0; i < n; ++i)
        if (!V(i, k).is_zero()) V(i, j) -= f * V(i, k);
    }
    ex.push_back(bv);
  }
  return {std::move(U), std::move(V), std::move(ex)};
}

}  // namespace g2lat
