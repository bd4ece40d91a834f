#pragma once

// Totally isotropic F-subspaces of C_s and the ideals x * C_s, C_s * x of an
// isotropic x.

#include <string>
#include <utility>
#include <vector>

#include "g2lat/octonion.hpp"

namespace g2lat {

template <CoefficientField K>
class IsotropicSubspace {
 public:
  using O = Octonion<K>;
  using S = RationalScalar<K>;

  IsotropicSubspace() = default;

  // Span of the given vectors; throws unless the span is totally isotropic.
  explicit IsotropicSubspace(const std::vector<O>& spanning) {
    basis_ = echelon(spanning);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i; j < basis_.size(); ++j) {
        S b = i == j ? norm(basis_[i]) : bilinear(basis_[i], basis_[j]);
        if (!b.is_zero()) throw PreconditionViolated("span is not totally isotropic");
      }
    if (basis_.size() > 4) throw Inconsistency("totally isotropic subspace of dimension > 4");
  }

  std::size_t rank() const { return basis_.size(); }
  const std::vector<O>& basis() const { return basis_; }
  friend bool operator==(const IsotropicSubspace& a, const IsotropicSubspace& b) { return a.basis_ == b.basis_; }

  bool contains(const O& x) const {
    auto v = basis_;
    v.push_back(x);
    return echelon(v).size() == basis_.size();
  }

  // Row-reduced basis: as rows, the vectors form a reduced echelon matrix
  // (leading coefficient 1 in increasing coordinate positions).
  static std::vector<O> echelon(const std::vector<O>& vs) {
    Matrix<S> m(vs.size(), 8);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < 8; ++j) m(i, j) = vs[i][j];
    auto piv = rref(m);
    std::vector<O> out;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      O x;
      for (std::size_t j = 0; j < 8; ++j) x[j] = m(r, j);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::vector<O> basis_;
};

template <CoefficientField K>
void require_isotropic_nonzero(const Octonion<K>& x) {
  if (x.is_zero()) throw PreconditionViolated("ideal of the zero vector");
  if (!norm(x).is_zero()) throw PreconditionViolated("ideal of a non-isotropic vector");
}

// x * C_s
template <CoefficientField K>
IsotropicSubspace<K> left_ideal(const Octonion<K>& x) {
  require_isotropic_nonzero(x);
  std::vector<Octonion<K>> gens;
  for (std::size_t i = 0; i < 8; ++i) gens.push_back(para_mul(x, Octonion<K>::basis(i)));
  return IsotropicSubspace<K>(gens);
}

// C_s * x
template <CoefficientField K>
IsotropicSubspace<K> right_ideal(const Octonion<K>& x) {
  require_isotropic_nonzero(x);
  std::vector<Octonion<K>> gens;
  for (std::size_t i = 0; i < 8; ++i) gens.push_back(para_mul(Octonion<K>::basis(i), x));
  return IsotropicSubspace<K>(gens);
}

// Intersection of F-spans of two lists of vectors, returned as a spanning
// list in echelon form.
template <CoefficientField K>
std::vector<Octonion<K>> intersect_spans(const std::vector<Octonion<K>>& a, const std::vector<Octonion<K>>& b) {
  using S = RationalScalar<K>;
  if (a.empty() || b.empty()) return {};
  Matrix<S> m(8, a.size() + b.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < 8; ++i) m(i, j) = a[j][i];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < 8; ++i) m(i, a.size() + j) = -b[j][i];
  std::vector<Octonion<K>> out;
  for (const auto& c : nullspace(m)) {
    Octonion<K> x;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!c[j].is_zero()) x += c[j] * a[j];
    out.push_back(std::move(x));
  }
  return IsotropicSubspace<K>::echelon(out);
}

// (L(U), R(U)) with L(U) the intersection of C_s * x and R(U) the
// intersection of x * C_s over a basis of U.
template <CoefficientField K>
std::pair<IsotropicSubspace<K>, IsotropicSubspace<K>> triality_intersections(const IsotropicSubspace<K>& U) {
  if (U.rank() == 0) throw PreconditionViolated("triality intersections of the zero subspace");
  std::vector<Octonion<K>> l = right_ideal(U.basis()[0]).basis();
  std::vector<Octonion<K>> r = left_ideal(U.basis()[0]).basis();
  for (std::size_t i = 1; i < U.rank(); ++i) {
    l = intersect_spans(l, right_ideal(U.basis()[i]).basis());
    r = intersect_spans(r, left_ideal(U.basis()[i]).basis());
  }
  return {IsotropicSubspace<K>(l), IsotropicSubspace<K>(r)};
}

}  // namespace g2lat
