#pragma once

// Linear maps of C_s: automorphisms of (C_s, *), related triples and the S3
// action on them, and generators for random automorphisms.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "g2lat/lattice.hpp"
#include "g2lat/octonion.hpp"

namespace g2lat {

template <CoefficientField K>
class AlgebraMap {
 public:
  using S = RationalScalar<K>;
  using O = Octonion<K>;

  AlgebraMap() : m_(Matrix<S>::identity(8)) {}
  explicit AlgebraMap(Matrix<S> m) : m_(std::move(m)) {
    if (m_.rows() != 8 || m_.cols() != 8) throw PreconditionViolated("an algebra map needs an 8x8 matrix");
    if (!try_inverse(m_)) throw PreconditionViolated("algebra map is not invertible");
  }
  static AlgebraMap identity() { return AlgebraMap(); }
  // Column j is the image of the j-th basis vector.
  static AlgebraMap from_images(const std::vector<O>& images) {
    if (images.size() != 8) throw PreconditionViolated("an algebra map needs eight images");
    Matrix<S> m(8, 8);
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t i = 0; i < 8; ++i) m(i, j) = images[j][i];
    return AlgebraMap(std::move(m));
  }

  const Matrix<S>& matrix() const { return m_; }
  O operator()(const O& x) const { return O(m_ * x.to_vec()); }
  O image(std::size_t i) const { return O(m_.column(i)); }
  S det() const { return determinant(m_); }
  AlgebraMap inverse() const { return AlgebraMap(g2lat::inverse(m_)); }

  // (a * b)(x) = a(b(x))
  friend AlgebraMap operator*(const AlgebraMap& a, const AlgebraMap& b) { return AlgebraMap(a.m_ * b.m_); }
  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.m_ == b.m_; }

  bool is_exact_polynomial() const {
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (!m_(i, j).is_laurent_polynomial()) return false;
    return true;
  }

 private:
  Matrix<S> m_;
};

template <CoefficientField K>
Lattice<K> apply(const AlgebraMap<K>& g, const Lattice<K>& L) {
  return L.transformed(g.matrix());
}

template <CoefficientField K>
bool is_isometry(const AlgebraMap<K>& g) {
  const auto& m = g.matrix();
  return m.transpose() * standard_gram<K>() * m == standard_gram<K>();
}

template <CoefficientField K>
bool is_special(const AlgebraMap<K>& g) {
  return g.det().is_one();
}

template <CoefficientField K>
struct MapCounterexample {
  std::size_t i = 0, j = 0;  // basis pair (b_i, b_j)
  Octonion<K> expected, actual;
};

template <CoefficientField K>
struct MapCheck {
  bool ok = false;
  std::string failure;  // empty when ok
  std::optional<MapCounterexample<K>> counterexample;
  explicit operator bool() const { return ok; }
};

// g(x * y) = g(x) * g(y) on all basis pairs, and g preserves the form.
template <CoefficientField K>
MapCheck<K> is_automorphism(const AlgebraMap<K>& g) {
  using O = Octonion<K>;
  MapCheck<K> r;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      O lhs = g(para_mul(O::basis(i), O::basis(j)));
      O rhs = para_mul(g.image(i), g.image(j));
      if (lhs != rhs) {
        r.failure = std::string("product ") + basis_names()[i] + " * " + basis_names()[j] + " not preserved";
        r.counterexample = MapCounterexample<K>{i, j, lhs, rhs};
        return r;
      }
    }
  if (!is_isometry(g)) {
    r.failure = "preserves the product but not the form";
    return r;
  }
  r.ok = true;
  return r;
}

template <CoefficientField K>
struct RelatedTriple {
  AlgebraMap<K> g1, g2, g3;
  const AlgebraMap<K>& operator[](std::size_t i) const { return i % 3 == 0 ? g1 : i % 3 == 1 ? g2 : g3; }
  friend bool operator==(const RelatedTriple& a, const RelatedTriple& b) {
    return a.g1 == b.g1 && a.g2 == b.g2 && a.g3 == b.g3;
  }
};

template <CoefficientField K>
struct TripleCheck {
  bool ok = false;
  std::string failure;
  std::size_t component = 0;  // i of the failing relation g_i(x*y) = g_{i+1}(x) * g_{i+2}(y)
  std::optional<MapCounterexample<K>> counterexample;
  explicit operator bool() const { return ok; }
};

template <CoefficientField K>
TripleCheck<K> is_related_triple(const RelatedTriple<K>& T) {
  using O = Octonion<K>;
  TripleCheck<K> r;
  for (std::size_t k = 0; k < 3; ++k) {
    r.component = k + 1;
    if (!is_isometry(T[k])) {
      r.failure = "component is not an isometry";
      return r;
    }
    if (!is_special(T[k])) {
      r.failure = "component has determinant != 1";
      return r;
    }
  }
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        O lhs = T[k](para_mul(O::basis(i), O::basis(j)));
        O rhs = para_mul(T[k + 1].image(i), T[k + 2].image(j));
        if (lhs != rhs) {
          r.component = k + 1;
          r.failure = "triality relation fails";
          r.counterexample = MapCounterexample<K>{i, j, lhs, rhs};
          return r;
        }
      }
  r.ok = true;
  r.component = 0;
  return r;
}

template <CoefficientField K>
AlgebraMap<K> conjugation_map() {
  std::vector<Octonion<K>> images;
  for (std::size_t i = 0; i < 8; ++i) images.push_back(conj(Octonion<K>::basis(i)));
  return AlgebraMap<K>::from_images(images);
}

// x -> conj(g(conj(x)))
template <CoefficientField K>
AlgebraMap<K> hat(const AlgebraMap<K>& g) {
  auto c = conjugation_map<K>();
  return c * g * c;
}

template <CoefficientField K>
void require_related(const RelatedTriple<K>& T) {
  auto c = is_related_triple(T);
  if (!c) throw PreconditionViolated("not a related triple: " + c.failure);
}

template <CoefficientField K>
RelatedTriple<K> rho(const RelatedTriple<K>& T) {
  require_related(T);
  return {T.g2, T.g3, T.g1};
}

template <CoefficientField K>
RelatedTriple<K> theta(const RelatedTriple<K>& T) {
  require_related(T);
  return {hat(T.g1), hat(T.g3), hat(T.g2)};
}

// ---- generators ----

template <CoefficientField K>
AlgebraMap<K> diagonal_map(const std::array<int, 8>& exponents) {
  using S = RationalScalar<K>;
  Matrix<S> m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = S::monomial(exponents[i]);
  return AlgebraMap<K>(std::move(m));
}

template <CoefficientField K>
AlgebraMap<K> torus_cochar(int a, int b) {
  return diagonal_map<K>({0, 0, a, b, -a - b, -a, -b, a + b});
}

namespace detail {

template <CoefficientField K>
AlgebraMap<K> signed_permutation(const std::array<std::size_t, 8>& target, const std::array<int, 8>& sign) {
  using S = RationalScalar<K>;
  Matrix<S> m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) m(target[j], j) = S(sign[j]);
  return AlgebraMap<K>(std::move(m));
}

}  // namespace detail

// Permutation automorphisms: sigma acts on the indices {1,2,3} of the u's
// and v's simultaneously; optionally composed with e1<->e2, u_i<->v_i.  Signs
// are not assumed: the unsigned map and the one negating the u,v block are
// tried and the first that verifies is returned.
template <CoefficientField K>
AlgebraMap<K> permutation_automorphism(const std::array<std::size_t, 3>& sigma, bool swap_halves = false) {
  std::array<std::size_t, 8> target{};
  target[E1] = swap_halves ? E2 : E1;
  target[E2] = swap_halves ? E1 : E2;
  for (std::size_t i = 0; i < 3; ++i) {
    if (sigma[i] > 2) throw PreconditionViolated("permutation index out of range");
    target[U1 + i] = (swap_halves ? V1 : U1) + sigma[i];
    target[V1 + i] = (swap_halves ? U1 : V1) + sigma[i];
  }
  std::array<bool, 8> seen{};
  for (auto x : target) seen[x] = true;
  for (bool s : seen)
    if (!s) throw PreconditionViolated("not a permutation");
  for (int block_sign : {1, -1}) {
    std::array<int, 8> sign{1, 1, block_sign, block_sign, block_sign, block_sign, block_sign, block_sign};
    auto g = detail::signed_permutation<K>(target, sign);
    if (is_automorphism(g)) return g;
  }
  throw Inconsistency("no sign choice makes the permutation an automorphism");
}

template <CoefficientField K>
std::vector<AlgebraMap<K>> permutation_automorphisms() {
  std::vector<AlgebraMap<K>> out;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    for (bool sw : {false, true}) out.push_back(permutation_automorphism<K>(p, sw));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Nilpotent derivations of (C_s, *) spanning the root spaces.  An entry
// {r, c, v} means D(b_c) has coefficient v on b_r.
struct RootDerivation {
  const char* name;
  std::vector<std::array<int, 3>> entries;
};

inline const std::vector<RootDerivation>& root_derivations() {
  static const std::vector<RootDerivation> roots = {
      {"short(-1,0)", {{E1, U1, -1}, {E2, U1, 1}, {U2, V3, -1}, {U3, V2, 1}, {V1, E1, -1}, {V1, E2, 1}}},
      {"short(0,-1)", {{E1, U2, -1}, {E2, U2, 1}, {U1, V3, 1}, {U3, V1, -1}, {V2, E1, -1}, {V2, E2, 1}}},
      {"short(1,1)", {{E1, U3, -1}, {E2, U3, 1}, {U1, V2, -1}, {U2, V1, 1}, {V3, E1, -1}, {V3, E2, 1}}},
      {"short(1,0)", {{E1, V1, 1}, {E2, V1, -1}, {U1, E1, 1}, {U1, E2, -1}, {V2, U3, -1}, {V3, U2, 1}}},
      {"short(0,1)", {{E1, V2, -1}, {E2, V2, 1}, {U2, E1, -1}, {U2, E2, 1}, {V1, U3, -1}, {V3, U1, 1}}},
      {"short(-1,-1)", {{E1, V3, 1}, {E2, V3, -1}, {U3, E1, 1}, {U3, E2, -1}, {V1, U2, -1}, {V2, U1, 1}}},
      {"long(u1,u2)", {{U1, U2, -1}, {V2, V1, 1}}},
      {"long(u1,u3)", {{U1, U3, -1}, {V3, V1, 1}}},
      {"long(u2,u1)", {{U2, U1, -1}, {V1, V2, 1}}},
      {"long(u2,u3)", {{U2, U3, -1}, {V3, V2, 1}}},
      {"long(u3,u1)", {{U3, U1, -1}, {V1, V3, 1}}},
      {"long(u3,u2)", {{U3, U2, -1}, {V2, V3, 1}}},
  };
  return roots;
}

// exp(s D) = 1 + s D + s^2 D^2 / 2  (D^3 = 0 for these derivations)
template <CoefficientField K>
AlgebraMap<K> root_element(std::size_t root, const RationalScalar<K>& s) {
  using S = RationalScalar<K>;
  const auto& all = root_derivations();
  if (root >= all.size()) throw PreconditionViolated("root index out of range");
  Matrix<S> D(8, 8);
  for (const auto& e : all[root].entries) D(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1])) = S(e[2]);
  Matrix<S> sD = D, sD2 = D * D;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      sD(i, j) = sD(i, j) * s;
      sD2(i, j) = sD2(i, j) * s * s / S(2);
    }
  return AlgebraMap<K>(Matrix<S>::identity(8) + sD + sD2);
}

// Diagonal related triple from the maximal torus of Spin: m is a point of
// the cocharacter lattice, written in a fixed basis whose coordinates must
// have even sum.  The exponents of g1, g2, g3 on the standard basis are
// linear in m.
template <CoefficientField K>
RelatedTriple<K> spin_torus_triple(const std::array<int, 4>& m) {
  // twice the exponent vectors of the four basis cocharacters
  static const int kTwice[4][24] = {
      {1, -1, -1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -2, 2, 0, 0, 0, 0, 0, 0},
      {1, -1, -1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1, 1, -1, -1, 0, 0, -2, 0, 0, 2, 0, 0},
      {1, -1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 1, -1, 1, -1, 0, 0, 0, -2, 0, 0, 2, 0},
      {1, -1, 1, 1, -1, -1, -1, 1, -1, 1, 1, 1, -1, -1, -1, 1, 0, 0, 0, 0, -2, 0, 0, 2},
  };
  if ((m[0] + m[1] + m[2] + m[3]) % 2 != 0) throw PreconditionViolated("torus triple coordinates must have even sum");
  std::array<std::array<int, 8>, 3> ex{};
  for (std::size_t c = 0; c < 24; ++c) {
    int twice = 0;
    for (std::size_t i = 0; i < 4; ++i) twice += m[i] * kTwice[i][c];
    if (twice % 2 != 0) throw Inconsistency("torus triple exponent is not integral");
    ex[c / 8][c % 8] = twice / 2;
  }
  return {diagonal_map<K>(ex[0]), diagonal_map<K>(ex[1]), diagonal_map<K>(ex[2])};
}

// Product of word_length generators: torus cocharacters with exponents in
// {-1,0,1}, permutation automorphisms, and root elements exp(c t^k D) with
// k in {-1,0,1}.  Deterministic in the seed.
template <CoefficientField K>
AlgebraMap<K> random_automorphism(std::uint64_t seed, int word_length) {
  using S = RationalScalar<K>;
  if (word_length < 0) throw PreconditionViolated("negative word length");
  std::mt19937_64 rng(seed);
  static const auto perms = permutation_automorphisms<K>();
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  AlgebraMap<K> g;
  for (int w = 0; w < word_length; ++w) {
    int kind = pick(0, 3);
    if (kind == 0) {
      int a = pick(-1, 1), b = pick(-1, 1);
      g = g * torus_cochar<K>(a, b);
    } else if (kind == 1) {
      g = g * perms[static_cast<std::size_t>(pick(0, static_cast<int>(perms.size()) - 1))];
    } else {
      std::size_t root = static_cast<std::size_t>(pick(0, static_cast<int>(root_derivations().size()) - 1));
      K c = K::random(rng);
      while (c.is_zero()) c = K::random(rng);
      g = g * root_element<K>(root, S::monomial(pick(-1, 1), c));
    }
  }
  auto check = is_automorphism(g);
  if (!check || !is_special(g)) throw Inconsistency("random automorphism failed verification: " + check.failure);
  return g;
}

}  // namespace g2lat
