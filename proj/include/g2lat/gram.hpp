#pragma once

// Gram standard forms of lattices L with L in L^dual in t^-1 L.
//
// The lattice splits as an orthogonal sum of hyperbolic planes, unimodular
// ones first, then t-modular ones.  Isotropic vectors are found over the
// residue field and lifted t-adically by Newton steps; all arithmetic is
// exact, but the lifted vectors are truncated at the working precision N,
// so the Gram matrix of the adapted basis matches the pattern modulo t^(N-1)
// (exactly, when no truncation was needed).

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2lat/lattice.hpp"

namespace g2lat {

inline constexpr int kDefaultPrecision = 32;
inline constexpr int kMaxPrecision = 256;

enum class ProfileKind { Split, QuasiSplit };

template <CoefficientField K>
struct GramProfile {
  ProfileKind kind = ProfileKind::Split;
  int l = 0;  // length of L^dual / L
  int r = 0;  // number of t-modular hyperbolic planes
  // Antidiagonal exponents: Gram(x_i, x_{7-i}) = t^{exponents[i]}.
  std::array<int, 8> exponents{};
  std::vector<Octonion<K>> adapted_basis;
  bool exact = false;
  int precision = kDefaultPrecision;
};

namespace detail {

// q(a + s b) = qa + s*ab + s^2*qb = 0, solved for s in k.
template <CoefficientField K>
std::optional<K> solve_line(const K& qa, const K& ab, const K& qb) {
  if (qb.is_zero()) {
    if (ab.is_zero()) return std::nullopt;
    return -qa / ab;
  }
  K disc = ab * ab - K(4) * qa * qb;
  auto r = disc.sqrt();
  if (!r) return std::nullopt;
  return (-ab + *r) / (K(2) * qb);
}

template <CoefficientField K>
K residue_form(const Matrix<K>& G, const std::vector<K>& a, const std::vector<K>& b) {
  K s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !G(i, j).is_zero()) s += a[i] * G(i, j) * b[j];
  }
  return s;
}

}  // namespace detail

// A nonzero isotropic vector of the symmetric bilinear form G over k, or
// nullopt.  `accept` may impose a further condition.  Small candidates are
// tried first, then random lines from a fixed seed.
template <CoefficientField K, class Accept>
std::optional<std::vector<K>> residue_isotropic_vector(const Matrix<K>& G, Accept accept, int random_tries = 4000) {
  const std::size_t m = G.rows();
  auto q = [&](const std::vector<K>& a) { return detail::residue_form(G, a, a) / K(2); };
  auto try_line = [&](const std::vector<K>& a, const std::vector<K>& b) -> std::optional<std::vector<K>> {
    auto s = detail::solve_line(q(a), detail::residue_form(G, a, b), q(b));
    if (!s) return std::nullopt;
    std::vector<K> x(m);
    bool nz = false;
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = a[i] + *s * b[i];
      nz = nz || !x[i].is_zero();
    }
    if (!nz || !accept(x)) return std::nullopt;
    return x;
  };
  auto unit = [&](std::size_t i) {
    std::vector<K> v(m, K(0));
    v[i] = K(1);
    return v;
  };
  for (std::size_t i = 0; i < m; ++i) {
    auto v = unit(i);
    if (q(v).is_zero() && accept(v)) return v;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (auto x = try_line(unit(i), unit(j))) return x;
    }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < random_tries; ++k) {
    std::vector<K> a(m), b(m);
    for (auto& x : a) x = K::random(rng);
    for (auto& x : b) x = K::random(rng);
    if (auto x = try_line(a, b)) return x;
  }
  return std::nullopt;
}

namespace detail {

template <CoefficientField K>
class GramSplitter {
 public:
  using S = RationalScalar<K>;
  using V = Vec<S>;

  GramSplitter(const Matrix<S>& gram, int precision) : G_(gram), N_(precision) {}

  S form(const V& a, const V& b, int scale) const {
    S s;
    for (std::size_t i = 0; i < 8; ++i) {
      if (a[i].is_zero()) continue;
      S row;
      for (std::size_t j = 0; j < 8; ++j)
        if (!b[j].is_zero() && !G_(i, j).is_zero()) row += G_(i, j) * b[j];
      if (!row.is_zero()) s += a[i] * row;
    }
    return scale ? s * S::monomial(-scale) : s;
  }
  S half_norm(const V& a, int scale) const { return form(a, a, scale) / S(2); }

  V truncate(const V& a) const {
    V r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].truncate_below(N_);
    return r;
  }
  static V axpy(const S& c, const V& x, const V& y) {  // c*x + y
    V r = y;
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!x[i].is_zero()) r[i] += c * x[i];
    return r;
  }

  Matrix<K> residue_gram(const std::vector<V>& vs, int scale) const {
    Matrix<K> g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i; j < vs.size(); ++j) {
        S f = form(vs[i], vs[j], scale);
        if (f.valuation() < 0) throw PreconditionViolated("form is not integral on the lattice");
        g(i, j) = g(j, i) = f.residue();
      }
    return g;
  }

  struct Pair {
    V x, y;
    int scale;
  };

  // Orthogonal splitting of the module spanned by vs (form scaled by t^-scale
  // is unimodular on it) into hyperbolic planes.
  void split(std::vector<V> vs, int scale) {
    while (!vs.empty()) {
      const std::size_t m = vs.size();
      if (m == 1) throw Inconsistency("quasi-split Gram profile: a rank-one residue summand remains");
      Matrix<K> rg = residue_gram(vs, scale);
      auto xb = residue_isotropic_vector<K>(rg, [](const std::vector<K>&) { return true; });
      if (!xb) throw NeedsEtaleExtension("no isotropic residue vector found for a rank " + std::to_string(m) + " summand", 2);
      std::size_t j = m;
      for (std::size_t c = 0; c < m && j == m; ++c) {
        K acc(0);
        for (std::size_t i = 0; i < m; ++i) acc += (*xb)[i] * rg(i, c);
        if (!acc.is_zero()) j = c;
      }
      if (j == m) throw Inconsistency("residue form is degenerate on a unimodular summand");
      V x(8, S(0));
      for (std::size_t i = 0; i < m; ++i)
        if (!(*xb)[i].is_zero()) x = axpy(S((*xb)[i]), vs[i], x);
      const V& y0 = vs[j];
      for (int iter = 0; iter < 64; ++iter) {
        S qx = half_norm(x, scale);
        if (qx.valuation() >= N_) break;
        S c = (qx / form(x, y0, scale)).truncate_below(N_);
        x = truncate(axpy(-c, y0, x));
      }
      S pair = form(x, y0, scale);
      V z = truncate(axpy(pair.inverse() - S(1), y0, y0));
      S qz = half_norm(z, scale);
      V y = truncate(axpy(-qz, x, z));
      pairs_.push_back({x, y, scale});

      // residues of x and y in the coordinates of vs
      std::vector<K> xr = *xb, yr(m, K(0));
      K qzr = qz.residue();
      for (std::size_t i = 0; i < m; ++i) yr[i] = -qzr * xr[i];
      yr[j] += pair.residue().inverse();
      std::size_t i1 = m, i2 = m;
      for (std::size_t a = 0; a < m && i1 == m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          if (!(xr[a] * yr[b] - xr[b] * yr[a]).is_zero()) {
            i1 = a;
            i2 = b;
            break;
          }
      if (i1 == m) throw Inconsistency("hyperbolic pair is dependent modulo t");
      S xy = form(x, y, scale);
      std::vector<V> next;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == i1 || i == i2) continue;
        const V& v = vs[i];
        S cy = form(v, y, scale) / xy, cx = form(v, x, scale) / xy;
        next.push_back(truncate(axpy(-cx, y, axpy(-cy, x, v))));
      }
      vs = std::move(next);
    }
  }

  std::vector<Pair>& pairs() { return pairs_; }

 private:
  Matrix<S> G_;
  int N_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

template <CoefficientField K>
void require_sandwiched(const Lattice<K>& L) {
  L.require_full_rank("gram_standard_form");
  Lattice<K> D = L.dual();
  if (!D.contains(L)) throw PreconditionViolated("lattice is not contained in its dual");
  if (!L.scaled(RationalScalar<K>::monomial(-1)).contains(D)) throw PreconditionViolated("dual is not contained in t^-1 L");
}

template <CoefficientField K>
GramProfile<K> gram_standard_form(const Lattice<K>& L, int precision = kDefaultPrecision) {
  using S = RationalScalar<K>;
  using V = Vec<S>;
  require_sandwiched(L);
  Matrix<S> G = L.gram();
  Matrix<K> rg(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) rg(i, j) = G(i, j).residue();

  // Coordinates of a complement to the radical of the residue form.
  std::vector<Vec<K>> rad = nullspace(rg);
  Matrix<K> radm(rad.size(), 8);
  for (std::size_t r = 0; r < rad.size(); ++r)
    for (std::size_t c = 0; c < 8; ++c) radm(r, c) = rad[r][c];
  auto rad_pivots = rref(radm);
  std::vector<bool> in_rad(8, false);
  for (auto p : rad_pivots) in_rad[p] = true;
  std::vector<std::size_t> I, P;
  for (std::size_t i = 0; i < 8; ++i) (in_rad[i] ? P : I).push_back(i);

  auto unit_vec = [](std::size_t i) {
    V v(8, S(0));
    v[i] = S(1);
    return v;
  };
  std::vector<V> level0, level1;
  for (auto i : I) level0.push_back(unit_vec(i));
  if (!I.empty()) {
    Matrix<S> GW(I.size(), I.size());
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b < I.size(); ++b) GW(a, b) = G(I[a], I[b]);
    Matrix<S> GWi = inverse(GW);
    for (auto p : P) {
      V v = unit_vec(p);
      for (std::size_t a = 0; a < I.size(); ++a) {
        S c;
        for (std::size_t b = 0; b < I.size(); ++b) c += GWi(a, b) * G(I[b], p);
        if (!c.is_zero()) v[I[a]] -= c;
      }
      level1.push_back(std::move(v));
    }
  } else {
    for (auto p : P) level1.push_back(unit_vec(p));
  }

  detail::GramSplitter<K> splitter(G, precision);
  splitter.split(level0, 0);
  splitter.split(level1, 1);
  auto& pairs = splitter.pairs();
  if (pairs.size() != 4) throw Inconsistency("hyperbolic splitting did not produce four planes");

  GramProfile<K> prof;
  prof.precision = precision;
  prof.l = static_cast<int>(P.size());
  prof.r = 0;
  Matrix<S> B = L.matrix();
  std::vector<Octonion<K>> xs, ys;
  for (std::size_t k = 0; k < 4; ++k) {
    prof.exponents[k] = prof.exponents[7 - k] = pairs[k].scale;
    prof.r += pairs[k].scale;
    xs.emplace_back(B * pairs[k].x);
    ys.emplace_back(B * pairs[k].y);
  }
  prof.adapted_basis = xs;
  for (std::size_t k = 4; k-- > 0;) prof.adapted_basis.push_back(ys[k]);
  prof.kind = prof.l % 2 == 0 ? ProfileKind::Split : ProfileKind::QuasiSplit;
  if (prof.kind == ProfileKind::QuasiSplit) throw Inconsistency("quasi-split Gram profile for a lattice in C_s");

  // Compare with the pattern.
  prof.exact = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      S g = i == j ? S(2) * norm(prof.adapted_basis[i]) : bilinear(prof.adapted_basis[i], prof.adapted_basis[j]);
      S want = i + j == 7 ? S::monomial(prof.exponents[i]) : S();
      S diff = g - want;
      if (diff.is_zero()) continue;
      prof.exact = false;
      if (diff.valuation() < precision - 1) throw Inconsistency("adapted basis misses the Gram pattern at working precision");
    }
  return prof;
}

}  // namespace g2lat
