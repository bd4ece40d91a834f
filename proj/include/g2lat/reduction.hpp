#pragma once

// Standard bases of vertex lattices and the certificate g with
// g * L_std = L, or a refutation when the lattice has length 2 over its dual.
//
// Outline: a hyperbolic basis of L gives an approximate isotropic e1 with
// <e1, e> = 1; one exact correction inside L makes it isotropic.  With
// e2 = e - e1, the complement L0 of (e1, e2) splits as L0 * e1 (the u's)
// plus L0 * e2 (the v's).  A Smith form of the pairing between these gives
// dual bases, and rescaling (u3, v3) normalizes u1 * u2.  Everything after
// the approximate seed is exact.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lat/building.hpp"
#include "g2lat/gram.hpp"
#include "g2lat/groups.hpp"

namespace g2lat {

template <CoefficientField K>
struct TraceStep {
  std::string name;
  std::vector<std::pair<std::string, std::vector<Octonion<K>>>> vectors;
  std::vector<std::pair<std::string, std::string>> values;
};

template <CoefficientField K>
struct ReductionTrace {
  std::vector<TraceStep<K>> steps;
  TraceStep<K>& add(std::string name) {
    steps.push_back({std::move(name), {}, {}});
    return steps.back();
  }
};

template <CoefficientField K>
struct Refutation {
  std::string kind = "NonIntegralStructureConstant";
  std::string detail;
  std::string x_name, y_name;  // factors, named in the reduced basis
  Octonion<K> x, y, product;
  int valuation = 0;  // minimal valuation of the product's coordinates in L
  // scalars of the derivation, when reached: u1 * u2 = lambda v3, u2 * u3 = mu v1
  std::optional<RationalScalar<K>> lambda, mu;
};

template <CoefficientField K>
struct ReductionResult {
  std::optional<VertexType> type;
  std::vector<Octonion<K>> basis;  // e1, e2, u1, u2, u3, v1, v2, v3
  std::optional<AlgebraMap<K>> g;
  std::optional<Refutation<K>> refutation;
  int precision_used = 0;
  ReductionTrace<K> trace;
};

namespace detail {

inline const char* reduced_name(std::size_t i) { return basis_names()[i]; }

// The basis product with the most negative coordinate valuation in L, if any
// product leaves L.  The minimum over basis pairs is the minimum over L x L.
template <CoefficientField K>
std::optional<Refutation<K>> worst_product(const Lattice<K>& L, const std::vector<Octonion<K>>& basis, bool named) {
  std::optional<Refutation<K>> best;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto p = para_mul(basis[i], basis[j]);
      auto v = L.coordinate_valuation(p);
      if (!v) throw Inconsistency("product of lattice vectors outside the ambient space");
      if (*v >= 0 || (best && best->valuation <= *v)) continue;
      Refutation<K> r;
      r.x = basis[i];
      r.y = basis[j];
      r.product = p;
      r.valuation = *v;
      r.x_name = named ? reduced_name(i) : "b" + std::to_string(i + 1);
      r.y_name = named ? reduced_name(j) : "b" + std::to_string(j + 1);
      best = r;
    }
  return best;
}

// Exact splittings e = e1 + e2 (e1 isotropic, <e1, e> = 1, e1 and e2 in L)
// near the approximate one read off the hyperbolic basis.  The approximate
// e1 is truncated at increasing orders m and moved onto the quadric along an
// isotropic vector Z = t^s b_i of L: X + cZ is isotropic for
// c = -q(X) / <X, Z>, and stays in L when c is integral.
template <CoefficientField K>
std::vector<std::pair<Octonion<K>, std::string>> idempotent_candidates(const Lattice<K>& L, const GramProfile<K>& prof) {
  using S = RationalScalar<K>;
  using O = Octonion<K>;
  const O e = O::para_unit();
  Matrix<S> A(8, 8);
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i) A(i, j) = prof.adapted_basis[j][i];
  auto a = solve(A, e.to_vec());
  if (!a) throw Inconsistency("adapted basis does not span");
  O approx;
  for (std::size_t i = 0; i < 4; ++i) approx += (*a)[i] * prof.adapted_basis[i];
  auto coords = L.coordinates(approx);
  if (!coords) throw Inconsistency("approximate idempotent outside the span");

  std::vector<O> Z;
  for (std::size_t i = 0; i < 8; ++i) {
    auto v = L.coordinate_valuation(O::basis(i));
    Z.push_back(O::basis(i, S::monomial(-*v)));
  }
  std::vector<std::pair<O, std::string>> out;
  // Each splitting is followed by its swap (e2, e1): which of the two halves
  // plays the u's is not visible from the Gram matrix alone.
  auto add = [&](const O& Y, const std::string& how) {
    S w = bilinear(Y, e);
    if (!w.is_unit()) return;
    O e1 = w.inverse() * Y;
    if (!L.contains(e1) || !L.contains(e - e1)) return;
    for (const auto& c : out)
      if (c.first == e1) return;
    out.push_back({e1, how});
    out.push_back({e - e1, how + ", swapped"});
  };
  for (int m = 1;; m = std::min(2 * m, prof.precision)) {
    O X;
    for (std::size_t k = 0; k < 8; ++k) X += (*coords)[k].truncate_below(m) * L.basis()[k];
    const std::string trunc = "truncation below t^" + std::to_string(m);
    S qx = norm(X);
    if (qx.is_zero()) {
      add(X, trunc);
    } else {
      for (std::size_t i = 0; i < 8; ++i) {
        S p = bilinear(X, Z[i]);
        if (p.is_zero()) continue;
        S c = -qx / p;
        if (c.valuation() < 0) continue;
        add(X + c * Z[i], trunc + ", corrected along " + Z[i].to_string());
      }
    }
    if (m == prof.precision) break;
  }
  return out;
}

enum class FrameOutcome { Certified, Refuted, Rejected };

// Steps after the split of e, for one choice of e1.  Rejected means the
// frame does not normalize (wrong valuation of lambda or a table mismatch)
// although no product leaves L; the caller then tries another e1.
template <CoefficientField K>
FrameOutcome reduce_frame(const Lattice<K>& L, const Octonion<K>& e1, ReductionResult<K>& res, std::string& why) {
  using S = RationalScalar<K>;
  using O = Octonion<K>;
  const O e2 = O::para_unit() - e1;
  auto& trace = res.trace;
  if (!(para_mul(e1, e1) == e2 && para_mul(e2, e2) == e1 && para_mul(e1, e2).is_zero() && para_mul(e2, e1).is_zero()))
    throw Inconsistency("split of e violates the idempotent relations");

  std::vector<O> l0gens;
  for (const auto& b : L.basis()) l0gens.push_back(b - bilinear(b, e2) * e1 - bilinear(b, e1) * e2);
  auto L0 = Lattice<K>::from_generators(l0gens);
  std::vector<O> g1, g2;
  for (const auto& x : L0.basis()) {
    g1.push_back(para_mul(x, e1));
    g2.push_back(para_mul(x, e2));
  }
  auto L1 = Lattice<K>::from_generators(g1), L2 = Lattice<K>::from_generators(g2);
  {
    auto& s = trace.add("sublattices");
    s.vectors = {{"L0", L0.basis()}, {"L1", L1.basis()}, {"L2", L2.basis()}};
  }
  if (L0.rank() != 6 || L1.rank() != 3 || L2.rank() != 3) throw Inconsistency("unexpected ranks of L0, L1, L2");
  if (!L.contains(L1) || !L.contains(L2)) {
    res.refutation = worst_product(L, L.basis(), false);
    if (!res.refutation) throw Inconsistency("L0 * e_i leaves L although L is closed");
    res.refutation->detail = "L0 * e_i is not contained in L";
    return FrameOutcome::Refuted;
  }

  // dual bases from a Smith form of the pairing, exponent 1 first
  Matrix<S> P(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) P(i, j) = bilinear(L1.basis()[i], L2.basis()[j]);
  auto sf = smith_form(P);
  if (sf.exponents.size() != 3) throw Inconsistency("pairing between L1 and L2 is degenerate");
  std::vector<std::size_t> idx = {0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sf.exponents[a] > sf.exponents[b]; });
  std::vector<O> U(3), V(3);
  std::vector<int> d(3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) {
      U[k] += sf.left(idx[k], i) * L1.basis()[i];
      V[k] += sf.right(i, idx[k]) * L2.basis()[i];
    }
    d[k] = sf.exponents[idx[k]];
    if (d[k] != 0 && d[k] != 1) throw Inconsistency("pairing exponent outside {0, 1}");
  }
  const int k1 = static_cast<int>(std::count(d.begin(), d.end(), 1));
  {
    auto& s = trace.add("dual_bases");
    s.vectors = {{"u", U}, {"v", V}};
    s.values = {{"pairing_exponents", std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2])}};
  }

  // u1 * u2 = lambda v3
  auto coefficient_on = [&](const O& x, std::size_t k) { return bilinear(x, U[k]) / bilinear(U[k], V[k]); };
  O u12 = para_mul(U[0], U[1]);
  S lambda = coefficient_on(u12, 2);
  if (u12 != lambda * V[2]) throw Inconsistency("u1 * u2 is not a multiple of v3");
  auto basis_of = [&]() { return std::vector<O>{e1, e2, U[0], U[1], U[2], V[0], V[1], V[2]}; };
  auto refute = [&](std::string detail) {
    res.basis = basis_of();
    res.refutation = worst_product(L, res.basis, true);
    if (!res.refutation) return false;
    res.refutation->detail = std::move(detail);
    res.refutation->lambda = lambda;
    return true;
  };
  auto& norm_step = trace.add("normalize");
  norm_step.values.push_back({"lambda", lambda.to_string()});

  if (k1 == 1) {
    // length 2: normalize lambda when it is a unit, then u2 * u3 = mu v1
    if (lambda.is_unit()) {
      V[2] = lambda * V[2];
      U[2] = lambda.inverse() * U[2];
      S mu = coefficient_on(para_mul(U[1], U[2]), 0);
      norm_step.values.push_back({"mu", mu.to_string()});
      if (!refute("u1 * u2 = v3 after normalizing, and u2 * u3 = mu v1 with mu = " + mu.to_string()))
        throw Inconsistency("length 2 frame without a non-integral product");
      res.refutation->mu = mu;
    } else if (!refute("u1 * u2 = lambda v3 with lambda = " + lambda.to_string() + " not a unit")) {
      throw Inconsistency("length 2 frame without a non-integral product");
    }
    return FrameOutcome::Refuted;
  }
  if (k1 != 0 && k1 != 2 && k1 != 3) throw Inconsistency("unexpected pairing pattern");
  const VertexType T = k1 == 0 ? VertexType::Type1 : k1 == 2 ? VertexType::Type2 : VertexType::Type3;
  const S target = T == VertexType::Type1 ? S(1) : S::t();
  const S ratio = lambda / target;
  norm_step.values.push_back({"target", target.to_string()});
  if (!ratio.is_unit()) {
    if (refute("u1 * u2 = lambda v3 with lambda / " + target.to_string() + " not a unit")) return FrameOutcome::Refuted;
    why = "lambda = " + lambda.to_string() + " has the wrong valuation for " + to_string(T);
    return FrameOutcome::Rejected;
  }
  V[2] = ratio * V[2];
  U[2] = ratio.inverse() * U[2];

  res.basis = basis_of();
  auto ex = standard_exponents(T);
  std::vector<O> images;
  for (std::size_t i = 0; i < 8; ++i) images.push_back(S::monomial(-ex[i]) * res.basis[i]);
  AlgebraMap<K> g = AlgebraMap<K>::from_images(images);
  auto chk = is_automorphism(g);
  {
    auto& s = trace.add("table_check");
    s.vectors.push_back({"basis", res.basis});
    s.values = {{"type", to_string(T)}, {"products_match", chk.ok ? "64/64" : chk.failure}};
  }
  if (!chk) {
    if (refute("multiplication table differs from the standard one: " + chk.failure)) return FrameOutcome::Refuted;
    why = chk.failure;
    return FrameOutcome::Rejected;
  }
  res.type = T;
  res.g = g;
  return FrameOutcome::Certified;
}

}  // namespace detail

struct CertificateCheck {
  bool ok = false;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// (i) g is an automorphism, (ii) g * L_std(T) = L, (iii) det g = 1.
// Lattice equality is decided on canonical forms; membership of the images
// and equality of determinant valuations are checked as well.
template <CoefficientField K>
CertificateCheck certificate_verify(const AlgebraMap<K>& g, const Lattice<K>& L, VertexType T) {
  CertificateCheck r;
  auto a = is_automorphism(g);
  if (!a) {
    r.failure = "not an automorphism: " + a.failure;
    return r;
  }
  auto std_lat = standard_lattice<K>(T);
  auto image = apply(g, std_lat);
  for (const auto& b : image.basis())
    if (!L.contains(b)) {
      r.failure = "image of the standard lattice is not contained in L";
      return r;
    }
  if (!L.is_full_rank() || image.det_valuation() != L.det_valuation()) {
    r.failure = "determinant valuations differ";
    return r;
  }
  if (image != L) {
    r.failure = "canonical forms differ";
    return r;
  }
  if (!is_special(g)) {
    r.failure = "determinant is not 1";
    return r;
  }
  r.ok = true;
  return r;
}

template <CoefficientField K>
ReductionResult<K> reduce_lattice(const Lattice<K>& L, int precision = kDefaultPrecision) {
  using O = Octonion<K>;
  const O e = O::para_unit();
  L.require_full_rank("reduction");
  if (!L.contains(e)) throw PreconditionViolated("reduction needs e in L");
  require_sandwiched(L);

  std::string why = "no exact splitting of e found";
  for (int N = precision;; N = std::min(2 * N, kMaxPrecision)) {
    auto prof = gram_standard_form(L, N);
    auto cands = detail::idempotent_candidates(L, prof);
    for (std::size_t c = 0; c < cands.size(); ++c) {
      ReductionResult<K> res;
      res.precision_used = N;
      auto& s = res.trace.add("hyperbolic_basis");
      s.vectors.push_back({"adapted_basis", prof.adapted_basis});
      s.values = {{"precision", std::to_string(N)},
                  {"l", std::to_string(prof.l)},
                  {"r", std::to_string(prof.r)},
                  {"exact", prof.exact ? "true" : "false"}};
      auto& sp = res.trace.add("split_para_unit");
      sp.vectors = {{"e1", {cands[c].first}}, {"e2", {O::para_unit() - cands[c].first}}};
      sp.values = {{"method", cands[c].second}, {"candidate", std::to_string(c + 1) + "/" + std::to_string(cands.size())}};
      auto outcome = detail::reduce_frame(L, cands[c].first, res, why);
      if (outcome == detail::FrameOutcome::Rejected) continue;
      if (outcome == detail::FrameOutcome::Certified) {
        auto cert = certificate_verify(*res.g, L, *res.type);
        if (!cert) throw Inconsistency("certificate failed: " + cert.failure);
      }
      return res;
    }
    if (N >= kMaxPrecision) break;
  }
  throw PrecisionExhausted("no splitting of e gives a standard frame up to precision " + std::to_string(kMaxPrecision) + ": " + why);
}

template <CoefficientField K>
Lattice<K> random_lattice(VertexType T, std::uint64_t seed, int word_length) {
  return apply(random_automorphism<K>(seed, word_length), standard_lattice<K>(T));
}

}  // namespace g2lat
