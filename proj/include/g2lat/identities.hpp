#pragma once

// Randomized exact checks of the composition-algebra identities satisfied by
// (C_s, .) and (C_s, *).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2lat/octonion.hpp"

namespace g2lat {

struct IdentityResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // coordinates of x, y, z, w in the first failing sample
  std::optional<std::vector<std::vector<std::string>>> counterexample;
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int degree = 0;
  std::vector<IdentityResult> results;
  bool all_passed() const {
    for (const auto& r : results)
      if (r.failed) return false;
    return true;
  }
};

// Uniform polynomial coordinates of degree <= degree_bound.
template <CoefficientField K, class Rng>
Octonion<K> random_octonion(Rng& rng, int degree_bound) {
  Octonion<K> x;
  for (std::size_t i = 0; i < 8; ++i) {
    std::vector<K> c(static_cast<std::size_t>(degree_bound + 1));
    for (auto& a : c) a = K::random(rng);
    x[i] = RationalScalar<K>::from_polynomial(Polynomial<K>(std::move(c)));
  }
  return x;
}

// The para-product table with one structure constant negated (u1 * u2).
// Used as a negative control for the identity checker.
inline ProductTable corrupted_para_table() {
  ProductTable t = para_table();
  t.entry[U1][U2].sign = -t.entry[U1][U2].sign;
  return t;
}

template <CoefficientField K>
IdentityReport check_identities(std::uint64_t seed, std::size_t count, int degree_bound,
                                const ProductTable& table = para_table()) {
  using O = Octonion<K>;
  using S = RationalScalar<K>;
  const O e = O::para_unit();
  auto dot = [](const O& a, const O& b) { return oct_mul(a, b); };
  auto star = [&table](const O& a, const O& b) { return para_mul(a, b, table); };
  auto bil = [](const O& a, const O& b) { return bilinear(a, b); };
  auto q = [](const O& a) { return norm(a); };

  struct Check {
    const char* name;
    std::function<bool(const O&, const O&, const O&, const O&)> holds;
  };
  const std::vector<Check> checks = {
      {"quadratic_equation",
       [&](const O& x, const O&, const O&, const O&) { return (dot(x, x) - bil(x, e) * x + q(x) * e).is_zero(); }},
      {"quadratic_equation_linearized",
       [&](const O& x, const O& y, const O&, const O&) {
         return (dot(x, y) + dot(y, x) - bil(x, e) * y - bil(y, e) * x + bil(x, y) * e).is_zero();
       }},
      {"conjugation_involution",
       [&](const O& x, const O& y, const O&, const O&) {
         return conj(conj(x)) == x && conj(dot(x, y)) == dot(conj(y), conj(x));
       }},
      {"norm_right_multiplicative",
       [&](const O& x, const O& y, const O& z, const O&) { return bil(dot(x, z), dot(y, z)) == bil(x, y) * q(z); }},
      {"norm_left_multiplicative",
       [&](const O& x, const O& y, const O& z, const O&) { return bil(dot(z, x), dot(z, y)) == q(z) * bil(x, y); }},
      {"norm_four_term",
       [&](const O& x, const O& y, const O& z, const O& w) {
         return bil(dot(x, z), dot(y, w)) + bil(dot(x, w), dot(y, z)) == bil(x, y) * bil(z, w);
       }},
      {"conjugate_cancellation",
       [&](const O& x, const O& y, const O&, const O&) {
         return dot(x, dot(conj(x), y)) == q(x) * y && dot(dot(x, conj(y)), y) == q(y) * x;
       }},
      {"conjugate_cancellation_left_linearized",
       [&](const O& x, const O& y, const O& z, const O&) {
         return dot(x, dot(conj(y), z)) + dot(y, dot(conj(x), z)) == bil(x, y) * z;
       }},
      {"conjugate_cancellation_right_linearized",
       [&](const O& x, const O& y, const O& z, const O&) {
         return dot(dot(x, conj(y)), z) + dot(dot(x, conj(z)), y) == bil(y, z) * x;
       }},
      {"composition_unital",
       [&](const O& x, const O& y, const O&, const O&) { return q(dot(x, y)) == q(x) * q(y); }},
      {"composition_para",
       [&](const O& x, const O& y, const O&, const O&) { return q(star(x, y)) == q(x) * q(y); }},
      {"para_product_is_conjugate_product",
       [&](const O& x, const O& y, const O&, const O&) { return star(x, y) == dot(conj(x), conj(y)); }},
      {"symmetric_associativity",
       [&](const O& x, const O& y, const O& z, const O&) { return bil(star(x, y), z) == bil(star(y, z), x); }},
      {"para_norm_right",
       [&](const O& x, const O& y, const O& z, const O&) { return bil(star(x, z), star(y, z)) == bil(x, y) * q(z); }},
      {"para_norm_left",
       [&](const O& x, const O& y, const O& z, const O&) { return bil(star(z, x), star(z, y)) == q(z) * bil(x, y); }},
      {"para_norm_four_term",
       [&](const O& x, const O& y, const O& z, const O& w) {
         return bil(star(x, z), star(y, w)) + bil(star(x, w), star(y, z)) == bil(x, y) * bil(z, w);
       }},
      {"para_linearized_right",
       [&](const O& x, const O& y, const O& z, const O&) {
         return star(star(x, y), z) + star(star(z, y), x) == bil(x, z) * y;
       }},
      {"para_linearized_left",
       [&](const O& x, const O& y, const O& z, const O&) {
         return star(x, star(y, z)) + star(z, star(y, x)) == bil(x, z) * y;
       }},
      {"para_flexible",
       [&](const O& x, const O& y, const O&, const O&) {
         return star(star(x, y), x) == q(x) * y && star(x, star(y, x)) == q(x) * y;
       }},
      {"para_unit",
       [&](const O& x, const O&, const O&, const O&) {
         O x0 = x - (bil(x, e) / S(2)) * e;
         return star(e, e) == e && star(e, x0) == -x0 && star(x0, e) == -x0;
       }},
  };

  IdentityReport report;
  report.seed = seed;
  report.samples = count;
  report.degree = degree_bound;
  for (const auto& c : checks) report.results.push_back({c.name, 0, 0, std::nullopt});

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < count; ++s) {
    O x = random_octonion<K>(rng, degree_bound);
    O y = random_octonion<K>(rng, degree_bound);
    O z = random_octonion<K>(rng, degree_bound);
    O w = random_octonion<K>(rng, degree_bound);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      auto& r = report.results[i];
      if (checks[i].holds(x, y, z, w)) {
        ++r.passed;
      } else {
        if (!r.failed) {
          std::vector<std::vector<std::string>> ce;
          for (const O* v : {&x, &y, &z, &w}) {
            std::vector<std::string> coords;
            for (std::size_t k = 0; k < 8; ++k) coords.push_back((*v)[k].to_string());
            ce.push_back(std::move(coords));
          }
          r.counterexample = std::move(ce);
        }
        ++r.failed;
      }
    }
  }
  return report;
}

}  // namespace g2lat
