// Acceptance runner: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit.  Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "g2lat/io.hpp"

using namespace g2lat;
using S5 = RationalScalar<F5>;
using O5 = Octonion<F5>;
using L5 = Lattice<F5>;

namespace {

struct Paths {
  std::string cli, samples, golden;
};

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const Paths& p, const std::string& args) {
  std::string cmd = "'" + p.cli + "' " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) throw std::runtime_error("cannot start " + p.cli);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// Exponents of the dual of a monomial lattice: the coordinate i pairs with
// its partner, so the dual exponent is minus the partner's exponent.
std::array<int, 8> dual_exponents(const std::array<int, 8>& a) {
  static const std::array<std::size_t, 8> partner{1, 0, 5, 6, 7, 2, 3, 4};
  std::array<int, 8> d{};
  for (std::size_t i = 0; i < 8; ++i) d[i] = -a[partner[i]];
  return d;
}

// Rendered over Q so that -1 prints as a sign.
std::string render_table() {
  using OQ = Octonion<Qq>;
  std::string out = "* ";
  for (auto n : basis_names()) out += std::string(" ") + n;
  out += "\n";
  for (std::size_t i = 0; i < 8; ++i) {
    out += basis_names()[i];
    for (std::size_t j = 0; j < 8; ++j) {
      OQ p = para_mul(OQ::basis(i), OQ::basis(j));
      out += " " + (p.is_zero() ? std::string(".") : p.to_string());
    }
    out += "\n";
  }
  return out;
}

Outcome table_fidelity(const Paths& p) {
  std::string golden = slurp(p.golden + "/table1.txt");
  std::string mine = render_table();
  std::size_t match = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (para_mul(O5::basis(i), O5::basis(j)) == para_mul_direct(O5::basis(i), O5::basis(j))) ++match;
  bool ok = golden == mine && match == 64;
  return {ok, "rendered table " + std::string(golden == mine ? "equals" : "differs from") +
                  " golden byte for byte; table vs definition " + std::to_string(match) + "/64"};
}

Outcome identity_suite(const Paths&) {
  auto r = check_identities<F5>(1, 500, 3);
  std::size_t failed = 0, checks = 0;
  for (const auto& x : r.results) {
    failed += x.failed;
    checks += x.passed + x.failed;
  }
  return {r.all_passed() && r.samples == 500,
          std::to_string(r.results.size()) + " identities, " + std::to_string(checks) + " checks, " +
              std::to_string(failed) + " failures"};
}

Outcome example_suite(const Paths&) {
  // displayed bases, as exponents of e1 e2 u1 u2 u3 v1 v2 v3
  const std::array<int, 8> l2{0, 0, 1, 0, 0, 0, 1, 0}, l3{0, 0, 1, 1, 0, 0, 0, 1};
  const std::array<int, 8> l2_dual{0, 0, 0, -1, 0, -1, 0, 0};
  const std::array<int, 8> l2_dual_sq{-1, -1, 0, -1, -1, -1, 0, -1};
  const std::array<int, 8> m3{0, 0, 0, 0, -1, 0, 0, 1};
  auto L1 = L5::standard(), L2 = L5::monomial(l2), L3 = L5::monomial(l3);
  std::vector<std::string> bad;
  auto check = [&](bool c, const char* what) {
    if (!c) bad.push_back(what);
  };
  auto c1 = classify_vertex(L1), c2 = classify_vertex(L2), c3 = classify_vertex(L3);
  check(c1.type == VertexType::Type1, "classify L1");
  check(c2.type == VertexType::Type2, "classify L2");
  check(c3.type == VertexType::Type3, "classify L3");
  check(L2.dual() == L5::monomial(l2_dual), "dual L2");
  check(L3.dual() == L5::monomial(dual_exponents(l3)), "dual L3");
  auto sq = product_span(L2.dual(), L2.dual());
  check(sq == L5::monomial(l2_dual_sq), "L2v*L2v display");
  check(sq == L2.scaled(S5::monomial(-1)), "L2v*L2v = t^-1 L2");
  auto M = sum(product_span(L3.dual(), L3.dual()).scaled(S5::t()), L3);
  check(M == L5::monomial(m3), "M display");
  check(is_selfdual(M), "M self-dual");
  std::string d = "9 checks";
  for (const auto& b : bad) d += "; failed: " + b;
  return {bad.empty(), d};
}

Outcome invariants(const Paths&) {
  std::vector<std::string> bad;
  const int expected[3] = {0, 4, 6};
  for (int i = 0; i < 3; ++i) {
    auto L = standard_lattice<F5>(static_cast<VertexType>(i + 1));
    if (length(L, L.dual()) != expected[i]) bad.push_back("length L" + std::to_string(i + 1));
    if (!discriminant_class(L).even()) bad.push_back("discriminant parity L" + std::to_string(i + 1));
  }
  int quasi = 0, split = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto T = static_cast<VertexType>(1 + seed % 3);
    auto L = random_lattice<F5>(T, 1000 + seed, 1 + static_cast<int>(seed % 5));
    try {
      (gram_standard_form(L).kind == ProfileKind::Split ? split : quasi)++;
    } catch (const Inconsistency&) {
      ++quasi;
    }
  }
  std::string d = "lengths 0/4/6, even discriminants; 200 random vertices: " + std::to_string(split) + " split, " +
                  std::to_string(quasi) + " quasi-split";
  for (const auto& b : bad) d += "; failed: " + b;
  return {bad.empty() && quasi == 0 && split == 200, d};
}

Outcome round_trip(const Paths&) {
  int ok = 0, total = 0, max_prec = 0;
  std::string first;
  for (auto T : {VertexType::Type1, VertexType::Type2, VertexType::Type3})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      ++total;
      int w = 1 + static_cast<int>(seed % 5);
      auto L = random_lattice<F5>(T, seed, w);
      std::string why;
      auto c = classify_vertex(L);
      if (c.type != T) {
        why = "classify";
      } else {
        auto r = reduce_lattice(L, kDefaultPrecision);
        max_prec = std::max(max_prec, r.precision_used);
        if (!r.type || *r.type != T || !r.g) {
          why = "reduction";
        } else if (r.precision_used != kDefaultPrecision) {
          why = "precision " + std::to_string(r.precision_used);
        } else {
          auto v = certificate_verify(*r.g, L, T);
          if (!v.ok) why = "certificate: " + v.failure;
        }
      }
      if (why.empty()) {
        ++ok;
      } else if (first.empty()) {
        first = to_string(T) + " seed " + std::to_string(seed) + ": " + why;
      }
    }
  std::string d = std::to_string(ok) + "/" + std::to_string(total) + " certified, max precision " + std::to_string(max_prec);
  if (!first.empty()) d += "; first failure " + first;
  return {ok == total, d};
}

// Lattices of the same kind as span(e1, e2, t u1, u2, u3, v1, v2, v3): its
// images under torus elements and permutation automorphisms (still
// monomial), then under random automorphisms.
std::vector<L5> length_two_corpus() {
  const L5 base = L5::monomial({0, 0, 1, 0, 0, 0, 0, 0});
  const auto perms = permutation_automorphisms<F5>();
  std::vector<L5> out;
  for (int r = 0; out.size() < 50; ++r)
    for (int a = -r; a <= r && out.size() < 50; ++a)
      for (int b = -r; b <= r && out.size() < 50; ++b) {
        if (std::max(std::abs(a), std::abs(b)) != r) continue;
        for (const auto& w : perms) {
          L5 L = apply(torus_cochar<F5>(a, b) * w, base);
          if (std::find(out.begin(), out.end(), L) == out.end() && out.size() < 50) out.push_back(L);
        }
      }
  for (std::uint64_t seed = 0; out.size() < 100; ++seed)
    out.push_back(apply(random_automorphism<F5>(500 + seed, 1 + static_cast<int>(seed % 5)), out[seed]));
  return out;
}

Outcome length_two(const Paths&) {
  int refuted = 0, witnessed = 0, total = 0, with_mu = 0;
  std::string first;
  for (const auto& L : length_two_corpus()) {
    ++total;
    std::string why;
    if (!L.contains(O5::para_unit())) why = "e not in L";
    auto prof = gram_standard_form(L);
    if (why.empty() && (prof.kind != ProfileKind::Split || prof.l != 2)) why = "profile";
    auto oc = is_order(L);
    if (why.empty()) {
      if (oc.is_order || !oc.witness || oc.witness->kind != OrderWitness<F5>::Kind::ProductOutside) {
        why = "is_order";
      } else {
        const auto& w = *oc.witness;
        if (L.contains(w.x) && L.contains(w.y) && para_mul(w.x, w.y) == w.product && !L.contains(w.product))
          ++witnessed;
        else
          why = "order witness does not re-check";
      }
    }
    if (why.empty()) {
      auto r = reduce_lattice(L);
      if (r.type || !r.refutation) {
        why = "no refutation";
      } else {
        const auto& f = *r.refutation;
        if (f.valuation == -1 && L.contains(f.x) && L.contains(f.y) && para_mul(f.x, f.y) == f.product &&
            L.coordinate_valuation(f.product) == -1)
          ++refuted;
        else
          why = "refutation valuation " + std::to_string(f.valuation);
        if (f.mu && *f.mu == S5::monomial(-1)) ++with_mu;
      }
    }
    if (!why.empty() && first.empty()) first = "lattice " + std::to_string(total) + ": " + why;
  }
  std::string d = std::to_string(witnessed) + "/" + std::to_string(total) + " order witnesses, " + std::to_string(refuted) +
                  "/" + std::to_string(total) + " refutations at valuation -1 (" + std::to_string(with_mu) +
                  " through mu = t^-1)";
  if (!first.empty()) d += "; first failure " + first;
  return {witnessed == total && refuted == total, d};
}

template <class Rng>
O5 random_isotropic(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  for (;;) {
    O5 x = random_octonion<F5>(rng, 2);
    // solve q(x) = 0 for the partner coordinate of a nonzero one
    static const std::size_t first[4] = {E1, U1, U2, U3};
    std::size_t a = first[pick(rng)], b = pairing_partner(a);
    if (x[a].is_zero()) continue;
    x[b] = S5(0);
    x[b] = -norm(x) / x[a];
    if (!x.is_zero() && norm(x).is_zero()) return x;
  }
}

Outcome triality_subspaces(const Paths&) {
  std::mt19937_64 rng(7);
  int rank_ok = 0, scale_ok = 0, distinct_ok = 0, pairs = 0;
  for (int n = 0; n < 100; ++n) {
    O5 x = random_isotropic(rng);
    auto I = left_ideal(x);
    bool iso = true;
    for (const auto& a : I.basis()) {
      if (!norm(a).is_zero()) iso = false;
      for (const auto& b : I.basis())
        if (!bilinear(a, b).is_zero()) iso = false;
    }
    if (I.rank() == 4 && iso) ++rank_ok;
    S5 c;
    do c = S5::from_polynomial(Polynomial<F5>(std::vector<F5>{F5::random(rng), F5::random(rng)})) * S5::monomial(n % 5 - 2);
    while (c.is_zero());
    if (left_ideal(c * x) == I && right_ideal(c * x) == right_ideal(x)) ++scale_ok;
    O5 y = random_isotropic(rng);
    if (IsotropicSubspace<F5>::echelon({x, y}).size() == 2) {
      ++pairs;
      if (!(left_ideal(y) == I)) ++distinct_ok;
    }
  }
  return {rank_ok == 100 && scale_ok == 100 && distinct_ok == pairs && pairs > 0,
          "rank 4 isotropic " + std::to_string(rank_ok) + "/100, scaling " + std::to_string(scale_ok) +
              "/100, distinct " + std::to_string(distinct_ok) + "/" + std::to_string(pairs)};
}

Outcome s3_action(const Paths&) {
  int ok = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = random_automorphism<F5>(seed, 1 + static_cast<int>(seed % 5));
    RelatedTriple<F5> T{g, g, g};
    std::string why;
    if (!is_related_triple(T)) {
      why = "(g,g,g)";
    } else {
      auto r = rho(T), th = theta(T);
      if (!is_related_triple(r)) why = "rho image";
      else if (!is_related_triple(th)) why = "theta image";
      else if (!(rho(rho(r)) == T)) why = "rho^3";
      else if (!(theta(th) == T)) why = "theta^2";
    }
    if (why.empty()) ++ok;
    else if (first.empty()) first = "seed " + std::to_string(seed) + ": " + why;
  }
  std::string d = std::to_string(ok) + "/50 triples";
  if (!first.empty()) d += "; first failure " + first;
  return {ok == 50, d};
}

Outcome cli_goldens(const Paths& p) {
  int stable = 0, golden = 0, cases = 0;
  std::string first;
  for (const char* cmd : {"classify", "dual", "chain"})
    for (const char* lat : {"L1", "L2", "L3"}) {
      ++cases;
      std::string args = std::string(cmd) + " --in '" + p.samples + "/" + lat + ".json'";
      Run a = run_cli(p, args), b = run_cli(p, args);
      std::string name = std::string(cmd) + "_" + lat + ".json";
      if (a.code == 0 && a.out == b.out) ++stable;
      if (a.out == slurp(p.golden + "/" + name)) ++golden;
      else if (first.empty()) first = name;
    }
  int round = 0;
  for (int s = 0; s < 50; ++s) {
    Run r = run_cli(p, "--seed " + std::to_string(s) + " random-lattice --type " + std::to_string(1 + s % 3) +
                           " --word-length " + std::to_string(1 + s % 4));
    if (r.code != 0) continue;
    std::string text = r.out;
    auto L = lattice_from_json<F5>(parse_json_text(text));
    if (lattice_to_json(L).dump(2) + "\n" == text) ++round;
  }
  std::string d = "stable " + std::to_string(stable) + "/" + std::to_string(cases) + ", golden " + std::to_string(golden) +
                  "/" + std::to_string(cases) + ", round trips " + std::to_string(round) + "/50";
  if (!first.empty()) d += "; first mismatch " + first;
  return {stable == cases && golden == cases && round == 50, d};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Paths p;
  app.add_option("--cli", p.cli, "g2lat executable")->required();
  app.add_option("--samples", p.samples, "directory with L1.json .. L3.json")->required();
  app.add_option("--golden", p.golden, "directory with golden outputs")->required();
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds
    std::function<Outcome(const Paths&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "table fidelity", 1, table_fidelity},
      {2, "identity suite (F5, degree 3, 500 samples)", 30, identity_suite},
      {3, "standard lattice examples", 5, example_suite},
      {4, "length and discriminant invariants", 60, invariants},
      {5, "round-trip reduction (3 types x 50 seeds, w <= 5, precision 32)", 600, round_trip},
      {6, "length-two exclusion (100 lattices)", 120, length_two},
      {7, "triality subspaces (100 isotropic vectors)", 60, triality_subspaces},
      {8, "S3 action on 50 triples (g,g,g)", 60, s3_action},
      {9, "CLI goldens and parse-print round trips", 10, cli_goldens},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(p);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < c.limit;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %g s", s, c.limit);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail << " [" << timing
              << (in_time ? "" : ", too slow") << "]\n";
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << (all.size() - static_cast<std::size_t>(failures)) << "/"
            << all.size() << "\n";
  return failures ? 1 : 0;
}
