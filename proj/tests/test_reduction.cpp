#include <gtest/gtest.h>

#include "g2lat/reduction.hpp"

using namespace g2lat;
using S5 = RationalScalar<F5>;
using O5 = Octonion<F5>;
using L5 = Lattice<F5>;

namespace {

// Relations every reduced basis must satisfy, checked entry by entry.
void expect_frame_relations(const std::vector<O5>& b) {
  const O5 &e1 = b[0], &e2 = b[1];
  for (std::size_t i = 0; i < 3; ++i) {
    const O5 &u = b[2 + i], &v = b[5 + i];
    EXPECT_TRUE(para_mul(e1, u).is_zero());
    EXPECT_TRUE(para_mul(u, e2).is_zero());
    EXPECT_TRUE(para_mul(e2, v).is_zero());
    EXPECT_TRUE(para_mul(v, e1).is_zero());
    EXPECT_EQ(para_mul(u, e1), -u);
    EXPECT_EQ(para_mul(e2, u), -u);
    for (std::size_t j = 0; j < 3; ++j) {
      const O5 &uj = b[2 + j], &vj = b[5 + j];
      EXPECT_EQ(para_mul(u, vj), -bilinear(u, vj) * e1);
      EXPECT_EQ(para_mul(vj, u), -bilinear(u, vj) * e2);
      EXPECT_EQ(para_mul(u, uj), -para_mul(uj, u));
    }
  }
}

L5 std_lat(VertexType t) { return standard_lattice<F5>(t); }

}  // namespace

TEST(Reduction, StandardLatticeType1) {
  auto r = reduce_lattice(L5::standard());
  ASSERT_TRUE(r.type);
  EXPECT_EQ(*r.type, VertexType::Type1);
  EXPECT_EQ(r.basis[0], O5::basis(E1));
  EXPECT_EQ(r.basis[1], O5::basis(E2));
  EXPECT_TRUE(certificate_verify(*r.g, L5::standard(), VertexType::Type1).ok);
  expect_frame_relations(r.basis);
}

TEST(Reduction, TorusImage) {
  auto L = apply(torus_cochar<F5>(1, 1), L5::standard());
  auto r = reduce_lattice(L);
  ASSERT_TRUE(r.type);
  EXPECT_EQ(*r.type, VertexType::Type1);
  EXPECT_TRUE(certificate_verify(*r.g, L, VertexType::Type1).ok);
  EXPECT_EQ(apply(*r.g, L5::standard()), L);
}

TEST(Reduction, Type2Table) {
  auto r = reduce_lattice(std_lat(VertexType::Type2));
  ASSERT_TRUE(r.type);
  EXPECT_EQ(*r.type, VertexType::Type2);
  const auto& b = r.basis;
  EXPECT_EQ(para_mul(b[U1], b[U2]), S5::t() * b[V3]);
  EXPECT_EQ(bilinear(b[U1], b[V1]), S5::t());
  EXPECT_EQ(bilinear(b[U2], b[V2]), S5::t());
  EXPECT_TRUE(bilinear(b[U3], b[V3]).is_one());
  expect_frame_relations(b);
}

TEST(Reduction, Type3Table) {
  auto r = reduce_lattice(std_lat(VertexType::Type3));
  ASSERT_TRUE(r.type);
  EXPECT_EQ(*r.type, VertexType::Type3);
  const auto& b = r.basis;
  EXPECT_EQ(para_mul(b[U1], b[U2]), S5::t() * b[V3]);
  EXPECT_EQ(para_mul(b[V1], b[V2]), b[U3]);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(bilinear(b[U1 + i], b[V1 + i]), S5::t());
  expect_frame_relations(b);
}

TEST(Reduction, RoundTrip) {
  for (auto T : {VertexType::Type1, VertexType::Type2, VertexType::Type3})
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
      auto L = random_lattice<F5>(T, seed, 5);
      auto r = reduce_lattice(L);
      ASSERT_TRUE(r.type) << to_string(T) << " seed " << seed;
      EXPECT_EQ(*r.type, T);
      EXPECT_TRUE(certificate_verify(*r.g, L, T).ok);
      expect_frame_relations(r.basis);
    }
}

TEST(Reduction, RoundTripOverRationals) {
  for (auto T : {VertexType::Type2, VertexType::Type3}) {
    auto L = random_lattice<Qq>(T, 4, 4);
    auto r = reduce_lattice(L);
    ASSERT_TRUE(r.type);
    EXPECT_TRUE(certificate_verify(*r.g, L, T).ok);
  }
}

TEST(Reduction, LengthTwoRefutation) {
  // lambda = t: v3 * v2 leaves L through t^-1 (t u1)
  auto a = reduce_lattice(L5::monomial({0, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(a.type);
  ASSERT_TRUE(a.refutation);
  EXPECT_EQ(a.refutation->valuation, -1);
  EXPECT_EQ(a.refutation->lambda->valuation(), 1);
  EXPECT_FALSE(a.refutation->mu);
  // lambda a unit: after normalizing, mu = t^-1
  auto b = reduce_lattice(L5::monomial({0, 0, 1, 0, -1, 0, 0, 1}));
  ASSERT_TRUE(b.refutation);
  ASSERT_TRUE(b.refutation->mu);
  EXPECT_EQ(*b.refutation->mu, S5::monomial(-1));
  EXPECT_EQ(b.refutation->valuation, -1);
  // the witness re-checks
  auto L = L5::monomial({0, 0, 1, 0, -1, 0, 0, 1});
  EXPECT_EQ(para_mul(b.refutation->x, b.refutation->y), b.refutation->product);
  EXPECT_EQ(L.coordinate_valuation(b.refutation->product), -1);
  EXPECT_TRUE(L.contains(b.refutation->x));
  EXPECT_TRUE(L.contains(b.refutation->y));
}

TEST(Reduction, CertificateVerifier) {
  using G5 = AlgebraMap<F5>;
  EXPECT_TRUE(certificate_verify(G5::identity(), L5::standard(), VertexType::Type1).ok);
  auto c = certificate_verify(torus_cochar<F5>(1, 0), std_lat(VertexType::Type2), VertexType::Type2);
  EXPECT_FALSE(c.ok);
  EXPECT_FALSE(c.failure.empty());
  EXPECT_FALSE(certificate_verify(G5::identity(), std_lat(VertexType::Type2), VertexType::Type3).ok);
}

TEST(Reduction, Preconditions) {
  EXPECT_THROW(reduce_lattice(L5::standard().scaled(S5::t())), PreconditionViolated);
  EXPECT_THROW(reduce_lattice(L5::monomial({0, 0, 2, 0, 0, 0, 0, 0})), PreconditionViolated);
}

TEST(Reduction, RandomLattice) {
  EXPECT_EQ(random_lattice<F5>(VertexType::Type1, 9, 0), L5::standard());
  auto L = random_lattice<F5>(VertexType::Type2, 3, 4);
  EXPECT_EQ(length(L, L.dual()), 4);
  EXPECT_TRUE(is_selfdual(middle_lattice(random_lattice<F5>(VertexType::Type3, 3, 4))));
}

TEST(Reduction, TraceRecordsSteps) {
  auto r = reduce_lattice(random_lattice<F5>(VertexType::Type3, 1, 3));
  std::vector<std::string> names;
  for (const auto& s : r.trace.steps) names.push_back(s.name);
  EXPECT_EQ(names.front(), "hyperbolic_basis");
  EXPECT_EQ(names.back(), "table_check");
  // deterministic
  auto r2 = reduce_lattice(random_lattice<F5>(VertexType::Type3, 1, 3));
  EXPECT_EQ(r.basis, r2.basis);
}

TEST(Reduction, LengthTwoOtherOrbit) {
  // also l = 2 and contains e, but lambda = t^-2 already fails integrality
  L5 L = L5::monomial({0, 0, 0, -1, -1, 1, 1, 1});
  EXPECT_EQ(gram_standard_form(L).l, 2);
  auto r = reduce_lattice(L);
  ASSERT_TRUE(r.refutation);
  EXPECT_EQ(*r.refutation->lambda, S5::monomial(-2));
  EXPECT_EQ(r.refutation->valuation, -3);
  EXPECT_EQ(L.coordinate_valuation(para_mul(r.refutation->x, r.refutation->y)), -3);
}
