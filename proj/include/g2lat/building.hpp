#pragma once

// Vertex types of lattices in C_s, the standard lattices, graded chains and
// stabilizer checks.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lat/groups.hpp"
#include "g2lat/lattice.hpp"

namespace g2lat {

enum class VertexType { Type1 = 1, Type2 = 2, Type3 = 3 };

inline std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::Type1: return "Type1";
    case VertexType::Type2: return "Type2";
    case VertexType::Type3: return "Type3";
  }
  return "?";
}

inline std::optional<VertexType> vertex_type_from_string(const std::string& s) {
  if (s == "Type1" || s == "1") return VertexType::Type1;
  if (s == "Type2" || s == "2") return VertexType::Type2;
  if (s == "Type3" || s == "3") return VertexType::Type3;
  return std::nullopt;
}

// t-exponents of the standard lattice on the basis e1, e2, u1, ..., v3.
inline std::array<int, 8> standard_exponents(VertexType t) {
  switch (t) {
    case VertexType::Type1: return {0, 0, 0, 0, 0, 0, 0, 0};
    case VertexType::Type2: return {0, 0, 1, 0, 0, 0, 1, 0};
    case VertexType::Type3: return {0, 0, 1, 1, 0, 0, 0, 1};
  }
  return {};
}

template <CoefficientField K>
Lattice<K> standard_lattice(VertexType t) {
  return Lattice<K>::monomial(standard_exponents(t));
}

template <CoefficientField K>
struct VertexCertificate {
  std::optional<VertexType> type;  // empty: not a vertex
  std::string reason;              // why not, when type is empty
  std::optional<OrderWitness<K>> witness;
  std::optional<int> dual_length;  // length of L^dual / L when L is sandwiched
  std::optional<AlgebraMap<K>> transformer;
  bool is_vertex() const { return type.has_value(); }
};

template <CoefficientField K>
VertexCertificate<K> classify_vertex(const Lattice<K>& L) {
  using S = RationalScalar<K>;
  VertexCertificate<K> c;
  if (!L.is_full_rank()) {
    c.reason = "lattice is not of full rank";
    return c;
  }
  auto ord = is_order(L);
  Lattice<K> D = L.dual();
  Lattice<K> Linv = L.scaled(S::monomial(-1));
  bool sandwiched = D.contains(L) && Linv.contains(D);
  if (sandwiched) c.dual_length = length(L, D);
  if (!ord) {
    c.reason = ord.witness->kind == OrderWitness<K>::Kind::ParaUnitMissing ? "not an order: e is not in L"
                                                                            : "not an order: a product leaves L";
    c.witness = ord.witness;
    return c;
  }
  if (D == L) {
    c.type = VertexType::Type1;
    return c;
  }
  if (!sandwiched || D == Linv) {
    c.reason = "L is not strictly between its dual and t^-1 L";
    return c;
  }
  Lattice<K> P = product_span(D, D);
  if (Linv.contains(P)) {
    c.type = VertexType::Type2;
    return c;
  }
  Lattice<K> M = sum(P.scaled(S::t()), L);
  if (is_selfdual(M)) {
    c.type = VertexType::Type3;
    return c;
  }
  c.reason = "dual products leave t^-1 L and t L^dual * L^dual + L is not self-dual";
  return c;
}

// The lattice t L^dual * L^dual + L of a Type3 vertex.
template <CoefficientField K>
Lattice<K> middle_lattice(const Lattice<K>& L) {
  Lattice<K> D = L.dual();
  return sum(product_span(D, D).scaled(RationalScalar<K>::t()), L);
}

struct Grading {
  int num = 0, den = 1;
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Grading&, const Grading&) = default;
  bool operator<(const Grading& o) const { return num * o.den < o.num * den; }
};

template <CoefficientField K>
struct GradedChain {
  std::vector<std::pair<Lattice<K>, Grading>> members;  // increasing lattices, decreasing gradings
};

template <CoefficientField K>
GradedChain<K> graded_chain(const Lattice<K>& L, VertexType T) {
  using S = RationalScalar<K>;
  auto c = classify_vertex(L);
  if (!c.type || *c.type != T) throw PreconditionViolated("lattice does not classify as " + to_string(T));
  const S t = S::t(), tinv = S::monomial(-1);
  GradedChain<K> ch;
  switch (T) {
    case VertexType::Type1:
      ch.members = {{L.scaled(t), {1, 1}}, {L, {0, 1}}, {L.scaled(tinv), {-1, 1}}};
      break;
    case VertexType::Type2: {
      auto D = L.dual();
      ch.members = {{D.scaled(t), {1, 2}}, {L, {0, 1}}, {D, {-1, 2}}, {L.scaled(tinv), {-1, 1}}};
      break;
    }
    case VertexType::Type3: {
      auto D = L.dual();
      ch.members = {{D.scaled(t), {1, 3}}, {L, {0, 1}}, {middle_lattice(L), {-1, 3}}, {D, {-2, 3}}, {L.scaled(tinv), {-1, 1}}};
      break;
    }
  }
  for (std::size_t i = 1; i < ch.members.size(); ++i) {
    const auto& a = ch.members[i - 1].first;
    const auto& b = ch.members[i].first;
    if (!b.contains(a) || a == b) throw Inconsistency("graded chain inclusion is not strict");
  }
  return ch;
}

template <CoefficientField K>
bool stabilizes(const AlgebraMap<K>& g, const Lattice<K>& L) {
  auto a = is_automorphism(g);
  if (!a) throw PreconditionViolated("stabilizes needs an automorphism: " + a.failure);
  if (apply(g, L) != L) return false;
  if (L.is_full_rank()) {
    if (apply(g, L.dual()) != L.dual()) throw Inconsistency("automorphism fixes L but not its dual");
    auto c = classify_vertex(L);
    if (c.type == VertexType::Type3) {
      auto M = middle_lattice(L);
      if (apply(g, M) != M) throw Inconsistency("automorphism fixes L but not the middle lattice");
    }
  }
  return true;
}

}  // namespace g2lat
