#pragma once

#include <vector>

#include "sigma/structure.hpp"

namespace sigma {

/// G -> G/N. Cosets are numbered by their smallest element index, so the
/// coset of the identity is the target identity only when the source identity
/// is index 0 (true for every built-in constructor).
struct QuotientMap {
  GroupTable target;
  std::vector<Element> projection;  // source index -> coset index
  std::vector<Element> representatives;  // coset index -> smallest member
  Subgroup kernel;
};

inline QuotientMap quotient(const GroupTable& G, const Subgroup& N, const Limits& limits = {}) {
  if (N.members().size() != G.order() || !N.contains(G.identity()))
    throw PreconditionError("kernel is not a subgroup of this group");
  if (!is_normal(G, N)) throw PreconditionError("subgroup is not normal; quotient undefined");
  const std::size_t n = G.order();
  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> proj(n, unset);
  std::vector<Element> reps;
  const auto kernel_elems = N.elements();
  for (Element x = 0; x < n; ++x) {
    if (proj[x] != unset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : kernel_elems) proj[G.mul(x, k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Element r : reps) labels.push_back("[" + G.label(r) + "]");
  auto target = GroupTable::tabulate(
      m, [&](Element a, Element b) { return proj[G.mul(reps[a], reps[b])]; }, std::move(labels),
      G.provenance() + "/N" + std::to_string(N.order()), limits);
  return QuotientMap{std::move(target), std::move(proj), std::move(reps), N};
}

/// Preimage of a subgroup of the quotient.
inline Subgroup preimage(const QuotientMap& q, const Subgroup& S) {
  Bitset b(q.projection.size());
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    if (S.contains(q.projection[x])) b.set(x);
  return Subgroup(std::move(b));
}

/// Image of a subgroup of the source.
inline Subgroup image(const QuotientMap& q, const Subgroup& S) {
  Bitset b(q.target.order());
  S.members().for_each([&](std::size_t x) { b.set(q.projection[x]); });
  return Subgroup(std::move(b));
}

}  // namespace sigma
