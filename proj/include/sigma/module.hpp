#pragma once

#include <utility>
#include <vector>

#include "sigma/structure.hpp"

namespace sigma {

namespace detail {

// Smallest subgroup of G containing `seeds` and stable under conjugation by `acting`.
inline Subgroup module_closure(const GroupTable& G, const Bitset& seeds,
                               std::span<const Element> acting) {
  Bitset cur = subgroup_closure(G, seeds).members();
  while (true) {
    Bitset next = cur;
    cur.for_each([&](std::size_t v) {
      for (Element h : acting) next.set(G.conj(static_cast<Element>(v), h));
    });
    next = subgroup_closure(G, next).members();
    if (next == cur) return Subgroup(std::move(cur));
    cur = std::move(next);
  }
}

}  // namespace detail

/// Whether V1 and V2 are isomorphic as H-modules (H acting by conjugation).
///
/// Exhaustive: an equivariant homomorphism is determined by the images of a
/// module generating set of V1, so every choice of images in V2 is tried and
/// extended along the relations v -> v*g and v -> v^h. Throws
/// PreconditionError unless V1, V2 are elementary abelian, normalized by H and
/// centralize each other.
inline bool h_module_isomorphic(const GroupTable& G, const Subgroup& V1, const Subgroup& V2,
                                const Subgroup& H) {
  if (!elementary_abelian_prime(G, V1) || !elementary_abelian_prime(G, V2))
    throw PreconditionError("modules must be non-trivial elementary abelian subgroups");
  const auto hgens = generators_of(G, H);
  for (Element h : hgens)
    if (!normalizes(G, h, V1) || !normalizes(G, h, V2))
      throw PreconditionError("acting subgroup does not normalize both modules");
  const auto v1 = V1.elements();
  const auto v2 = V2.elements();
  for (Element a : v1)
    for (Element b : v2)
      if (G.mul(a, b) != G.mul(b, a)) throw PreconditionError("modules do not centralize each other");

  if (V1.order() != V2.order()) return false;
  if (V1 == V2) return true;

  // Module generators of V1, greedily.
  std::vector<Element> mgens;
  {
    Bitset span(G.order());
    span.set(G.identity());
    Subgroup cur(span);
    for (Element v : v1) {
      if (cur.contains(v)) continue;
      mgens.push_back(v);
      Bitset seeds = cur.members();
      seeds.set(v);
      cur = detail::module_closure(G, seeds, hgens);
    }
  }

  constexpr Element unset = static_cast<Element>(-1);
  const std::size_t m = mgens.size();
  std::vector<std::size_t> choice(m, 0);
  std::vector<Element> image(G.order(), unset);
  std::vector<Element> queue;
  while (true) {
    // Try the current assignment.
    std::fill(image.begin(), image.end(), unset);
    image[G.identity()] = G.identity();
    queue.assign(1, G.identity());
    bool consistent = true;
    auto assign = [&](Element from, Element to) {
      if (image[from] == unset) {
        image[from] = to;
        queue.push_back(from);
      } else if (image[from] != to) {
        consistent = false;
      }
    };
    for (std::size_t i = 0; i < m && consistent; ++i) assign(mgens[i], v2[choice[i]]);
    for (std::size_t qi = 0; qi < queue.size() && consistent; ++qi) {
      const Element v = queue[qi];
      for (std::size_t i = 0; i < m && consistent; ++i)
        assign(G.mul(v, mgens[i]), G.mul(image[v], image[mgens[i]]));
      for (Element h : hgens) {
        if (!consistent) break;
        assign(G.conj(v, h), G.conj(image[v], h));
      }
    }
    if (consistent && queue.size() == v1.size()) {
      Bitset hit(G.order());
      bool injective = true;
      for (Element v : v1)
        if (!hit.insert(image[v])) injective = false;
      if (injective) return true;
    }
    // Next assignment.
    std::size_t pos = 0;
    while (pos < m && ++choice[pos] == v2.size()) choice[pos++] = 0;
    if (pos == m) return false;
  }
}

/// Lifts a generating pair of G/N to a generating pair of G inside the same
/// cosets, by exhaustive search over N x N in index order.
inline std::pair<Element, Element> gaschutz_lift(const GroupTable& G, const Subgroup& N, Element x,
                                                 Element y) {
  if (!is_normal(G, N)) throw PreconditionError("N is not normal");
  Bitset seeds = N.members();
  seeds.set(x);
  seeds.set(y);
  if (subgroup_closure(G, seeds).order() != G.order())
    throw PreconditionError("<x, y>N is not the whole group");
  if (!is_two_generated(G)) throw NotTwoGenerated();
  const auto elems = N.elements();
  for (Element a : elems)
    for (Element b : elems) {
      const Element xa = G.mul(x, a);
      const Element yb = G.mul(y, b);
      if (is_generating_pair(G, xa, yb)) return {xa, yb};
    }
  throw InternalInconsistency("no generating lift found in xN x yN");
}

}  // namespace sigma
