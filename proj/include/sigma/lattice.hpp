#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "sigma/subgroup.hpp"

namespace sigma {

/// Every subgroup of a group, ordered by cardinality then by lexicographic
/// member list.
using SubgroupList = std::vector<Subgroup>;

inline void sort_canonical(SubgroupList& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members().lex_compare(b.members()) < 0;
  });
}

/// One generator for each cyclic subgroup, in index order of first occurrence.
inline std::vector<Element> cyclic_subgroup_representatives(const GroupTable& G) {
  std::vector<char> covered(G.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < G.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    const std::size_t ord = G.element_order(x);
    Element p = x;
    for (std::size_t k = 1; k <= ord; ++k, p = G.mul(p, x))
      if (std::gcd(k, ord) == 1) covered[p] = 1;
  }
  return reps;
}

/// Enumerates all subgroups by breadth-first extension from the trivial
/// subgroup: <H, c> for every known H and every cyclic-subgroup generator c
/// outside H. Throws BoundExceeded past the configured limits.
inline SubgroupList all_subgroups(const GroupTable& G, const Limits& limits = {}) {
  const std::size_t n = G.order();
  if (n > limits.subgroup_order_bound)
    throw BoundExceeded("subgroup enumeration order bound", n, limits.subgroup_order_bound);
  const auto reps = cyclic_subgroup_representatives(G);

  SubgroupList found{trivial_subgroup(G)};
  std::vector<std::vector<Element>> gens{{}};
  std::unordered_set<Bitset, BitsetHash> seen{found.front().members()};

  for (std::size_t idx = 0; idx < found.size(); ++idx) {
    const Subgroup base = found[idx];
    const auto base_gens = gens[idx];
    const auto base_list = base.elements();
    // <H, c> = <H, ch> for h in H, so each coset cH needs one candidate.
    Bitset covered = base.members();
    for (Element c : reps) {
      if (covered.test(c)) continue;
      for (Element h : base_list) covered.set(G.mul(c, h));
      Bitset members = base.members();
      std::vector<Element> list = base_list;
      std::vector<Element> g = base_gens;
      g.push_back(c);
      detail::close_under(G, members, list, g, 0);
      if (seen.insert(members).second) {
        if (found.size() + 1 > limits.subgroup_count_cap)
          throw BoundExceeded("subgroup count cap", found.size() + 1, limits.subgroup_count_cap);
        found.emplace_back(std::move(members));
        gens.push_back(std::move(g));
      }
    }
  }
  sort_canonical(found);
  return found;
}

inline SubgroupList maximal_subgroups(const GroupTable& G, const SubgroupList& lattice) {
  const std::size_t n = G.order();
  SubgroupList out;
  for (const auto& M : lattice) {
    if (M.order() == n) continue;
    bool maximal = true;
    for (const auto& K : lattice) {
      if (K.order() <= M.order() || K.order() == n || K.order() % M.order() != 0) continue;
      if (M.is_subgroup_of(K)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(M);
  }
  return out;
}

inline SubgroupList maximal_subgroups(const GroupTable& G, const Limits& limits = {}) {
  return maximal_subgroups(G, all_subgroups(G, limits));
}

/// Intersection of the maximal subgroups; the whole group when there are none.
inline Subgroup frattini(const GroupTable& G, const SubgroupList& lattice) {
  Bitset acc(G.order());
  acc.set_all();
  for (const auto& M : maximal_subgroups(G, lattice)) acc &= M.members();
  return Subgroup(std::move(acc));
}

inline Subgroup frattini(const GroupTable& G, const Limits& limits = {}) {
  return frattini(G, all_subgroups(G, limits));
}

inline SubgroupList normal_subgroups(const GroupTable& G, const SubgroupList& lattice) {
  const auto gens = generators_of(G);
  SubgroupList out;
  for (const auto& H : lattice)
    if (is_normal(G, H, gens)) out.push_back(H);
  return out;
}

inline SubgroupList normal_subgroups(const GroupTable& G, const Limits& limits = {}) {
  return normal_subgroups(G, all_subgroups(G, limits));
}

inline SubgroupList minimal_normal_subgroups(const GroupTable& G, const SubgroupList& lattice) {
  const auto normals = normal_subgroups(G, lattice);
  SubgroupList out;
  for (const auto& N : normals) {
    if (N.order() == 1) continue;
    bool minimal = true;
    for (const auto& K : normals) {
      if (K.order() == 1 || K.order() >= N.order()) continue;
      if (K.is_subgroup_of(N)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(N);
  }
  return out;
}

inline SubgroupList minimal_normal_subgroups(const GroupTable& G, const Limits& limits = {}) {
  return minimal_normal_subgroups(G, all_subgroups(G, limits));
}

inline Subgroup socle(const GroupTable& G, const SubgroupList& lattice) {
  Bitset acc(G.order());
  acc.set(G.identity());
  for (const auto& N : minimal_normal_subgroups(G, lattice)) acc |= N.members();
  return subgroup_closure(G, acc);
}

inline Subgroup socle(const GroupTable& G, const Limits& limits = {}) {
  return socle(G, all_subgroups(G, limits));
}

}  // namespace sigma
