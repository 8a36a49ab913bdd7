#pragma once

#include <string>
#include <vector>

#include "sigma/graph.hpp"
#include "sigma/lattice.hpp"
#include "sigma/structure.hpp"

namespace sigma {

/// Γ(G): all elements, edges between distinct generating pairs.
inline SimpleGraph generating_graph(const GroupTable& G, const GenPairMatrix& pairs) {
  const std::size_t n = G.order();
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  SimpleGraph g(std::move(ids));
  for (std::size_t x = 0; x < n; ++x) {
    g.adj[x] = pairs.row(static_cast<Element>(x));
    g.adj[x].reset(x);
  }
  return g;
}

/// V(G): elements that lie in some generating pair with a distinct partner.
inline std::vector<Element> vertex_set_V(const GroupTable& G, const GenPairMatrix& pairs) {
  std::vector<Element> out;
  for (Element x = 0; x < G.order(); ++x) {
    Bitset r = pairs.row(x);
    r.reset(x);
    if (r.any()) out.push_back(x);
  }
  return out;
}

namespace detail {
inline SimpleGraph induced_on_V(const GroupTable& G, const GenPairMatrix& pairs, bool generating) {
  const auto V = vertex_set_V(G, pairs);
  SimpleGraph g(std::vector<std::size_t>(V.begin(), V.end()));
  for (std::size_t a = 0; a < V.size(); ++a)
    for (std::size_t b = a + 1; b < V.size(); ++b)
      if (pairs.generates(V[a], V[b]) == generating) g.add_edge(a, b);
  return g;
}
}  // namespace detail

/// Δ(G): Γ(G) restricted to its non-isolated vertices.
inline SimpleGraph delta_graph(const GroupTable& G, const GenPairMatrix& pairs) {
  return detail::induced_on_V(G, pairs, true);
}

/// Σ(G): vertices V(G), edges between distinct non-generating pairs.
inline SimpleGraph sigma_graph(const GroupTable& G, const GenPairMatrix& pairs) {
  if (G.order() <= 1) throw PreconditionError("Σ(G) needs a non-trivial group");
  auto g = detail::induced_on_V(G, pairs, false);
  if (g.vertex_count() == 0) throw NotTwoGenerated();
  return g;
}

/// I(G): non-trivial proper subgroups, adjacent when they meet non-trivially.
/// Vertex ids are positions in `lattice`.
inline SimpleGraph intersection_graph(const GroupTable& G, const SubgroupList& lattice) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].order() > 1 && lattice[i].order() < G.order()) ids.push_back(i);
  SimpleGraph g(ids);
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b)
      if ((lattice[ids[a]].members() & lattice[ids[b]].members()).count() > 1) g.add_edge(a, b);
  return g;
}

struct DualityReport {
  bool applicable = false;
  std::string reason;  // why not applicable, or empty
  std::size_t sigma_components = 0;
  std::size_t intersection_components = 0;
  // (diam of Σ component, diam of matching I component), indexed by Σ component.
  std::vector<std::pair<std::size_t, std::size_t>> diameters;
  bool pass = false;
};

/// Compares components of Σ(G) and I(G) when V(G) = G \ {1}. Σ components
/// are matched to I components through x -> <x>.
inline DualityReport duality_check(const GroupTable& G, const GenPairMatrix& pairs,
                                   const SubgroupList& lattice) {
  DualityReport rep;
  const auto V = vertex_set_V(G, pairs);
  if (V.size() != G.order() - 1 || std::find(V.begin(), V.end(), G.identity()) != V.end()) {
    std::vector<Element> missing;
    for (Element x = 0; x < G.order(); ++x)
      if (x != G.identity() && std::find(V.begin(), V.end(), x) == V.end()) missing.push_back(x);
    if (std::find(V.begin(), V.end(), G.identity()) != V.end())
      rep.reason = "identity lies in V(G) (group is cyclic)";
    else
      rep.reason = std::to_string(missing.size()) + " non-identity elements lie in no generating pair" +
                   (missing.empty() ? "" : ", first " + G.label(missing.front()));
    return rep;
  }
  rep.applicable = true;
  const auto sigma = sigma_graph(G, pairs);
  const auto inter = intersection_graph(G, lattice);
  const auto sc = components_and_diameters(sigma);
  const auto ic = components_and_diameters(inter);
  rep.sigma_components = sc.count;
  rep.intersection_components = ic.count;

  // lattice position -> I vertex position
  std::vector<std::size_t> ivert(lattice.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < inter.vertex_count(); ++i) ivert[inter.ids[i]] = i;
  auto lattice_index = [&](const Subgroup& S) {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].order() == S.order() && lattice[i] == S) return i;
    throw InternalInconsistency("subgroup missing from lattice");
  };

  bool ok = sc.count == ic.count;
  std::vector<std::size_t> match(sc.count, static_cast<std::size_t>(-1));
  std::vector<char> used(ic.count, 0);
  for (std::size_t v = 0; v < sigma.vertex_count() && ok; ++v) {
    const auto x = static_cast<Element>(sigma.ids[v]);
    const std::size_t iv = ivert[lattice_index(cyclic_subgroup(G, x))];
    if (iv == static_cast<std::size_t>(-1)) {
      ok = false;
      break;
    }
    const std::size_t s = sc.component_of[v];
    const std::size_t i = ic.component_of[iv];
    if (match[s] == static_cast<std::size_t>(-1)) {
      if (used[i]) ok = false;
      match[s] = i;
      used[i] = 1;
    } else if (match[s] != i) {
      ok = false;
    }
  }
  for (std::size_t s = 0; s < sc.count && ok; ++s) {
    if (match[s] == static_cast<std::size_t>(-1)) {
      ok = false;
      break;
    }
    const std::size_t ds = sc.diameters[s];
    const std::size_t di = ic.diameters[match[s]];
    rep.diameters.emplace_back(ds, di);
    if ((ds > di ? ds - di : di - ds) > 1) ok = false;
  }
  rep.pass = ok;
  return rep;
}

/// True iff Σ(G) is the disjoint union of the cliques M \ Φ(G) over the p + 1
/// maximal subgroups M, so that its complement Δ(G) is complete (p+1)-partite.
/// Requires a non-cyclic 2-generated p-group.
inline bool multipartite_structure_check(const GroupTable& G, const GenPairMatrix& pairs,
                                         const SubgroupList& lattice) {
  const auto p = is_p_group(G);
  if (!p || is_cyclic(G) || !is_two_generated(G))
    throw PreconditionError("needs a non-cyclic 2-generated p-group");
  const auto maximals = maximal_subgroups(G, lattice);
  if (maximals.size() != *p + 1) return false;
  const auto phi = frattini(G, lattice);
  const auto sigma = sigma_graph(G, pairs);

  // Parts must partition the vertex set V(G) = G \ Φ(G).
  std::vector<std::size_t> part(G.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < maximals.size(); ++i) {
    Bitset b = maximals[i].members();
    b.subtract(phi.members());
    bool clash = false;
    b.for_each([&](std::size_t x) {
      if (part[x] != static_cast<std::size_t>(-1)) clash = true;
      part[x] = i;
    });
    if (clash) return false;
  }
  for (Element x = 0; x < G.order(); ++x) {
    const bool in_v = sigma.index_of(x).has_value();
    if (in_v != (part[x] != static_cast<std::size_t>(-1))) return false;
  }
  // Within a part: adjacent (Σ edges). Across parts: non-adjacent.
  for (std::size_t a = 0; a < sigma.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < sigma.vertex_count(); ++b)
      if (sigma.has_edge(a, b) != (part[sigma.ids[a]] == part[sigma.ids[b]])) return false;
  return true;
}

}  // namespace sigma
