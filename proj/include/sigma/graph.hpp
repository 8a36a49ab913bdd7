#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sigma/bitset.hpp"
#include "sigma/errors.hpp"
#include "sigma/parallel.hpp"

namespace sigma {

/// Undirected simple graph. Vertex i of the graph stands for the opaque id
/// `ids[i]` (an element or subgroup index of whatever it was built from).
struct SimpleGraph {
  std::vector<std::size_t> ids;
  std::vector<Bitset> adj;

  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::size_t> vertex_ids)
      : ids(std::move(vertex_ids)), adj(ids.size(), Bitset(ids.size())) {}

  std::size_t vertex_count() const noexcept { return ids.size(); }
  void add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw ValidationError("self-loop");
    adj[a].set(b);
    adj[b].set(a);
  }
  bool has_edge(std::size_t a, std::size_t b) const noexcept { return adj[a].test(b); }
  std::size_t degree(std::size_t v) const noexcept { return adj[v].count(); }
  std::size_t edge_count() const noexcept {
    std::size_t s = 0;
    for (const auto& r : adj) s += r.count();
    return s / 2;
  }

  // Position of an id in the vertex list, or nullopt.
  std::optional<std::size_t> index_of(std::size_t id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return i;
    return std::nullopt;
  }

  bool is_symmetric_loopless() const noexcept {
    for (std::size_t a = 0; a < adj.size(); ++a) {
      if (adj[a].size() != adj.size() || adj[a].test(a)) return false;
      bool ok = true;
      adj[a].for_each([&](std::size_t b) {
        if (!adj[b].test(a)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool operator==(const SimpleGraph&) const = default;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

/// Components numbered by their smallest vertex position. `diameter` is
/// nullopt when the graph is disconnected (or has no vertices).
struct ComponentDecomposition {
  std::vector<std::size_t> component_of;
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> diameters;
  std::optional<std::size_t> diameter;

  bool connected() const noexcept { return count == 1; }
};

/// Eccentricity of `source` inside its component, by bitset frontier BFS.
inline std::size_t eccentricity(const SimpleGraph& g, std::size_t source) {
  const std::size_t n = g.vertex_count();
  Bitset visited(n), frontier(n);
  visited.set(source);
  frontier.set(source);
  std::size_t depth = 0;
  while (true) {
    Bitset next(n);
    frontier.for_each([&](std::size_t v) { next |= g.adj[v]; });
    next.subtract(visited);
    if (next.none()) return depth;
    visited |= next;
    frontier = std::move(next);
    ++depth;
  }
}

inline std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  constexpr auto inf = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, inf);
  Bitset visited(n), frontier(n);
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  for (std::size_t depth = 1;; ++depth) {
    Bitset next(n);
    frontier.for_each([&](std::size_t v) { next |= g.adj[v]; });
    next.subtract(visited);
    if (next.none()) return dist;
    next.for_each([&](std::size_t v) { dist[v] = depth; });
    visited |= next;
    frontier = std::move(next);
  }
}

inline ComponentDecomposition components_and_diameters(const SimpleGraph& g, std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  for (std::size_t a = 0; a < n; ++a)
    g.adj[a].for_each([&](std::size_t b) {
      if (b > a) uf.unite(a, b);
    });
  ComponentDecomposition out;
  out.component_of.assign(n, 0);
  std::vector<std::size_t> root_to_comp(n, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = uf.find(v);
    if (root_to_comp[r] == static_cast<std::size_t>(-1)) {
      root_to_comp[r] = out.count++;
      out.sizes.push_back(0);
    }
    out.component_of[v] = root_to_comp[r];
    ++out.sizes[out.component_of[v]];
  }
  std::vector<std::size_t> ecc(n, 0);
  parallel_for(n, workers, [&](std::size_t v) { ecc[v] = eccentricity(g, v); });
  out.diameters.assign(out.count, 0);
  for (std::size_t v = 0; v < n; ++v)
    out.diameters[out.component_of[v]] = std::max(out.diameters[out.component_of[v]], ecc[v]);
  if (out.count == 1) out.diameter = out.diameters.front();
  return out;
}

inline std::vector<std::size_t> isolated_vertices(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.adj[v].none()) out.push_back(v);
  return out;
}

/// Graphviz export. Vertices are written as v<id> with the given labels.
inline std::string to_dot(const SimpleGraph& g, const std::string& name,
                          const std::function<std::string(std::size_t)>& label) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  v" << g.ids[v] << " [label=" << quote(label(g.ids[v])) << "];\n";
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    g.adj[a].for_each([&](std::size_t b) {
      if (b > a) os << "  v" << g.ids[a] << " -- v" << g.ids[b] << ";\n";
    });
  os << "}\n";
  return os.str();
}

/// One line per row: the row's words, lowest word first, as 16 hex digits each.
inline std::string adjacency_hex(const std::vector<Bitset>& rows) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (const auto& r : rows) {
    for (auto w : r.words())
      for (int s = 60; s >= 0; s -= 4) out += digits[(w >> s) & 0xF];
    out += '\n';
  }
  return out;
}

/// Inverse of adjacency_hex for rows of `width` bits. Throws ValidationError
/// on malformed input.
inline std::vector<Bitset> rows_from_hex(const std::string& text, std::size_t width) {
  std::vector<Bitset> rows;
  std::istringstream in(text);
  std::string line;
  const std::size_t words = (width + 63) / 64;
  while (std::getline(in, line)) {
    if (line.size() != 16 * words) throw ValidationError("adjacency row has wrong length");
    Bitset r(width);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t v = 0;
      for (std::size_t k = 0; k < 16; ++k) {
        const char c = line[16 * w + k];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw ValidationError("adjacency row is not hex");
        v = (v << 4) | static_cast<std::uint64_t>(d);
      }
      r.words()[w] = v;
    }
    if (width % 64 && (r.words().back() >> (width % 64)))
      throw ValidationError("adjacency row has bits past its width");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace sigma
