#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigma/bitset.hpp"
#include "sigma/group.hpp"
#include "sigma/parallel.hpp"

namespace sigma {

/// A subgroup of some GroupTable, stored as a membership bitset over the
/// parent's element indices. Functions that need the multiplication take the
/// parent table explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(Bitset members) : members_(std::move(members)), order_(members_.count()) {}

  const Bitset& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element x) const noexcept { return members_.test(x); }
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
    return out;
  }
  bool is_subgroup_of(const Subgroup& o) const noexcept { return members_.is_subset_of(o.members_); }

  bool operator==(const Subgroup& o) const noexcept { return members_ == o.members_; }

 private:
  Bitset members_;
  std::size_t order_ = 0;
};

inline Subgroup trivial_subgroup(const GroupTable& G) {
  Bitset b(G.order());
  b.set(G.identity());
  return Subgroup(std::move(b));
}

inline Subgroup whole_group(const GroupTable& G) {
  Bitset b(G.order());
  b.set_all();
  return Subgroup(std::move(b));
}

namespace detail {

// Extends the already-closed set `members` (listed in `list`) by right
// multiplication with `gens` until closed. Stops early once `stop_at`
// elements are reached.
inline void close_under(const GroupTable& G, Bitset& members, std::vector<Element>& list,
                        std::span<const Element> gens, std::size_t start,
                        std::size_t stop_at = static_cast<std::size_t>(-1)) {
  for (std::size_t i = start; i < list.size(); ++i) {
    const Element x = list[i];
    for (Element g : gens) {
      const Element y = G.mul(x, g);
      if (members.insert(y)) {
        list.push_back(y);
        if (list.size() >= stop_at) return;
      }
    }
  }
}

}  // namespace detail

/// Smallest subgroup containing `seeds`.
inline Subgroup subgroup_closure(const GroupTable& G, std::span<const Element> seeds) {
  Bitset members(G.order());
  std::vector<Element> list{G.identity()};
  members.set(G.identity());
  std::vector<Element> gens;
  for (Element s : seeds)
    if (s != G.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  // Right-multiplying from the identity yields the generated monoid, which is
  // the generated subgroup in a finite group.
  for (Element g : gens)
    if (members.insert(g)) list.push_back(g);
  detail::close_under(G, members, list, gens, 0);
  return Subgroup(std::move(members));
}

inline Subgroup subgroup_closure(const GroupTable& G, std::initializer_list<Element> seeds) {
  return subgroup_closure(G, std::span<const Element>(seeds.begin(), seeds.size()));
}

inline Subgroup subgroup_closure(const GroupTable& G, const Bitset& seeds) {
  std::vector<Element> s;
  seeds.for_each([&](std::size_t i) { s.push_back(static_cast<Element>(i)); });
  return subgroup_closure(G, std::span<const Element>(s));
}

inline Subgroup cyclic_subgroup(const GroupTable& G, Element x) { return subgroup_closure(G, {x}); }

/// Join of two subgroups.
inline Subgroup join(const GroupTable& G, const Subgroup& a, const Subgroup& b) {
  return subgroup_closure(G, a.members() | b.members());
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.members() & b.members());
}

/// Whether `seeds` generate the whole group. Early exit once |G| is reached.
inline bool generates(const GroupTable& G, std::span<const Element> seeds) {
  const std::size_t n = G.order();
  if (n == 1) return true;
  Bitset members(n);
  std::vector<Element> list{G.identity()};
  list.reserve(n);
  members.set(G.identity());
  for (Element g : seeds)
    if (members.insert(g)) list.push_back(g);
  if (list.size() >= n) return true;
  detail::close_under(G, members, list, seeds, 0, n);
  return list.size() == n;
}

inline bool is_generating_pair(const GroupTable& G, Element x, Element y) {
  const Element s[2] = {x, y};
  return generates(G, s);
}

/// A short generating set found greedily in index order.
inline std::vector<Element> generators_of(const GroupTable& G, const Subgroup& H) {
  std::vector<Element> gens;
  Bitset members(G.order());
  std::vector<Element> list{G.identity()};
  members.set(G.identity());
  H.members().for_each([&](std::size_t i) {
    const auto x = static_cast<Element>(i);
    if (members.test(x)) return;
    gens.push_back(x);
    // Re-close: existing elements times the new generator, then everything.
    const std::size_t before = list.size();
    for (std::size_t j = 0; j < before; ++j) {
      const Element y = G.mul(list[j], x);
      if (members.insert(y)) list.push_back(y);
    }
    detail::close_under(G, members, list, gens, 0);
  });
  return gens;
}

inline std::vector<Element> generators_of(const GroupTable& G) {
  return generators_of(G, whole_group(G));
}

inline bool normalizes(const GroupTable& G, Element g, const Subgroup& H) {
  bool ok = true;
  H.members().for_each([&](std::size_t h) {
    if (ok && !H.contains(G.conj(static_cast<Element>(h), g))) ok = false;
  });
  return ok;
}

inline bool is_normal(const GroupTable& G, const Subgroup& H, std::span<const Element> group_gens) {
  for (Element g : group_gens)
    if (!normalizes(G, g, H)) return false;
  return true;
}

inline bool is_normal(const GroupTable& G, const Subgroup& H) {
  const auto gens = generators_of(G);
  return is_normal(G, H, gens);
}

inline Subgroup conjugate(const GroupTable& G, const Subgroup& H, Element g) {
  Bitset b(G.order());
  H.members().for_each([&](std::size_t h) { b.set(G.conj(static_cast<Element>(h), g)); });
  return Subgroup(std::move(b));
}

/// Checks closure, inverses and Lagrange for an arbitrary member set.
inline bool is_subgroup(const GroupTable& G, const Bitset& members) {
  if (!members.test(G.identity())) return false;
  bool ok = true;
  members.for_each([&](std::size_t a) {
    if (!ok) return;
    if (!members.test(G.inv(static_cast<Element>(a)))) ok = false;
    members.for_each([&](std::size_t b) {
      if (ok && !members.test(G.mul(static_cast<Element>(a), static_cast<Element>(b)))) ok = false;
    });
  });
  return ok && G.order() % members.count() == 0;
}

/// Symmetric n x n bit matrix: bit (x, y) set iff <x, y> = G.
///
/// <x, y> only depends on the cyclic subgroups <x> and <y>, so closures are
/// computed once per pair of cyclic subgroups and then expanded. Rows of the
/// reduced matrix are filled by independent workers.
class GenPairMatrix {
 public:
  GenPairMatrix() = default;

  static GenPairMatrix compute(const GroupTable& G, std::size_t workers = 1) {
    const std::size_t n = G.order();
    // class_of[x] = index of the cyclic subgroup <x>, numbered by first generator.
    std::vector<std::size_t> class_of(n, static_cast<std::size_t>(-1));
    std::vector<Element> reps;
    for (Element x = 0; x < n; ++x) {
      if (class_of[x] != static_cast<std::size_t>(-1)) continue;
      const std::size_t c = reps.size();
      reps.push_back(x);
      const std::size_t ord = G.element_order(x);
      Element p = x;
      for (std::size_t k = 1; k <= ord; ++k, p = G.mul(p, x))
        if (std::gcd(k, ord) == 1) class_of[p] = c;
    }
    const std::size_t m = reps.size();
    std::vector<Bitset> reduced(m, Bitset(m));
    parallel_for(m, workers, [&](std::size_t i) {
      for (std::size_t j = i; j < m; ++j)
        if (is_generating_pair(G, reps[i], reps[j])) reduced[i].set(j);
    });
    GenPairMatrix out;
    out.rows_.assign(n, Bitset(n));
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const std::size_t a = std::min(class_of[x], class_of[y]);
        const std::size_t b = std::max(class_of[x], class_of[y]);
        if (reduced[a].test(b)) out.rows_[x].set(y);
      }
    return out;
  }

  static GenPairMatrix from_rows(std::vector<Bitset> rows) {
    GenPairMatrix out;
    out.rows_ = std::move(rows);
    return out;
  }

  std::size_t order() const noexcept { return rows_.size(); }
  bool generates(Element x, Element y) const noexcept { return rows_[x].test(y); }
  const Bitset& row(Element x) const noexcept { return rows_[x]; }
  const std::vector<Bitset>& rows() const noexcept { return rows_; }

  bool operator==(const GenPairMatrix& o) const noexcept = default;

 private:
  std::vector<Bitset> rows_;
};

}  // namespace sigma
