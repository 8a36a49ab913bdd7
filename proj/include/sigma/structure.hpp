#pragma once

#include <optional>
#include <vector>

#include "sigma/lattice.hpp"

namespace sigma {

inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// p-part of n.
inline std::size_t prime_power_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// [A, B], generated by all a^-1 b^-1 a b.
inline Subgroup commutator_subgroup(const GroupTable& G, const Subgroup& A, const Subgroup& B) {
  Bitset comms(G.order());
  comms.set(G.identity());
  A.members().for_each([&](std::size_t a) {
    B.members().for_each([&](std::size_t b) {
      comms.set(G.commutator(static_cast<Element>(a), static_cast<Element>(b)));
    });
  });
  return subgroup_closure(G, comms);
}

inline Subgroup derived_subgroup(const GroupTable& G) {
  const auto all = whole_group(G);
  return commutator_subgroup(G, all, all);
}

inline Subgroup centralizer(const GroupTable& G, const Subgroup& S) {
  const auto gens = generators_of(G, S);
  Bitset c(G.order());
  for (Element x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Element s : gens)
      if (G.mul(x, s) != G.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return Subgroup(std::move(c));
}

inline Subgroup center(const GroupTable& G) { return centralizer(G, whole_group(G)); }

inline bool is_cyclic(const GroupTable& G) {
  for (Element x = 0; x < G.order(); ++x)
    if (G.element_order(x) == G.order()) return true;
  return false;
}

/// The prime p if |G| is a power of p (|G| > 1).
inline std::optional<std::size_t> is_p_group(const GroupTable& G) {
  const auto ps = prime_factors(G.order());
  if (ps.size() == 1) return ps.front();
  return std::nullopt;
}

inline bool is_nilpotent(const GroupTable& G) {
  const auto all = whole_group(G);
  Subgroup term = all;
  while (term.order() > 1) {
    Subgroup next = commutator_subgroup(G, term, all);
    if (next.order() == term.order()) return false;
    term = std::move(next);
  }
  return true;
}

inline bool is_soluble(const GroupTable& G) {
  Subgroup term = whole_group(G);
  while (term.order() > 1) {
    Subgroup next = commutator_subgroup(G, term, term);
    if (next.order() == term.order()) return false;
    term = std::move(next);
  }
  return true;
}

/// H as a group in its own right, elements renumbered in index order.
inline GroupTable subgroup_table(const GroupTable& G, const Subgroup& H, const Limits& limits = {}) {
  const auto elems = H.elements();
  std::vector<Element> pos(G.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Element>(i);
  std::vector<std::string> labels;
  for (Element e : elems) labels.push_back(G.label(e));
  return GroupTable::tabulate(
      elems.size(), [&](Element a, Element b) { return pos[G.mul(elems[a], elems[b])]; }, std::move(labels),
      G.provenance() + " subgroup", limits);
}

/// Subgroup-level helpers for abelian / elementary abelian checks.
inline bool is_abelian(const GroupTable& G, const Subgroup& H) {
  const auto gens = generators_of(G, H);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

inline std::optional<std::size_t> elementary_abelian_prime(const GroupTable& G, const Subgroup& H) {
  if (H.order() < 2 || !is_abelian(G, H)) return std::nullopt;
  const auto ps = prime_factors(H.order());
  if (ps.size() != 1) return std::nullopt;
  bool ok = true;
  H.members().for_each([&](std::size_t x) {
    if (x != G.identity() && G.element_order(static_cast<Element>(x)) != ps.front()) ok = false;
  });
  return ok ? std::optional<std::size_t>(ps.front()) : std::nullopt;
}

inline bool is_two_generated(const GroupTable& G) {
  if (is_cyclic(G)) return true;
  const auto reps = cyclic_subgroup_representatives(G);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (is_generating_pair(G, reps[i], reps[j])) return true;
  return false;
}

/// A Sylow p-subgroup, grown greedily: keep adjoining p-elements while the
/// closure stays a p-group. A fixed point of this process is Sylow (a proper
/// p-subgroup of a Sylow subgroup has a strictly larger normalizer in it).
inline Subgroup sylow_subgroup(const GroupTable& G, std::size_t p) {
  const std::size_t target = prime_power_part(G.order(), p);
  Subgroup P = trivial_subgroup(G);
  bool grew = true;
  while (grew && P.order() < target) {
    grew = false;
    for (Element x = 0; x < G.order(); ++x) {
      if (P.contains(x) || prime_power_part(G.element_order(x), p) != G.element_order(x)) continue;
      Bitset seeds = P.members();
      seeds.set(x);
      Subgroup K = subgroup_closure(G, seeds);
      if (prime_power_part(K.order(), p) == K.order()) {
        P = std::move(K);
        grew = true;
        if (P.order() == target) break;
      }
    }
  }
  if (P.order() != target)
    throw InternalInconsistency("greedy Sylow search stopped at order " + std::to_string(P.order()) +
                                ", expected " + std::to_string(target));
  return P;
}

/// O_p(G): intersection of all conjugates of a Sylow p-subgroup.
inline Subgroup p_core(const GroupTable& G, std::size_t p) {
  const Subgroup P = sylow_subgroup(G, p);
  Bitset acc = P.members();
  for (Element g = 0; g < G.order(); ++g) {
    const Subgroup Q = conjugate(G, P, g);
    if (Q.order() != P.order()) throw InternalInconsistency("conjugate Sylow subgroup changed order");
    acc &= Q.members();
  }
  return Subgroup(std::move(acc));
}

/// Product of the p-cores over the primes dividing |G|.
inline Subgroup fitting(const GroupTable& G) {
  Bitset acc(G.order());
  acc.set(G.identity());
  for (std::size_t p : prime_factors(G.order())) acc |= p_core(G, p).members();
  return subgroup_closure(G, acc);
}

}  // namespace sigma
