#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma/module.hpp"
#include "sigma/quotient.hpp"

namespace sigma {

enum class CaseTag {
  Cyclic,
  PGroup,
  Case3,
  Case4,
  ConnectedNilpotent,
  ConnectedSoluble,
  Connected,
  Inconclusive,
};

enum class IsolatedReason { CyclicGenerators, KleinFour, DihedralP, None };

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Cyclic: return "Cyclic";
    case CaseTag::PGroup: return "PGroup";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
    case CaseTag::ConnectedNilpotent: return "ConnectedNilpotent";
    case CaseTag::ConnectedSoluble: return "ConnectedSoluble";
    case CaseTag::Connected: return "Connected";
    case CaseTag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

inline const char* to_string(IsolatedReason r) {
  switch (r) {
    case IsolatedReason::CyclicGenerators: return "CyclicGenerators";
    case IsolatedReason::KleinFour: return "KleinFour";
    case IsolatedReason::DihedralP: return "DihedralP";
    case IsolatedReason::None: return "None";
  }
  return "?";
}

/// G/Φ(G) ≅ W ⋊ H with W the product of the non-central minimal normal
/// subgroups V_1..V_t. All subgroups live in `quotient.target`.
struct FrattiniQuotientDecomposition {
  QuotientMap quotient;
  Subgroup W;
  Subgroup H;
  std::vector<Subgroup> V;
  std::vector<Subgroup> kernels;  // C_H(V_j)
  Subgroup centralizer_of_W;      // C_H(W)
};

/// Either a decomposition or the first condition that failed.
struct DecompositionResult {
  std::optional<FrattiniQuotientDecomposition> decomposition;
  std::string refusal;
};

struct Verdict {
  CaseTag tag = CaseTag::Inconclusive;
  std::optional<std::size_t> p;
  std::optional<std::size_t> t;
  bool predicted_connected = false;
  std::optional<std::size_t> diameter_bound;
  bool diameter_exact = false;
  IsolatedReason isolated = IsolatedReason::None;
  std::vector<CaseTag> applicable;  // every tag that applies; `tag` is the first
  std::optional<FrattiniQuotientDecomposition> evidence;
  std::string note;

  bool conclusive() const noexcept { return tag != CaseTag::Inconclusive; }
};

inline Subgroup centralizer_in(const GroupTable& G, const Subgroup& H, const Subgroup& S) {
  return intersection(H, centralizer(G, S));
}

/// Splits a Frattini-free group Q as W ⋊ H. `reverse_search` walks the
/// lattice backwards when looking for the complement (the conditions tested
/// do not depend on which complement is picked).
inline DecompositionResult decompose_frattini_quotient(QuotientMap fq, const SubgroupList& lattice,
                                                       bool reverse_search = false) {
  const GroupTable& Q = fq.target;
  if (frattini(Q, lattice).order() != 1) throw PreconditionError("Frattini subgroup of Q is not trivial");

  DecompositionResult res;
  const Subgroup Z = center(Q);
  std::vector<Subgroup> noncentral;
  for (auto& N : minimal_normal_subgroups(Q, lattice)) {
    if (N.is_subgroup_of(Z)) continue;
    if (!elementary_abelian_prime(Q, N)) {
      res.refusal = "non-abelian minimal normal subgroup";
      return res;
    }
    noncentral.push_back(std::move(N));
  }
  if (noncentral.empty()) {
    res.refusal = "every minimal normal subgroup is central (t = 0)";
    return res;
  }
  Bitset wseed(Q.order());
  std::size_t product = 1;
  for (const auto& V : noncentral) {
    wseed |= V.members();
    product *= V.order();
  }
  Subgroup W = subgroup_closure(Q, wseed);
  if (W.order() != product) {
    res.refusal = "non-central minimal normal subgroups do not form a direct product";
    return res;
  }

  const std::size_t want = Q.order() / W.order();
  std::optional<Subgroup> H;
  auto consider = [&](const Subgroup& K) {
    if (!H && K.order() == want && intersection(K, W).order() == 1) H = K;
  };
  if (reverse_search)
    for (auto it = lattice.rbegin(); it != lattice.rend(); ++it) consider(*it);
  else
    for (const auto& K : lattice) consider(K);
  if (!H) {
    res.refusal = "W has no complement";
    return res;
  }
  if (!is_abelian(Q, *H)) {
    res.refusal = "complement of W is not abelian";
    return res;
  }
  for (std::size_t i = 0; i < noncentral.size(); ++i)
    for (std::size_t j = i + 1; j < noncentral.size(); ++j)
      if (h_module_isomorphic(Q, noncentral[i], noncentral[j], *H)) {
        res.refusal = "modules V" + std::to_string(i + 1) + " and V" + std::to_string(j + 1) + " are H-isomorphic";
        return res;
      }

  FrattiniQuotientDecomposition d{std::move(fq), W, *H, noncentral, {}, Subgroup{}};
  for (const auto& V : d.V) d.kernels.push_back(centralizer_in(d.quotient.target, d.H, V));
  d.centralizer_of_W = centralizer_in(d.quotient.target, d.H, d.W);
  res.decomposition = std::move(d);
  return res;
}

inline DecompositionResult decompose_frattini_quotient(QuotientMap fq, const Limits& limits = {},
                                                       bool reverse_search = false) {
  const auto lattice = all_subgroups(fq.target, limits);
  return decompose_frattini_quotient(std::move(fq), lattice, reverse_search);
}

/// Re-checks a decomposition from scratch. Returns the first violated
/// invariant, or an empty string.
inline std::string validate_decomposition(const FrattiniQuotientDecomposition& d, const Limits& limits = {}) {
  const GroupTable& Q = d.quotient.target;
  if (intersection(d.W, d.H).order() != 1) return "W and H intersect";
  if (d.W.order() * d.H.order() != Q.order()) return "|W||H| != |Q|";
  Bitset seed = d.W.members() | d.H.members();
  if (subgroup_closure(Q, seed).order() != Q.order()) return "WH != Q";
  std::size_t product = 1;
  Bitset vseed(Q.order());
  const auto minimal = minimal_normal_subgroups(Q, all_subgroups(Q, limits));
  const Subgroup Z = center(Q);
  for (const auto& V : d.V) {
    product *= V.order();
    vseed |= V.members();
    if (std::find(minimal.begin(), minimal.end(), V) == minimal.end()) return "V_j not minimal normal";
    if (V.is_subgroup_of(Z)) return "V_j is central";
  }
  if (product != d.W.order() || !(subgroup_closure(Q, vseed) == d.W)) return "W is not the direct product of the V_j";
  if (!is_abelian(Q, d.H)) return "H is not abelian";
  for (std::size_t j = 0; j < d.V.size(); ++j)
    if (!(d.kernels[j] == centralizer_in(Q, d.H, d.V[j]))) return "kernel mismatch";
  return {};
}

inline IsolatedReason predict_isolated(const GroupTable& G) {
  const std::size_t n = G.order();
  if (is_cyclic(G)) return IsolatedReason::CyclicGenerators;
  if (n == 4) return IsolatedReason::KleinFour;  // the only non-cyclic group of order 4
  if (n % 2 == 0 && n / 2 > 2 && is_prime(n / 2)) {
    const std::size_t p = n / 2;
    for (Element r = 0; r < n; ++r) {
      if (G.element_order(r) != p) continue;
      for (Element s = 0; s < n; ++s)
        if (G.element_order(s) == 2 && G.conj(r, s) == G.inv(r)) return IsolatedReason::DihedralP;
    }
  }
  return IsolatedReason::None;
}

/// 3 if exactly one Sylow subgroup is non-cyclic, otherwise 2.
inline std::size_t nilpotent_diameter(const GroupTable& G) {
  if (!is_nilpotent(G) || is_cyclic(G) || is_p_group(G))
    throw PreconditionError("needs a nilpotent group that is neither cyclic nor a p-group");
  std::size_t noncyclic = 0;
  for (std::size_t p : prime_factors(G.order())) {
    const Subgroup P = sylow_subgroup(G, p);
    bool cyc = false;
    P.members().for_each([&](std::size_t x) {
      if (G.element_order(static_cast<Element>(x)) == P.order()) cyc = true;
    });
    if (!cyc) ++noncyclic;
  }
  return noncyclic == 1 ? 3 : 2;
}

struct PrimitiveSolubleVerdict {
  bool connected = false;
  std::optional<std::size_t> diameter_bound;
  Subgroup socle;
  Subgroup complement;  // a core-free maximal subgroup
};

/// Connectivity of Σ(G) for a primitive soluble group G: disconnected iff G
/// is of prime order or G/soc(G) is.
inline PrimitiveSolubleVerdict primitive_soluble_verdict(const GroupTable& G, const SubgroupList& lattice) {
  if (!is_soluble(G)) throw PreconditionError("group is not soluble");
  const auto minimal = minimal_normal_subgroups(G, lattice);
  if (minimal.size() != 1) throw PreconditionError("group is not monolithic");
  const Subgroup& N = minimal.front();
  std::optional<Subgroup> M;
  for (const auto& K : maximal_subgroups(G, lattice))
    if (!N.is_subgroup_of(K)) {
      M = K;
      break;
    }
  if (!M) throw PreconditionError("no core-free maximal subgroup");
  PrimitiveSolubleVerdict v{false, std::nullopt, N, *M};
  const bool disconnected = is_prime(G.order()) || is_prime(G.order() / N.order());
  v.connected = !disconnected;
  if (v.connected) v.diameter_bound = 3;
  return v;
}

inline PrimitiveSolubleVerdict primitive_soluble_verdict(const GroupTable& G, const Limits& limits = {}) {
  return primitive_soluble_verdict(G, all_subgroups(G, limits));
}

/// Predicts connectivity and diameter of Σ(G) from the structure of G alone.
inline Verdict classify(const GroupTable& G, const Limits& limits = {}, bool reverse_search = false) {
  if (G.order() <= 1) throw PreconditionError("trivial group is not a valid input");
  if (!is_two_generated(G)) throw NotTwoGenerated();

  Verdict v;
  v.isolated = predict_isolated(G);
  const bool cyclic = is_cyclic(G);
  const auto p = is_p_group(G);
  if (cyclic) v.applicable.push_back(CaseTag::Cyclic);
  if (p) v.applicable.push_back(CaseTag::PGroup);

  if (cyclic || p) {
    v.tag = cyclic ? CaseTag::Cyclic : CaseTag::PGroup;
    if (!cyclic) v.p = p;
    v.predicted_connected = false;
    return v;
  }
  if (is_nilpotent(G)) {
    v.tag = CaseTag::ConnectedNilpotent;
    v.applicable.push_back(v.tag);
    v.predicted_connected = true;
    v.diameter_bound = nilpotent_diameter(G);
    v.diameter_exact = true;
    return v;
  }
  if (!is_soluble(G)) {
    v.tag = CaseTag::Connected;
    v.applicable.push_back(v.tag);
    v.predicted_connected = true;
    v.diameter_bound = 5;
    return v;
  }

  DecompositionResult dec;
  try {
    const auto lattice = all_subgroups(G, limits);
    const Subgroup phi = frattini(G, lattice);
    auto fq = quotient(G, phi, limits);
    // G/1 keeps the element order, so the lattice carries over.
    dec = phi.order() == 1 ? decompose_frattini_quotient(std::move(fq), lattice, reverse_search)
                           : decompose_frattini_quotient(std::move(fq), limits, reverse_search);
  } catch (const BoundExceeded& e) {
    v.tag = CaseTag::Inconclusive;
    v.applicable.push_back(v.tag);
    v.note = std::string("decomposition inconclusive: ") + e.what();
    return v;
  }

  v.predicted_connected = true;
  v.diameter_bound = 3;
  if (dec.decomposition) {
    const auto& d = *dec.decomposition;
    const std::size_t h = d.H.order();
    const auto primes = prime_factors(h);
    const bool h_cyclic_prime = is_prime(h);
    const bool h_elementary_p2 = primes.size() == 1 && h == primes[0] * primes[0] &&
                                 elementary_abelian_prime(d.quotient.target, d.H).has_value();
    if (h_cyclic_prime) {
      v.tag = CaseTag::Case3;
      v.p = h;
      v.t = d.V.size();
      v.predicted_connected = false;
      v.diameter_bound.reset();
    } else if (h_elementary_p2 && d.centralizer_of_W.order() == primes[0]) {
      v.tag = CaseTag::Case4;
      v.p = primes[0];
      v.t = d.V.size();
      v.predicted_connected = false;
      v.diameter_bound.reset();
    } else if (h_elementary_p2 && d.centralizer_of_W.order() == 1) {
      v.diameter_bound = 2;
    }
    v.evidence = std::move(dec.decomposition);
  } else {
    v.note = dec.refusal;
  }
  if (v.predicted_connected) v.tag = CaseTag::ConnectedSoluble;
  v.applicable.push_back(v.tag);
  return v;
}

}  // namespace sigma
