#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "sigma/field.hpp"
#include "sigma/subgroup.hpp"

namespace sigma {

/// (V_1 x ... x V_t) ⋊ H with H = C_{m_1} (x C_{m_2}) acting on each V_j =
/// (F_{q_j}, +) by field scalars: the i-th generator of H multiplies V_j by
/// scalars[j][i].
struct ScalarSemidirectSpec {
  std::vector<std::size_t> h_orders;
  std::vector<std::size_t> field_sizes;
  std::vector<std::vector<std::size_t>> scalars;
  // Reject specs in which two V_j are H-isomorphic.
  bool require_distinct_modules = true;

  std::size_t h_order() const {
    return std::accumulate(h_orders.begin(), h_orders.end(), std::size_t{1}, std::multiplies<>{});
  }
  std::size_t order() const {
    return std::accumulate(field_sizes.begin(), field_sizes.end(), h_order(), std::multiplies<>{});
  }
};

struct SemidirectCoordinates {
  std::vector<std::size_t> v;  // one field element per V_j
  std::vector<std::size_t> h;  // exponent per H generator
};

struct ScalarSemidirectGroup {
  GroupTable table;
  ScalarSemidirectSpec spec;
  std::vector<FieldTable> fields;
  std::vector<SemidirectCoordinates> coords;  // indexed by element

  // α_j(h) for h given by exponents.
  std::size_t alpha(std::size_t j, const std::vector<std::size_t>& h) const {
    std::size_t r = FieldTable::one();
    for (std::size_t i = 0; i < h.size(); ++i) r = fields[j].mul(r, fields[j].pow(spec.scalars[j][i], h[i]));
    return r;
  }
};

namespace detail {

// Smallest subring of F containing 1 and the given scalars.
inline std::size_t generated_subring_size(const FieldTable& F, const std::vector<std::size_t>& scalars) {
  std::vector<char> in(F.size(), 0);
  std::vector<std::size_t> list{FieldTable::zero(), FieldTable::one()};
  in[0] = in[1] = 1;
  std::vector<std::size_t> gens{FieldTable::one()};
  gens.insert(gens.end(), scalars.begin(), scalars.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t c : {F.add(list[i], list[j]), F.mul(list[i], list[j])})
        if (!in[c]) {
          in[c] = 1;
          list.push_back(c);
        }
    }
    for (std::size_t s : gens) {
      const std::size_t c = F.mul(list[i], s);
      if (!in[c]) {
        in[c] = 1;
        list.push_back(c);
      }
    }
  }
  return list.size();
}

}  // namespace detail

/// One-dimensional modules F_q with scalars α and β are H-isomorphic iff q
/// agrees and some field automorphism carries α to β on every generator.
inline bool scalar_modules_isomorphic(const FieldTable& F1, const std::vector<std::size_t>& a1,
                                      const FieldTable& F2, const std::vector<std::size_t>& a2) {
  if (F1.size() != F2.size()) return false;
  std::vector<std::size_t> cur = a1;
  for (std::size_t k = 0; k < F1.degree(); ++k) {
    if (cur == a2) return true;
    for (auto& c : cur) c = F1.frobenius(c);
  }
  return false;
}

/// Validates the spec, throwing ValidationError naming the failed invariant.
inline std::vector<FieldTable> validate_spec(const ScalarSemidirectSpec& s, const Limits& limits = {}) {
  if (s.h_orders.empty() || s.h_orders.size() > 2)
    throw ValidationError("H must have rank 1 or 2");
  for (auto m : s.h_orders)
    if (m < 2) throw ValidationError("H generator orders must be at least 2");
  if (s.field_sizes.empty()) throw ValidationError("at least one module is required");
  if (s.scalars.size() != s.field_sizes.size())
    throw ValidationError("one scalar list per module is required");
  if (s.order() > limits.element_bound) throw BoundExceeded("element bound", s.order(), limits.element_bound);
  std::vector<FieldTable> fields;
  for (std::size_t j = 0; j < s.field_sizes.size(); ++j) {
    fields.push_back(FieldTable::make(s.field_sizes[j]));
    const auto& F = fields.back();
    if (s.scalars[j].size() != s.h_orders.size())
      throw ValidationError("module " + std::to_string(j) + ": one scalar per H generator is required");
    bool nontrivial = false;
    for (std::size_t i = 0; i < s.h_orders.size(); ++i) {
      const std::size_t a = s.scalars[j][i];
      if (a == 0 || a >= F.size())
        throw ValidationError("module " + std::to_string(j) + ": scalar must be a non-zero field element");
      if (s.h_orders[i] % F.mult_order(a) != 0)
        throw ValidationError("module " + std::to_string(j) +
                              ": scalar order does not divide the H generator order (not a homomorphism)");
      if (a != FieldTable::one()) nontrivial = true;
    }
    if (!nontrivial) throw ValidationError("module " + std::to_string(j) + ": action is trivial");
    if (detail::generated_subring_size(F, s.scalars[j]) != F.size())
      throw ValidationError("module " + std::to_string(j) + ": not irreducible (scalars lie in a proper subfield)");
  }
  if (s.require_distinct_modules)
    for (std::size_t j = 0; j < fields.size(); ++j)
      for (std::size_t k = j + 1; k < fields.size(); ++k)
        if (scalar_modules_isomorphic(fields[j], s.scalars[j], fields[k], s.scalars[k]))
          throw ValidationError("modules " + std::to_string(j) + " and " + std::to_string(k) +
                                " are H-isomorphic");
  return fields;
}

/// Builds the group. An element is written v·h with v in V_1 x ... x V_t and
/// h in H; conjugation h v h^-1 multiplies the j-th coordinate by α_j(h), so
///   (v, h)(v', h') = (v + α(h) v', h h').
/// Index layout: h varies fastest, then v_t, ..., v_1; index 0 is the identity.
inline ScalarSemidirectGroup scalar_semidirect(const ScalarSemidirectSpec& spec, const Limits& limits = {}) {
  auto fields = validate_spec(spec, limits);
  const std::size_t t = spec.field_sizes.size();
  const std::size_t hsz = spec.h_order();
  const std::size_t n = spec.order();

  std::vector<SemidirectCoordinates> coords(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t r = idx;
    auto& c = coords[idx];
    std::size_t hidx = r % hsz;
    r /= hsz;
    c.h.resize(spec.h_orders.size());
    for (std::size_t i = 0; i < spec.h_orders.size(); ++i) {
      c.h[i] = hidx % spec.h_orders[i];
      hidx /= spec.h_orders[i];
    }
    c.v.resize(t);
    for (std::size_t j = t; j-- > 0;) {
      c.v[j] = r % spec.field_sizes[j];
      r /= spec.field_sizes[j];
    }
  }
  auto index_of = [&](const SemidirectCoordinates& c) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < t; ++j) r = r * spec.field_sizes[j] + c.v[j];
    std::size_t hidx = 0;
    for (std::size_t i = spec.h_orders.size(); i-- > 0;) hidx = hidx * spec.h_orders[i] + c.h[i];
    return static_cast<Element>(r * hsz + hidx);
  };

  ScalarSemidirectGroup out{GroupTable{}, spec, fields, coords};
  std::vector<std::vector<std::size_t>> alpha_cache(hsz, std::vector<std::size_t>(t));
  for (std::size_t hidx = 0; hidx < hsz; ++hidx)
    for (std::size_t j = 0; j < t; ++j) alpha_cache[hidx][j] = out.alpha(j, coords[hidx].h);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& c : coords) {
    std::string s = "(";
    for (std::size_t j = 0; j < t; ++j) s += (j ? "," : "") + fields[j].to_string(c.v[j]);
    s += "|";
    for (std::size_t i = 0; i < c.h.size(); ++i) s += (i ? "," : "") + std::to_string(c.h[i]);
    labels.push_back(s + ")");
  }

  out.table = GroupTable::tabulate(
      n,
      [&](Element a, Element b) {
        const auto& ca = coords[a];
        const auto& cb = coords[b];
        SemidirectCoordinates c;
        c.v.resize(t);
        c.h.resize(ca.h.size());
        const auto& al = alpha_cache[a % hsz];
        for (std::size_t j = 0; j < t; ++j) c.v[j] = fields[j].add(ca.v[j], fields[j].mul(al[j], cb.v[j]));
        for (std::size_t i = 0; i < c.h.size(); ++i) c.h[i] = (ca.h[i] + cb.h[i]) % spec.h_orders[i];
        return index_of(c);
      },
      std::move(labels), "semidirect", limits);
  return out;
}

/// Generation test for two elements of a scalar semidirect product: they
/// generate iff their H-parts generate H and every matrix
///   [[1 - α_j(h1), 1 - α_j(h2)], [v1_j, v2_j]]
/// is non-singular over F_{q_j}.
inline bool corona_generation_test(const ScalarSemidirectGroup& S, Element g1, Element g2) {
  if (g1 >= S.coords.size() || g2 >= S.coords.size())
    throw PreconditionError("element is not part of the semidirect product");
  const auto& c1 = S.coords[g1];
  const auto& c2 = S.coords[g2];

  // Condition 1: <h1, h2> = H, by closure in Z_{m1} x Z_{m2}.
  const auto& m = S.spec.h_orders;
  const std::size_t hsz = S.spec.h_order();
  auto hindex = [&](const std::vector<std::size_t>& h) {
    std::size_t r = 0;
    for (std::size_t i = m.size(); i-- > 0;) r = r * m[i] + h[i];
    return r;
  };
  std::vector<char> seen(hsz, 0);
  std::vector<std::vector<std::size_t>> list{std::vector<std::size_t>(m.size(), 0)};
  seen[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (const auto* g : {&c1.h, &c2.h}) {
      auto s = list[i];
      for (std::size_t k = 0; k < m.size(); ++k) s[k] = (s[k] + (*g)[k]) % m[k];
      if (!seen[hindex(s)]) {
        seen[hindex(s)] = 1;
        list.push_back(std::move(s));
      }
    }
  if (list.size() != hsz) return false;

  // Condition 2: determinants.
  for (std::size_t j = 0; j < S.fields.size(); ++j) {
    const auto& F = S.fields[j];
    const std::size_t a1 = F.sub(FieldTable::one(), S.alpha(j, c1.h));
    const std::size_t a2 = F.sub(FieldTable::one(), S.alpha(j, c2.h));
    const std::size_t det = F.sub(F.mul(a1, c2.v[j]), F.mul(a2, c1.v[j]));
    if (det == FieldTable::zero()) return false;
  }
  return true;
}

inline bool corona_generation_test(const GroupTable& G, const ScalarSemidirectGroup& S, Element g1,
                                   Element g2) {
  if (!G.same_table(S.table)) throw PreconditionError("group was not built by scalar_semidirect");
  return corona_generation_test(S, g1, g2);
}

}  // namespace sigma
