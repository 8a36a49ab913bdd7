#pragma once

#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sigma/field.hpp"
#include "sigma/group.hpp"

namespace sigma {

namespace detail {

inline std::size_t product_of(const std::vector<std::size_t>& v) {
  std::size_t r = 1;
  for (auto x : v) r *= x;
  return r;
}

// Closure of `gens` under `mul`, numbered breadth-first from `id`.
template <typename Key, typename Mul, typename Label>
GroupTable closure_table(const Key& id, const std::vector<Key>& gens, Mul&& mul, Label&& label,
                         std::string provenance, const Limits& limits) {
  std::vector<Key> elems{id};
  std::map<Key, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Key k = mul(elems[i], g);
      if (index.emplace(k, static_cast<Element>(elems.size())).second) {
        if (elems.size() + 1 > limits.element_bound)
          throw BoundExceeded("element bound", elems.size() + 1, limits.element_bound);
        elems.push_back(std::move(k));
      }
    }
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(label(e));
  return GroupTable::tabulate(
      elems.size(), [&](Element a, Element b) { return index.at(mul(elems[a], elems[b])); },
      std::move(labels), std::move(provenance), limits);
}

}  // namespace detail

inline GroupTable cyclic(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : k == 1 ? "a" : "a^" + std::to_string(k));
  return GroupTable::tabulate(
      n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, std::move(labels),
      "C" + std::to_string(n), limits);
}

/// Dihedral group of order 2n: r^i s^j at index i + n*j, with s r s = r^-1.
inline GroupTable dihedral(std::size_t n, const Limits& limits = {}) {
  if (n == 0) throw ValidationError("dihedral parameter must be positive");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string s = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      if (j) s += "s";
      labels.push_back(s.empty() ? "1" : s);
    }
  return GroupTable::tabulate(
      2 * n,
      [n](Element a, Element b) {
        const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
        const std::size_t e = j ? (i + n - k) % n : (i + k) % n;
        return static_cast<Element>(e + n * ((j + l) % 2));
      },
      std::move(labels), "D" + std::to_string(n), limits);
}

/// Dicyclic group of order 4n: a^i x^j with x^2 = a^n and x a x^-1 = a^-1.
inline GroupTable dicyclic(std::size_t n, const Limits& limits = {}) {
  if (n < 1) throw ValidationError("dicyclic parameter must be positive");
  const std::size_t m = 2 * n;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      std::string s = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
      if (j) s += "x";
      labels.push_back(s.empty() ? "1" : s);
    }
  return GroupTable::tabulate(
      2 * m,
      [m, n](Element a, Element b) {
        const std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
        if (!j) return static_cast<Element>((i + k) % m + m * l);
        const std::size_t e = (i + m - k) % m;
        if (!l) return static_cast<Element>(e + m);
        return static_cast<Element>((e + n) % m);
      },
      std::move(labels), "Dic" + std::to_string(n), limits);
}

inline GroupTable quaternion8(const Limits& limits = {}) {
  auto q = dicyclic(2, limits);
  // a = i, x = j: relabel in the usual notation.
  std::vector<std::string> labels{"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  return GroupTable::tabulate(
      8, [&](Element a, Element b) { return q.mul(a, b); }, std::move(labels), "Q8", limits);
}

/// Direct product with index a * |B| + b.
inline GroupTable direct_product(const GroupTable& A, const GroupTable& B, const Limits& limits = {}) {
  const std::size_t na = A.order(), nb = B.order();
  if (na * nb > limits.element_bound) throw BoundExceeded("element bound", na * nb, limits.element_bound);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      labels.push_back("(" + A.label(static_cast<Element>(a)) + "," + B.label(static_cast<Element>(b)) + ")");
  return GroupTable::tabulate(
      na * nb,
      [&](Element x, Element y) {
        return static_cast<Element>(A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb));
      },
      std::move(labels), A.provenance() + "x" + B.provenance(), limits);
}

/// C_{k1} x C_{k2} x ..., mixed radix with the last factor fastest.
inline GroupTable abelian(const std::vector<std::size_t>& factors, const Limits& limits = {}) {
  if (factors.empty()) return cyclic(1, limits);
  for (auto f : factors)
    if (f == 0) throw ValidationError("invariant factors must be positive");
  const std::size_t n = detail::product_of(factors);
  if (n > limits.element_bound) throw BoundExceeded("element bound", n, limits.element_bound);
  auto split = [&](std::size_t x) {
    std::vector<std::size_t> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = x % factors[i];
      x /= factors[i];
    }
    return c;
  };
  std::vector<std::string> labels;
  std::string prov;
  for (std::size_t i = 0; i < factors.size(); ++i) prov += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
  for (std::size_t x = 0; x < n; ++x) {
    const auto c = split(x);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    labels.push_back(s + ")");
  }
  return GroupTable::tabulate(
      n,
      [&](Element a, Element b) {
        const auto ca = split(a), cb = split(b);
        std::size_t r = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) r = r * factors[i] + (ca[i] + cb[i]) % factors[i];
        return static_cast<Element>(r);
      },
      std::move(labels), prov, limits);
}

inline GroupTable sym(std::size_t n, const Limits& limits = {}) {
  if (n < 1 || n > 5) throw ValidationError("sym(n) supports 1 <= n <= 5");
  PermSpec spec{n, {}};
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  if (n == 1) {
    spec.generators.push_back(id);
  } else {
    auto t = id;
    std::swap(t[0], t[1]);
    auto c = id;
    for (std::size_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    spec.generators = {t, c};
  }
  return build_from_permutations(spec, limits, "S" + std::to_string(n));
}

inline GroupTable alt(std::size_t n, const Limits& limits = {}) {
  if (n < 1 || n > 6) throw ValidationError("alt(n) supports 1 <= n <= 6");
  PermSpec spec{n, {}};
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  if (n < 3) {
    spec.generators.push_back(id);
  } else {
    // 3-cycles (0 1 k) generate A_n.
    for (std::size_t k = 2; k < n; ++k) {
      auto c = id;
      c[0] = 1;
      c[1] = k;
      c[k] = 0;
      spec.generators.push_back(c);
    }
  }
  return build_from_permutations(spec, limits, "A" + std::to_string(n));
}

/// SL(2, q), or PSL(2, q) when `projective`, generated by the elementary
/// matrices [[1, a], [0, 1]] and [[1, 0], [a, 1]] for a = 1 and a primitive
/// polynomial-basis element.
inline GroupTable special_linear2(std::size_t q, bool projective, const Limits& limits = {}) {
  const FieldTable F = FieldTable::make(q);
  using M = std::array<std::size_t, 4>;
  auto normalize = [&](M m) {
    if (!projective) return m;
    M neg{F.neg(m[0]), F.neg(m[1]), F.neg(m[2]), F.neg(m[3])};
    return std::min(m, neg);
  };
  auto mul = [&](const M& a, const M& b) {
    return normalize(M{F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
                       F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))});
  };
  std::vector<M> gens{normalize(M{1, 1, 0, 1}), normalize(M{1, 0, 1, 1})};
  if (F.degree() > 1) {
    const std::size_t x = F.characteristic();
    gens.push_back(normalize(M{1, x, 0, 1}));
    gens.push_back(normalize(M{1, 0, x, 1}));
  }
  auto label = [&](const M& m) {
    return "[" + F.to_string(m[0]) + " " + F.to_string(m[1]) + ";" + F.to_string(m[2]) + " " +
           F.to_string(m[3]) + "]";
  };
  return detail::closure_table(normalize(M{1, 0, 0, 1}), gens, mul, label,
                               (projective ? "PSL(2," : "SL(2,") + std::to_string(q) + ")", limits);
}

}  // namespace sigma
