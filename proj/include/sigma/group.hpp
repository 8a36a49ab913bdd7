#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigma/errors.hpp"
#include "sigma/hash.hpp"
#include "sigma/limits.hpp"

namespace sigma {

using Element = std::uint32_t;

/// A finite group given by its full Cayley table.
///
/// Elements are the indices 0..order()-1. The table is immutable once built
/// and every constructor validates the group axioms (associativity only up to
/// Limits::associativity_check_bound, since it is cubic).
class GroupTable {
 public:
  static constexpr std::size_t max_order = 65535;

  GroupTable() = default;

  /// Builds a table from a product function `mul(a, b)` on 0..n-1.
  template <typename Mul>
  static GroupTable tabulate(std::size_t n, Mul&& mul, std::vector<std::string> labels = {},
                             std::string provenance = {}, const Limits& limits = {}) {
    check_order(n, limits);
    std::vector<std::uint16_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto c = static_cast<std::size_t>(mul(static_cast<Element>(a), static_cast<Element>(b)));
        if (c >= n) throw ValidationError("product out of range at (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
        table[a * n + b] = static_cast<std::uint16_t>(c);
      }
    return GroupTable(n, std::move(table), std::move(labels), std::move(provenance), limits);
  }

  /// Builds a table from explicit rows.
  static GroupTable from_rows(const std::vector<std::vector<Element>>& rows,
                              std::vector<std::string> labels = {}, std::string provenance = {},
                              const Limits& limits = {}) {
    const std::size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n) throw ValidationError("multiplication table is not square");
    return tabulate(n, [&](Element a, Element b) { return rows[a][b]; }, std::move(labels),
                    std::move(provenance), limits);
  }

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  // g^-1 x g
  Element conj(Element x, Element g) const noexcept { return mul(mul(inv(g), x), g); }
  // a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element pow(Element x, long long k) const noexcept {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    Element r = identity_;
    Element b = x;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }
  std::size_t element_order(Element x) const noexcept { return orders_[x]; }

  const std::string& label(Element x) const noexcept { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& provenance() const noexcept { return provenance_; }

  std::span<const std::uint16_t> row(Element a) const noexcept {
    return {table_.data() + std::size_t{a} * n_, n_};
  }

  bool is_abelian() const noexcept {
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Bit-exact serialization: "SGT1", u32 order, u32 identity, then the
  /// row-major table as little-endian u16.
  std::vector<unsigned char> serialize() const {
    std::vector<unsigned char> out;
    out.reserve(12 + 2 * table_.size());
    out.insert(out.end(), {'S', 'G', 'T', '1'});
    put_u32(out, static_cast<std::uint32_t>(n_));
    put_u32(out, identity_);
    for (auto v : table_) {
      out.push_back(static_cast<unsigned char>(v & 0xFF));
      out.push_back(static_cast<unsigned char>(v >> 8));
    }
    return out;
  }

  static GroupTable deserialize(std::span<const unsigned char> bytes, const Limits& limits = {}) {
    if (bytes.size() < 12 || bytes[0] != 'S' || bytes[1] != 'G' || bytes[2] != 'T' || bytes[3] != '1')
      throw ValidationError("not a serialized group table");
    const std::size_t n = get_u32(bytes, 4);
    const Element id = get_u32(bytes, 8);
    if (bytes.size() != 12 + 2 * n * n) throw ValidationError("serialized table has wrong length");
    auto t = tabulate(
        n,
        [&](Element a, Element b) {
          const std::size_t off = 12 + 2 * (std::size_t{a} * n + b);
          return static_cast<Element>(bytes[off] | (bytes[off + 1] << 8));
        },
        {}, "deserialized", limits);
    if (t.identity() != id) throw ValidationError("serialized identity does not match table");
    return t;
  }

  /// Content hash of serialize(); the cache key.
  std::string content_hash() const {
    const auto bytes = serialize();
    return to_hex(fnv1a64(bytes));
  }

  bool same_table(const GroupTable& o) const noexcept {
    return n_ == o.n_ && identity_ == o.identity_ && table_ == o.table_;
  }

  /// Re-runs the full axiom check (used by the property suites).
  void validate(const Limits& limits = {}) const {
    GroupTable copy = *this;
    copy.check_axioms(limits);
  }

 private:
  GroupTable(std::size_t n, std::vector<std::uint16_t> table, std::vector<std::string> labels,
             std::string provenance, const Limits& limits)
      : n_(n), table_(std::move(table)), labels_(std::move(labels)), provenance_(std::move(provenance)) {
    if (n_ == 0) throw ValidationError("group must have at least one element");
    if (!labels_.empty() && labels_.size() != n_)
      throw ValidationError("label count does not match order");
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (std::size_t i = 0; i < n_; ++i) labels_.push_back("g" + std::to_string(i));
    }
    check_axioms(limits);
  }

  static void check_order(std::size_t n, const Limits& limits) {
    if (n > max_order) throw BoundExceeded("table order", n, max_order);
    if (n > limits.element_bound) throw BoundExceeded("element bound", n, limits.element_bound);
  }

  void check_axioms(const Limits& limits) {
    // Latin square.
    std::vector<char> seen(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n_; ++b) {
        auto& s = seen[table_[a * n_ + b]];
        if (s) throw ValidationError("row " + std::to_string(a) + " is not a permutation");
        s = 1;
      }
    }
    for (std::size_t b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < n_; ++a) {
        auto& s = seen[table_[a * n_ + b]];
        if (s) throw ValidationError("column " + std::to_string(b) + " is not a permutation");
        s = 1;
      }
    }
    // Identity: in a Latin square the element e with e*e = e is the only candidate.
    bool found = false;
    for (std::size_t e = 0; e < n_ && !found; ++e) {
      if (table_[e * n_ + e] != e) continue;
      bool ok = true;
      for (std::size_t x = 0; x < n_ && ok; ++x)
        ok = table_[e * n_ + x] == x && table_[x * n_ + e] == x;
      if (ok) {
        identity_ = static_cast<Element>(e);
        found = true;
      }
    }
    if (!found) throw ValidationError("no two-sided identity");
    inv_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      bool ok = false;
      for (std::size_t y = 0; y < n_; ++y)
        if (table_[x * n_ + y] == identity_) {
          if (table_[y * n_ + x] != identity_)
            throw ValidationError("left and right inverses differ for " + std::to_string(x));
          inv_[x] = static_cast<Element>(y);
          ok = true;
          break;
        }
      if (!ok) throw ValidationError("no inverse for " + std::to_string(x));
    }
    if (n_ <= limits.associativity_check_bound) {
      for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) {
          const std::size_t xy = table_[x * n_ + y];
          for (std::size_t z = 0; z < n_; ++z)
            if (table_[xy * n_ + z] != table_[x * n_ + table_[y * n_ + z]])
              throw ValidationError("associativity fails at (" + std::to_string(x) + "," +
                                    std::to_string(y) + "," + std::to_string(z) + ")");
        }
    }
    orders_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      std::size_t k = 1;
      Element p = static_cast<Element>(x);
      while (p != identity_) {
        p = table_[p * n_ + x];
        ++k;
      }
      orders_[x] = k;
    }
  }

  static void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
  }
  static std::uint32_t get_u32(std::span<const unsigned char> b, std::size_t off) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[off + static_cast<std::size_t>(i)]} << (8 * i);
    return v;
  }

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> labels_;
  std::string provenance_;
};

/// Permutation generators on 0..degree-1, each given by its image array.
struct PermSpec {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> generators;
};

using Permutation = std::vector<std::uint16_t>;

inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {
struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
}  // namespace detail

/// Closure of a set of permutations, elements numbered breadth-first from the
/// identity with generators applied in the given order. Products compose left
/// to right: (xy)(k) = y(x(k)).
inline GroupTable build_from_permutations(const PermSpec& spec, const Limits& limits = {},
                                          std::string provenance = "perm") {
  if (spec.generators.empty()) throw ValidationError("at least one generator is required");
  if (spec.degree == 0) throw ValidationError("degree must be positive");
  if (spec.degree > 0xFFFF) throw ValidationError("degree too large");
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const auto& img = spec.generators[g];
    if (img.size() != spec.degree)
      throw ValidationError("generator " + std::to_string(g) + " has length " +
                            std::to_string(img.size()) + ", expected " + std::to_string(spec.degree));
    std::vector<char> hit(spec.degree, 0);
    Permutation p(spec.degree);
    for (std::size_t i = 0; i < spec.degree; ++i) {
      if (img[i] >= spec.degree || hit[img[i]])
        throw ValidationError("generator " + std::to_string(g) + " is not a bijection");
      hit[img[i]] = 1;
      p[i] = static_cast<std::uint16_t>(img[i]);
    }
    gens.push_back(std::move(p));
  }

  Permutation id(spec.degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Element, detail::PermHash> index{{id, 0}};
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  // right[x * k + g] = x * gens[g]
  std::vector<Element> right;
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      Permutation q(spec.degree);
      for (std::size_t j = 0; j < spec.degree; ++j) q[j] = gens[g][elems[i][j]];
      auto [it, inserted] = index.try_emplace(q, static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() + 1 > limits.element_bound)
          throw BoundExceeded("element bound", elems.size() + 1, limits.element_bound);
        elems.push_back(std::move(q));
        parent.push_back(static_cast<Element>(i));
        via.push_back(g);
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  // Column j of the table from column parent[j]: x*j = (x*parent[j])*gen.
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) table[x * n] = static_cast<Element>(x);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t x = 0; x < n; ++x)
      table[x * n + j] = right[table[x * n + parent[j]] * k + via[j]];
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_string(p));
  return GroupTable::tabulate(
      n, [&](Element a, Element b) { return table[std::size_t{a} * n + b]; }, std::move(labels),
      std::move(provenance), limits);
}

}  // namespace sigma
