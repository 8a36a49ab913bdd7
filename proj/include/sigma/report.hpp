#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "sigma/cache.hpp"
#include "sigma/classifier.hpp"
#include "sigma/descriptor.hpp"
#include "sigma/group_graphs.hpp"

namespace sigma {

struct AnalysisOptions {
  // nullopt: brute force iff order <= limits.brute_force_bound.
  std::optional<bool> brute;
  Limits limits;
  std::size_t workers = 1;
  const Cache* cache = nullptr;
  bool timing = false;
};

struct BruteForceSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<std::size_t> component_sizes;
  std::vector<std::size_t> component_diameters;
  std::optional<std::size_t> diameter;  // nullopt: infinite
  std::size_t isolated = 0;

  bool connected() const noexcept { return components == 1; }
};

struct AnalysisReport {
  std::string name;
  std::size_t order = 0;
  bool cyclic = false;
  std::optional<std::size_t> p_group;
  bool nilpotent = false;
  bool soluble = false;
  bool derived_nilpotent = false;
  bool two_generated = false;
  std::optional<std::size_t> frattini_order;
  Verdict verdict;
  std::optional<BruteForceSummary> brute;
  std::optional<bool> agreement;
  std::vector<std::string> disagreements;
  std::string cache_status;  // "", "hit", "miss", "corrupt"
  std::vector<std::pair<std::string, double>> timing_ms;
};

namespace detail {

inline json subgroup_json(const Subgroup& S) { return S.elements(); }

inline json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

inline std::string summary_payload(const GenPairMatrix& m, const BruteForceSummary& b) {
  json s{{"vertices", b.vertices},
         {"edges", b.edges},
         {"components", b.components},
         {"component_sizes", b.component_sizes},
         {"component_diameters", b.component_diameters},
         {"diameter", optional_json(b.diameter)},
         {"isolated", b.isolated}};
  return s.dump() + "\n" + adjacency_hex(m.rows());
}

inline bool parse_payload(const std::string& payload, std::size_t n, GenPairMatrix& m, BruteForceSummary& b) {
  const auto nl = payload.find('\n');
  if (nl == std::string::npos) return false;
  try {
    const json s = json::parse(payload.substr(0, nl));
    b.vertices = s.at("vertices").get<std::size_t>();
    b.edges = s.at("edges").get<std::size_t>();
    b.components = s.at("components").get<std::size_t>();
    b.component_sizes = s.at("component_sizes").get<std::vector<std::size_t>>();
    b.component_diameters = s.at("component_diameters").get<std::vector<std::size_t>>();
    b.diameter = s.at("diameter").is_null() ? std::nullopt : std::optional(s.at("diameter").get<std::size_t>());
    b.isolated = s.at("isolated").get<std::size_t>();
    auto rows = rows_from_hex(payload.substr(nl + 1), n);
    if (rows.size() != n) return false;
    m = GenPairMatrix::from_rows(std::move(rows));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

inline json verdict_json(const Verdict& v) {
  json j{{"tag", to_string(v.tag)},
         {"p", detail::optional_json(v.p)},
         {"t", detail::optional_json(v.t)},
         {"predicted_connected", v.predicted_connected},
         {"predicted_diameter_bound", detail::optional_json(v.diameter_bound)},
         {"diameter_exact", v.diameter_exact},
         {"predicted_isolated", v.isolated != IsolatedReason::None},
         {"isolated_reason", to_string(v.isolated)}};
  json tags = json::array();
  for (auto t : v.applicable) tags.push_back(to_string(t));
  j["applicable_tags"] = tags;
  if (v.evidence) {
    const auto& d = *v.evidence;
    json vs = json::array(), ks = json::array();
    for (const auto& V : d.V) vs.push_back(detail::subgroup_json(V));
    for (const auto& K : d.kernels) ks.push_back(detail::subgroup_json(K));
    j["evidence"] = json{{"quotient_order", d.quotient.target.order()},
                         {"W", detail::subgroup_json(d.W)},
                         {"H", detail::subgroup_json(d.H)},
                         {"V", vs},
                         {"kernels", ks},
                         {"centralizer_of_W", detail::subgroup_json(d.centralizer_of_W)}};
  } else {
    j["evidence"] = nullptr;
  }
  j["note"] = v.note;
  return j;
}

/// Report schema (all keys always present; nullable fields use null):
///   name, order, flags{cyclic, p_group, nilpotent, soluble, derived_nilpotent,
///   two_generated}, frattini_order, verdict{...}, brute_force{vertices, edges,
///   components, component_sizes, component_diameters, diameter ("infinite"
///   when disconnected), isolated_vertices} or null, agreement (bool, or null
///   when brute force did not run), disagreements[], and timing_ms{phase: ms}
///   only when timing was requested.
inline json report_json(const AnalysisReport& r) {
  json j{{"name", r.name},
         {"order", r.order},
         {"flags",
          {{"cyclic", r.cyclic},
           {"p_group", detail::optional_json(r.p_group)},
           {"nilpotent", r.nilpotent},
           {"soluble", r.soluble},
           {"derived_nilpotent", r.derived_nilpotent},
           {"two_generated", r.two_generated}}},
         {"frattini_order", detail::optional_json(r.frattini_order)},
         {"verdict", verdict_json(r.verdict)}};
  if (r.brute) {
    const auto& b = *r.brute;
    j["brute_force"] = json{{"vertices", b.vertices},
                            {"edges", b.edges},
                            {"components", b.components},
                            {"component_sizes", b.component_sizes},
                            {"component_diameters", b.component_diameters},
                            {"diameter", b.diameter ? json(*b.diameter) : json("infinite")},
                            {"isolated_vertices", b.isolated}};
  } else {
    j["brute_force"] = nullptr;
  }
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  j["disagreements"] = r.disagreements;
  if (!r.timing_ms.empty()) {
    json t = json::object();
    for (const auto& [phase, ms] : r.timing_ms) t[phase] = ms;
    j["timing_ms"] = t;
  }
  return j;
}

/// Brute-force Σ(G) summary from a pair matrix.
inline BruteForceSummary summarize_sigma(const GroupTable& G, const GenPairMatrix& m, std::size_t workers = 1) {
  const auto s = sigma_graph(G, m);
  const auto c = components_and_diameters(s, workers);
  BruteForceSummary b;
  b.vertices = s.vertex_count();
  b.edges = s.edge_count();
  b.components = c.count;
  b.component_sizes = c.sizes;
  b.component_diameters = c.diameters;
  b.diameter = c.diameter;
  b.isolated = isolated_vertices(s).size();
  return b;
}

/// Compares a verdict with brute force; returns one line per mismatch.
inline std::vector<std::string> compare(const Verdict& v, const BruteForceSummary& b) {
  std::vector<std::string> out;
  if (v.conclusive() && v.predicted_connected != b.connected())
    out.push_back(std::string("connectivity: predicted ") + (v.predicted_connected ? "connected" : "disconnected") +
                  ", brute force " + (b.connected() ? "connected" : "disconnected"));
  if ((v.isolated != IsolatedReason::None) != (b.isolated > 0))
    out.push_back("isolated vertices: predicted " + std::string(to_string(v.isolated)) + ", brute force found " +
                  std::to_string(b.isolated));
  if (v.conclusive() && v.diameter_bound && b.diameter) {
    if (*b.diameter > *v.diameter_bound)
      out.push_back("diameter " + std::to_string(*b.diameter) + " exceeds bound " + std::to_string(*v.diameter_bound));
    else if (v.diameter_exact && *b.diameter != *v.diameter_bound)
      out.push_back("diameter " + std::to_string(*b.diameter) + " differs from exact prediction " +
                    std::to_string(*v.diameter_bound));
  }
  return out;
}

/// Full pipeline for one group: build, structural flags, classify, optional
/// brute force, comparison.
inline AnalysisReport analyze(const GroupDescriptor& d, const AnalysisOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  AnalysisReport r;
  r.name = d.name;
  const Limits limits = d.limits(opt.limits);
  auto lap = [&, t = clock::now()](const char* phase) mutable {
    const auto now = clock::now();
    if (opt.timing) r.timing_ms.emplace_back(phase, std::chrono::duration<double, std::milli>(now - t).count());
    t = now;
  };

  const GroupTable G = build(d, limits);
  r.order = G.order();
  lap("build");
  if (G.order() <= 1) throw PreconditionError("trivial group is not a valid input");

  r.two_generated = is_two_generated(G);
  if (!r.two_generated) throw NotTwoGenerated();
  r.cyclic = is_cyclic(G);
  r.p_group = is_p_group(G);
  r.nilpotent = is_nilpotent(G);
  r.soluble = is_soluble(G);
  r.derived_nilpotent = is_nilpotent(subgroup_table(G, derived_subgroup(G), limits));
  if (G.order() <= limits.subgroup_order_bound) {
    try {
      r.frattini_order = frattini(G, limits).order();
    } catch (const BoundExceeded&) {
    }
  }
  lap("structure");

  r.verdict = classify(G, limits);
  lap("classify");

  const bool run_brute = opt.brute.value_or(G.order() <= limits.brute_force_bound);
  if (run_brute) {
    GenPairMatrix m;
    BruteForceSummary b;
    bool have = false;
    const std::string key = G.content_hash();
    if (opt.cache) {
      std::string payload;
      switch (opt.cache->get(key, payload)) {
        case Cache::Lookup::Hit:
          have = detail::parse_payload(payload, G.order(), m, b);
          r.cache_status = have ? "hit" : "corrupt";
          break;
        case Cache::Lookup::Miss: r.cache_status = "miss"; break;
        case Cache::Lookup::Corrupt: r.cache_status = "corrupt"; break;
      }
    }
    if (!have) {
      m = GenPairMatrix::compute(G, opt.workers);
      b = summarize_sigma(G, m, opt.workers);
      if (opt.cache) opt.cache->put(key, detail::summary_payload(m, b));
    }
    lap("brute_force");
    r.brute = b;
    r.disagreements = compare(r.verdict, b);
    r.agreement = r.disagreements.empty();
  }
  return r;
}

}  // namespace sigma
