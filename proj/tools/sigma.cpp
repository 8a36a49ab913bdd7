#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "sigma/sigma.hpp"

namespace {

using namespace sigma;

constexpr int kAgree = 0;
constexpr int kError = 1;
constexpr int kDisagree = 2;

struct CommonFlags {
  bool brute = false;
  bool no_brute = false;
  std::size_t max_order = 0;
  bool max_order_set = false;
  std::size_t workers = default_workers();
  std::string cache_dir;
  std::string out;
  bool timing = false;

  std::optional<bool> brute_mode() const {
    if (brute) return true;
    if (no_brute) return false;
    return std::nullopt;
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SigmaError("cannot write " + path);
  out << text;
  if (!out) throw SigmaError("cannot write " + path);
}

// A path to a descriptor file, or the name of a builtin corpus entry.
GroupDescriptor resolve_descriptor(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_descriptor(arg);
  for (const auto& d : corpus_manifest())
    if (d.name == arg) return d;
  throw SigmaError("no descriptor file or builtin group named \"" + arg + "\"");
}

std::vector<GroupDescriptor> resolve_corpus(const std::string& arg) {
  if (arg == "builtin") return corpus_manifest();
  return load_descriptor_list(arg);
}

int cmd_analyze(const std::string& target, const CommonFlags& f) {
  const auto cache = Cache::configure(f.cache_dir);
  AnalysisOptions opt;
  opt.brute = f.brute_mode();
  opt.workers = f.workers;
  opt.cache = cache ? &*cache : nullptr;
  opt.timing = f.timing;
  if (f.max_order_set) opt.limits.element_bound = f.max_order;
  const auto report = analyze(resolve_descriptor(target), opt);
  write_output(f.out, report_json(report).dump(2) + "\n");
  for (const auto& d : report.disagreements) std::cerr << "disagreement: " << d << "\n";
  return report.agreement.value_or(true) ? kAgree : kDisagree;
}

struct VerifyLine {
  int status = kAgree;
  bool skipped = false;
  std::string text;
  std::optional<CaseTag> tag;
  std::optional<IsolatedReason> isolated;
};

VerifyLine verify_one(const GroupDescriptor& d, const CommonFlags& f, const Cache* cache) {
  VerifyLine line;
  std::ostringstream os;
  try {
    Limits limits = d.limits();
    const std::size_t order = build(d, limits).order();
    if (f.max_order_set && order > f.max_order) {
      line.skipped = true;
      return line;
    }
    AnalysisOptions opt;
    opt.brute = f.brute_mode();
    opt.cache = cache;
    opt.workers = 1;
    try {
      const auto r = analyze(d, opt);
      if (!d.two_generated) {
        line.status = kError;
        os << "FAIL  " << d.name << "  order=" << order << "  marked not 2-generated but is";
      } else {
        line.tag = r.verdict.tag;
        line.isolated = r.verdict.isolated;
        const bool bad = r.agreement == false;
        line.status = bad ? kDisagree : kAgree;
        os << (bad ? "FAIL  " : "PASS  ") << d.name << "  order=" << order << "  " << to_string(r.verdict.tag)
           << "  predicted=" << (r.verdict.predicted_connected ? "connected" : "disconnected");
        if (r.brute) {
          os << "  brute=" << (r.brute->connected() ? "connected" : "disconnected");
          if (r.brute->diameter) os << " diam=" << *r.brute->diameter;
          os << " isolated=" << r.brute->isolated;
        } else {
          os << "  brute=skipped";
        }
        for (const auto& m : r.disagreements) os << "  [" << m << "]";
      }
    } catch (const NotTwoGenerated& e) {
      if (d.two_generated) throw;
      os << "PASS  " << d.name << "  order=" << order << "  expected error: " << e.what();
    }
  } catch (const std::exception& e) {
    line.status = kError;
    os << "ERROR " << d.name << "  " << e.what();
  }
  line.text = os.str();
  return line;
}

int cmd_verify(const std::string& corpus, const CommonFlags& f) {
  const auto entries = resolve_corpus(corpus);
  const auto cache = Cache::configure(f.cache_dir);
  std::vector<VerifyLine> lines(entries.size());
  parallel_for(entries.size(), f.workers,
               [&](std::size_t i) { lines[i] = verify_one(entries[i], f, cache ? &*cache : nullptr); });

  std::ostringstream os;
  std::size_t run = 0, pass = 0, fail = 0, errors = 0;
  std::set<std::string> tags, reasons;
  int worst = kAgree;
  for (const auto& l : lines) {
    if (l.skipped) continue;
    ++run;
    os << l.text << "\n";
    if (l.status == kAgree) ++pass;
    if (l.status == kDisagree) ++fail;
    if (l.status == kError) ++errors;
    if (l.status == kDisagree || (l.status == kError && worst == kAgree)) worst = l.status;
    if (l.tag) tags.insert(to_string(*l.tag));
    if (l.isolated) reasons.insert(to_string(*l.isolated));
  }
  os << run << " groups: " << pass << " passed, " << fail << " disagreed, " << errors << " errors\n";
  os << "case tags:";
  for (const auto& t : tags) os << " " << t;
  os << "\nisolated reasons:";
  for (const auto& r : reasons) os << " " << r;
  os << "\n";
  write_output(f.out, os.str());
  return worst;
}

int cmd_graph(const std::string& target, const std::string& dot, bool intersection, const CommonFlags& f) {
  const auto d = resolve_descriptor(target);
  Limits limits = d.limits();
  if (f.max_order_set) limits.element_bound = f.max_order;
  const GroupTable G = build(d, limits);
  const auto pairs = GenPairMatrix::compute(G, f.workers);
  const auto sigma = sigma_graph(G, pairs);
  const auto label = [&](std::size_t id) { return G.label(static_cast<Element>(id)); };
  std::string sigma_dot = to_dot(sigma, "Sigma(" + d.name + ")", label);
  if (!intersection) {
    write_output(dot, sigma_dot);
    return kAgree;
  }
  const auto lattice = all_subgroups(G, limits);
  const auto inter = intersection_graph(G, lattice);
  const auto sub_label = [&](std::size_t id) {
    std::string s = "{";
    const auto elems = lattice[id].elements();
    for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + G.label(elems[i]);
    return s + "}";
  };
  std::string inter_dot = to_dot(inter, "I(" + d.name + ")", sub_label);
  if (dot.empty() || dot == "-") {
    write_output(dot, sigma_dot + inter_dot);
  } else {
    std::filesystem::path p(dot);
    auto ip = p;
    ip.replace_extension();
    ip += ".intersection.dot";
    write_output(dot, sigma_dot);
    write_output(ip.string(), inter_dot);
  }
  return kAgree;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  auto* b = cmd->add_flag("--brute", f.brute, "Always build Sigma(G) and compare");
  auto* nb = cmd->add_flag("--no-brute", f.no_brute, "Never build Sigma(G)");
  b->excludes(nb);
  cmd->add_option("--max-order", f.max_order, "Largest group order to accept")
      ->each([&](const std::string&) { f.max_order_set = true; });
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--cache-dir", f.cache_dir, "Cache directory (default: $SIGMA_CACHE_DIR)");
  cmd->add_option("--out", f.out, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-generating graph analysis for finite groups"};
  app.require_subcommand(1);
  CommonFlags f;

  std::string target;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify one group and compare with brute force");
  analyze_cmd->add_option("descriptor", target, "Descriptor file or builtin group name")->required();
  analyze_cmd->add_flag("--timing", f.timing, "Include per-phase timings in the report");
  add_common(analyze_cmd, f);

  std::string corpus = "builtin";
  auto* verify_cmd = app.add_subcommand("verify", "Run the agreement check over a corpus");
  verify_cmd->add_option("corpus", corpus, "\"builtin\" or a JSON array of descriptors");
  add_common(verify_cmd, f);

  std::string dot;
  bool intersection = false;
  auto* graph_cmd = app.add_subcommand("graph", "Export Sigma(G) (and I(G)) as DOT");
  graph_cmd->add_option("descriptor", target, "Descriptor file or builtin group name")->required();
  graph_cmd->add_option("--dot", dot, "DOT output path (default: standard output)");
  graph_cmd->add_flag("--intersection", intersection, "Also export the intersection graph");
  add_common(graph_cmd, f);

  std::string manifest_out;
  auto* manifest_cmd = app.add_subcommand("manifest", "Print the builtin corpus as JSON");
  manifest_cmd->add_option("--out", manifest_out, "Output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze_cmd) return cmd_analyze(target, f);
    if (*verify_cmd) return cmd_verify(corpus, f);
    if (*graph_cmd) return cmd_graph(target, dot.empty() ? f.out : dot, intersection, f);
    if (*manifest_cmd) {
      write_output(manifest_out, manifest_to_json(corpus_manifest()).dump(2) + "\n");
      return kAgree;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
