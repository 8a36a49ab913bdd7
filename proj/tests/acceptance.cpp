// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <iostream>
#include <map>

#include "checks.hpp"

using namespace sigma;
using checks::Outcome;

namespace {

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, const std::string& extra = {}) {
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << o.cases << " cases";
  if (!extra.empty()) std::cout << "; " << extra;
  std::cout << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  // 1. Connectivity agreement on the small corpus, with coverage of every case.
  {
    const auto t = std::chrono::steady_clock::now();
    const auto runs = checks::run_corpus(63);
    const double secs = seconds_since(t);
    Outcome o = checks::connectivity_agreement(runs);
    const auto cov = checks::case_coverage(runs, {CaseTag::Cyclic, CaseTag::PGroup, CaseTag::Case3, CaseTag::Case4,
                                                  CaseTag::ConnectedSoluble, CaseTag::Connected});
    if (!cov.pass) o.fail(cov.detail);
    if (runs.size() < 60) o.fail("only " + std::to_string(runs.size()) + " groups of order <= 63");
    if (secs > 300) o.fail("took " + std::to_string(secs) + " s");
    report(1, "predicted connectivity equals brute force, order <= 63", o,
           std::to_string(runs.size()) + " groups, " + std::to_string(static_cast<int>(secs)) + " s");
  }

  const auto runs = checks::run_corpus(static_cast<std::size_t>(-1));

  // 2. Isolated vertices on the full corpus, with coverage of every reason.
  {
    Outcome o = checks::isolated_agreement(runs);
    std::set<IsolatedReason> seen;
    for (const auto& r : runs) seen.insert(r.verdict.isolated);
    for (auto reason : {IsolatedReason::CyclicGenerators, IsolatedReason::KleinFour, IsolatedReason::DihedralP,
                        IsolatedReason::None})
      if (!seen.count(reason)) o.fail(std::string("no group with reason ") + to_string(reason));
    report(2, "predicted isolated vertices equal brute force, full corpus", o);
  }

  // 3. Diameter bounds.
  report(3, "connected soluble diameters <= 3, all connected <= 5, C2xC2xC3 exactly 3",
         checks::diameter_bounds(runs));

  // 4. Exact nilpotent diameters.
  report(4, "nilpotent non-cyclic non-p-group diameters are exact", checks::nilpotent_exactness(runs));

  // 5. Determinant generation test against closure.
  {
    std::size_t groups = 0;
    bool t3 = false, square = false;
    Outcome o = checks::corona_agreement(250, &groups, &t3, &square);
    if (groups < 6) o.fail("only " + std::to_string(groups) + " semidirect groups");
    if (!t3) o.fail("no instance with three modules");
    if (!square) o.fail("no instance with H = Cp x Cp");
    report(5, "determinant generation test agrees with closure on every ordered pair", o,
           std::to_string(groups) + " groups");
  }

  // 6. Lifting generating pairs through every normal subgroup.
  report(6, "generating pairs lift through every normal subgroup, order <= 24", checks::gaschutz_exhaustive(24));

  // 7. Quotient lifting and Frattini reduction.
  report(7, "quotient lifting and Frattini reduction, order <= 63", checks::quotient_lifting(63));

  // 8. Duality with the intersection graph.
  {
    std::vector<std::string> names;
    Outcome o = checks::duality(static_cast<std::size_t>(-1), &names);
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : " ") + n;
    if (std::find(names.begin(), names.end(), "A5") == names.end()) o.fail("A5 not covered");
    report(8, "Sigma and intersection graph components correspond", o, "groups: " + list);
  }

  // 9. p-group structure. The check is literal: Sigma itself must be complete
  // multipartite with parts M_i \ Frat(G). The adjacency rule "adjacent iff
  // both lie in one M_i" is reported alongside.
  {
    Outcome o;
    std::string notes;
    for (const char* name : {"Q8", "D4", "C3xC3", "C2xC2"}) {
      const auto s = checks::pgroup_shape(checks::build_named(name));
      ++o.cases;
      notes += std::string(notes.empty() ? "" : ", ") + name + " " + std::to_string(s.parts) + " parts " +
               std::to_string(s.edges) + " edges" + (s.adjacency_rule ? " rule ok" : " rule broken");
      if (!s.adjacency_rule) o.fail(std::string(name) + ": adjacency is not 'same maximal subgroup'");
      else if (!s.sigma_multipartite)
        o.fail(std::string(name) +
               ": Sigma is the disjoint union of the cliques M_i \\ Frat(G); the complete multipartite graph on "
               "those parts is its complement Delta");
    }
    report(9, "Sigma of Q8, D4, C3xC3, C2xC2 is complete (p+1)-partite with parts M_i \\ Frat(G)", o, notes);
  }

  // 10. Non-soluble groups at desk scale, with frozen exact diameters.
  {
    const std::map<std::string, std::size_t> frozen = {{"A5", 2}, {"S5", 2}, {"PSL(2,7)", 2}};
    Outcome o;
    std::string seen;
    for (const auto& r : runs) {
      const auto it = frozen.find(r.name);
      if (it == frozen.end()) continue;
      ++o.cases;
      seen += (seen.empty() ? "" : ", ") + r.name + " diameter " +
              (r.brute.diameter ? std::to_string(*r.brute.diameter) : std::string("infinite"));
      if (!r.brute.connected() || *r.brute.diameter > 5) o.fail(r.name + " is not connected with diameter <= 5");
      else if (*r.brute.diameter != it->second) o.fail(r.name + " diameter changed from " + std::to_string(it->second));
    }
    if (o.cases != frozen.size()) o.fail("missing groups");
    report(10, "A5, S5, PSL(2,7) connected with diameter <= 5 (frozen values)", o, seen);
  }

  // 11. Structural invariants over every constructed object.
  {
    Outcome o = checks::invariants(static_cast<std::size_t>(-1));
    for (const auto& r : runs) {
      ++o.cases;
      if (!r.sigma_symmetric) o.fail(r.name + ": Sigma is not symmetric and loopless");
    }
    report(11, "table, closure, quotient, field and graph invariants hold", o);
  }

  std::cout << (11 - failures) << "/11 criteria passed in " << static_cast<int>(seconds_since(start)) << " s"
            << std::endl;
  return failures ? 1 : 0;
}
