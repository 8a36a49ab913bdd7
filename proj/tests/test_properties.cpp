#include <gtest/gtest.h>

#include "checks.hpp"
#include "oracle.hpp"

using namespace sigma;

namespace {

using Key = std::vector<Element>;

Key key(const Bitset& b) {
  Key k;
  b.for_each([&](std::size_t x) { k.push_back(static_cast<Element>(x)); });
  return k;
}

// Second lattice pass: start from the cyclic subgroups and repeatedly join
// every known subgroup with every cyclic subgroup until nothing new appears.
std::set<Key> recount(const GroupTable& G) {
  std::vector<Subgroup> cyclics;
  std::set<Key> seen;
  std::vector<Bitset> frontier;
  for (Element x = 0; x < G.order(); ++x) {
    auto C = cyclic_subgroup(G, x);
    if (seen.insert(key(C.members())).second) {
      frontier.push_back(C.members());
      cyclics.push_back(std::move(C));
    }
  }
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& S : frontier)
      for (const auto& C : cyclics) {
        if (C.members().is_subset_of(S)) continue;
        auto J = subgroup_closure(G, S | C.members()).members();
        if (seen.insert(key(J)).second) next.push_back(std::move(J));
      }
    frontier = std::move(next);
  }
  return seen;
}

// The set of g that never help a pair generate G.
Bitset pair_non_generators(const GroupTable& G) {
  const auto m = GenPairMatrix::compute(G);
  Bitset out(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Element x = 0; x < G.order() && ok; ++x)
      for (Element y = x; y < G.order() && ok; ++y)
        if (!m.generates(x, y) && generates(G, std::vector<Element>{x, y, g})) ok = false;
    if (ok) out.set(g);
  }
  return out;
}

}  // namespace

TEST(Properties, LatticeMatchesIndependentRecount) {
  for (const auto& d : checks::corpus_upto(360, false)) {
    const auto limits = d.limits();
    const auto G = build(d, limits);
    SubgroupList lattice;
    try {
      lattice = all_subgroups(G, limits);
    } catch (const BoundExceeded&) {
      continue;
    }
    std::set<Key> mine;
    for (const auto& S : lattice) mine.insert(key(S.members()));
    EXPECT_EQ(mine.size(), lattice.size()) << d.name;
    EXPECT_EQ(mine, recount(G)) << d.name;
  }
}

TEST(Properties, LatticeMatchesJoinClosureOracleOnSmallGroups) {
  for (const auto& d : checks::corpus_upto(24, false)) {
    const auto G = build(d, d.limits());
    std::set<oracle::Set> mine;
    for (const auto& S : all_subgroups(G)) {
      const auto e = S.elements();
      mine.insert(oracle::Set(e.begin(), e.end()));
    }
    EXPECT_EQ(mine, oracle::subgroups(G)) << d.name;
  }
}

TEST(Properties, FrattiniIsNormalAndEqualsPairNonGenerators) {
  for (const auto& d : checks::corpus_upto(60)) {
    const auto G = build(d, d.limits());
    const auto phi = frattini(G, d.limits());
    EXPECT_TRUE(is_normal(G, phi)) << d.name;
    EXPECT_EQ(phi.members(), pair_non_generators(G)) << d.name;
  }
}

TEST(Properties, FrattiniMatchesOracleOnSmallGroups) {
  for (const auto& d : checks::corpus_upto(16)) {
    const auto G = build(d, d.limits());
    const auto subs = oracle::subgroups(G);
    const auto expect = oracle::intersect_all(oracle::maximal(G, subs), G.order());
    const auto phi = frattini(G).elements();
    EXPECT_EQ(oracle::Set(phi.begin(), phi.end()), expect) << d.name;
  }
}

TEST(Properties, Invariants) {
  const auto o = checks::invariants(120);
  EXPECT_TRUE(o.pass) << o.detail;
}

TEST(Properties, GaschutzNeverExhausts) {
  const auto o = checks::gaschutz_exhaustive(16);
  EXPECT_TRUE(o.pass) << o.detail;
  EXPECT_GT(o.cases, 1000u);
}

TEST(Properties, QuotientLiftingAndFrattiniReduction) {
  const auto o = checks::quotient_lifting(32);
  EXPECT_TRUE(o.pass) << o.detail;
}

TEST(Properties, PredictionAgreementOnSmallGroups) {
  const auto runs = checks::run_corpus(40, 1);
  for (const auto& o : {checks::connectivity_agreement(runs), checks::isolated_agreement(runs),
                        checks::diameter_bounds(runs), checks::nilpotent_exactness(runs)})
    EXPECT_TRUE(o.pass) << o.detail;
  for (const auto& r : runs) EXPECT_TRUE(r.sigma_symmetric) << r.name;
}

TEST(Properties, CoronaOnSmallSemidirects) {
  const auto o = checks::corona_agreement(60);
  EXPECT_TRUE(o.pass) << o.detail;
}

TEST(Properties, CoprimeProducts) {
  const std::vector<std::pair<GroupTable, GroupTable>> pairs = {
      {sym(3), cyclic(5)},          {sym(3), cyclic(7)},       {dihedral(5), cyclic(3)},
      {alt(4), cyclic(5)},          {abelian({2, 2}), cyclic(3)}, {abelian({2, 2}), abelian({3, 3})},
      {quaternion8(), cyclic(3)},   {checks::build_named("C7:C3"), cyclic(2)},
      {checks::build_named("C7:C3"), cyclic(4)}, {sym(3), abelian({5, 5})}, {dihedral(4), cyclic(3)},
      {abelian({3, 3}), cyclic(4)}, {dihedral(4), abelian({3, 3})}};
  for (const auto& [A, B] : pairs) {
    const auto G = direct_product(A, B);
    const auto mg = GenPairMatrix::compute(G);
    const auto ma = GenPairMatrix::compute(A);
    const auto mb = GenPairMatrix::compute(B);
    // direct_product numbers (a, b) as a * |B| + b.
    std::vector<Element> expect;
    const auto va = vertex_set_V(A, ma), vb = vertex_set_V(B, mb);
    for (Element a : va)
      for (Element b : vb) expect.push_back(static_cast<Element>(a * B.order() + b));
    std::sort(expect.begin(), expect.end());
    ASSERT_EQ(vertex_set_V(G, mg), expect) << G.order();

    const auto s = summarize_sigma(G, mg);
    ASSERT_TRUE(s.connected()) << G.order();
    EXPECT_LE(*s.diameter, 3u);
    const auto sa = summarize_sigma(A, ma), sb = summarize_sigma(B, mb);
    const auto wide = [](const BruteForceSummary& x) { return !x.connected() || *x.diameter > 2; };
    const bool equality = (is_cyclic(A) && wide(sb)) || (is_cyclic(B) && wide(sa));
    EXPECT_EQ(*s.diameter == 3, equality) << "orders " << A.order() << " x " << B.order();
  }
}

// For a primitive soluble G = V ⋊ H: hn ∈ V(G) iff h ∈ V(H), for 1 ≠ h ∈ H, n ∈ V.
TEST(Properties, PrimitiveSolubleVertexCriterion) {
  std::size_t checked = 0;
  for (const auto& d : checks::corpus_upto(200)) {
    const auto limits = d.limits();
    const auto G = build(d, limits);
    if (!is_soluble(G)) continue;
    const auto lattice = all_subgroups(G, limits);
    if (minimal_normal_subgroups(G, lattice).size() != 1) continue;
    PrimitiveSolubleVerdict p;
    try {
      p = primitive_soluble_verdict(G, lattice);
    } catch (const PreconditionError&) {
      continue;
    }
    const auto& V = p.socle;
    const auto& H = p.complement;
    if (H.order() == 1 || H.order() * V.order() != G.order()) continue;
    const auto mg = GenPairMatrix::compute(G);
    const auto vg = vertex_set_V(G, mg);
    const std::set<Element> in_vg(vg.begin(), vg.end());
    const auto helems = H.elements();
    const auto Ht = subgroup_table(G, H, limits);
    const auto vh = vertex_set_V(Ht, GenPairMatrix::compute(Ht));
    std::set<Element> in_vh;
    for (Element i : vh) in_vh.insert(helems[i]);
    for (Element h : helems) {
      if (h == G.identity()) continue;
      for (Element n : V.elements())
        ASSERT_EQ(in_vg.count(G.mul(h, n)) > 0, in_vh.count(h) > 0) << d.name;
    }
    ++checked;
  }
  EXPECT_GE(checked, 5u);
}
