#include <gtest/gtest.h>

#include <fstream>
#include <map>

#include "oracle.hpp"
#include "sigma/sigma.hpp"

using namespace sigma;

namespace {

std::map<std::size_t, std::size_t> order_statistics(const GroupTable& G) {
  std::map<std::size_t, std::size_t> m;
  for (Element x = 0; x < G.order(); ++x) ++m[G.element_order(x)];
  return m;
}

ScalarSemidirectSpec spec(std::vector<std::size_t> h, std::vector<std::size_t> q,
                          std::vector<std::vector<std::size_t>> a) {
  ScalarSemidirectSpec s;
  s.h_orders = std::move(h);
  s.field_sizes = std::move(q);
  s.scalars = std::move(a);
  return s;
}

void expect_corona_matches(const ScalarSemidirectGroup& S) {
  const auto& G = S.table;
  for (Element x = 0; x < G.order(); ++x)
    for (Element y = 0; y < G.order(); ++y)
      ASSERT_EQ(corona_generation_test(S, x, y), is_generating_pair(G, x, y)) << G.label(x) << " " << G.label(y);
}

}  // namespace

TEST(Families, Orders) {
  EXPECT_EQ(dihedral(5).order(), 10u);
  EXPECT_EQ(dicyclic(3).order(), 12u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(direct_product(abelian({2, 2}), cyclic(3)).order(), 12u);
  EXPECT_EQ(sym(5).order(), 120u);
  EXPECT_EQ(alt(6).order(), 360u);
  EXPECT_EQ(special_linear2(7, true).order(), 168u);
  EXPECT_EQ(special_linear2(5, false).order(), 120u);
  EXPECT_THROW(cyclic(6000), BoundExceeded);
  EXPECT_EQ(order_statistics(direct_product(abelian({2, 2}), cyclic(3))), order_statistics(abelian({2, 2, 3})));
}

TEST(Field, AxiomsForEveryPrimePowerUpTo64) {
  for (std::size_t q = 2; q <= 64; ++q) {
    if (prime_factors(q).size() != 1) {
      EXPECT_THROW(FieldTable::make(q), ValidationError) << q;
      continue;
    }
    const auto F = FieldTable::make(q);
    ASSERT_EQ(F.size(), q);
    // Independent re-check: distributivity, inverses, cyclic unit group.
    std::size_t max_order = 0;
    for (std::size_t a = 0; a < q; ++a) {
      if (a) {
        ASSERT_EQ(F.mul(a, F.inv(a)), FieldTable::one());
        ASSERT_EQ((q - 1) % F.mult_order(a), 0u);
        max_order = std::max(max_order, F.mult_order(a));
      }
      ASSERT_EQ(F.add(a, F.neg(a)), FieldTable::zero());
      for (std::size_t b = 0; b < q; ++b)
        for (std::size_t c = 0; c < q; c += 3)
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      // Frobenius is additive and multiplicative.
      for (std::size_t b = 0; b < q; ++b) {
        ASSERT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
        ASSERT_EQ(F.frobenius(F.mul(a, b)), F.mul(F.frobenius(a), F.frobenius(b)));
      }
    }
    EXPECT_EQ(max_order, q - 1) << q;
  }
  EXPECT_THROW(FieldTable::make(1), ValidationError);
  EXPECT_THROW(FieldTable::make(128), ValidationError);
}

TEST(Semidirect, ValidationErrors) {
  EXPECT_THROW(scalar_semidirect(spec({}, {3}, {{}})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2, 2, 2}, {3}, {{2, 1, 1}})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2}, {}, {})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2}, {3}, {{0}})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2}, {3}, {{1}})), ValidationError);  // trivial action
  EXPECT_THROW(scalar_semidirect(spec({2}, {5}, {{2}})), ValidationError);  // 2 has order 4 in F5
  EXPECT_THROW(scalar_semidirect(spec({2}, {9}, {{2}})), ValidationError);  // -1 lies in F3
  EXPECT_THROW(scalar_semidirect(spec({2}, {6}, {{2}})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2}, {3, 3}, {{2}, {2}})), ValidationError);  // isomorphic modules
  EXPECT_THROW(scalar_semidirect(spec({2}, {3}, {{2}, {2}})), ValidationError);
  EXPECT_THROW(scalar_semidirect(spec({2}, {61, 61}, {{60}, {60}})), BoundExceeded);
  // Conjugate scalars over F4 give isomorphic modules through the Frobenius twist.
  const auto F4 = FieldTable::make(4);
  EXPECT_THROW(scalar_semidirect(spec({3}, {4, 4}, {{2}, {F4.frobenius(2)}})), ValidationError);
}

TEST(Semidirect, Examples) {
  const auto D3 = scalar_semidirect(spec({2}, {3}, {{2}}));
  EXPECT_EQ(order_statistics(D3.table), order_statistics(dihedral(3)));
  EXPECT_FALSE(D3.table.is_abelian());

  const auto D15 = scalar_semidirect(spec({2}, {3, 5}, {{2}, {4}}));
  EXPECT_EQ(order_statistics(D15.table), order_statistics(dihedral(15)));
  const auto m = GenPairMatrix::compute(D15.table);
  const auto md = GenPairMatrix::compute(dihedral(15));
  const auto a = summarize_sigma(D15.table, m);
  const auto b = summarize_sigma(dihedral(15), md);
  EXPECT_EQ(a.edges, b.edges);
  auto sa = a.component_sizes, sb = b.component_sizes;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(a.isolated, b.isolated);

  const auto C2S3 = scalar_semidirect(spec({2, 2}, {3}, {{2, 1}}));
  EXPECT_EQ(order_statistics(C2S3.table), order_statistics(direct_product(cyclic(2), sym(3))));
  EXPECT_EQ(center(C2S3.table).order(), 2u);
}

TEST(Semidirect, MultiplicationRule) {
  const auto S = scalar_semidirect(spec({3}, {7, 4}, {{2}, {2}}));
  const auto& G = S.table;
  for (Element a = 0; a < G.order(); ++a)
    for (Element b = 0; b < G.order(); ++b) {
      const auto& ca = S.coords[a];
      const auto& cb = S.coords[b];
      const auto& cc = S.coords[G.mul(a, b)];
      for (std::size_t j = 0; j < 2; ++j)
        ASSERT_EQ(cc.v[j], S.fields[j].add(ca.v[j], S.fields[j].mul(S.alpha(j, ca.h), cb.v[j])));
      ASSERT_EQ(cc.h[0], (ca.h[0] + cb.h[0]) % 3);
    }
  G.validate();
  EXPECT_EQ(S.coords[0].v, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(S.coords[0].h, (std::vector<std::size_t>{0}));
}

TEST(Corona, SpecExamplesOnD3) {
  const auto S = scalar_semidirect(spec({2}, {3}, {{2}}));
  // index = v * |H| + h
  const Element h = 1, g1 = 1 * 2 + 1, g2 = 2 * 2 + 1;
  EXPECT_TRUE(corona_generation_test(S, g1, g2));
  EXPECT_TRUE(is_generating_pair(S.table, g1, g2));
  for (Element x = 0; x < 6; ++x) EXPECT_FALSE(corona_generation_test(S, x, x));
  EXPECT_TRUE(corona_generation_test(S, h, g1));
  EXPECT_TRUE(oracle::generates(S.table, h, g1));
  EXPECT_THROW(corona_generation_test(S, 0, 6), PreconditionError);
  EXPECT_THROW(corona_generation_test(dihedral(3), S, 0, 1), PreconditionError);
  EXPECT_TRUE(corona_generation_test(S.table, S, g1, g2));
}

TEST(Corona, MatchesClosureOnEveryPair) {
  expect_corona_matches(scalar_semidirect(spec({2}, {3, 5}, {{2}, {4}})));
  expect_corona_matches(scalar_semidirect(spec({2, 2}, {3}, {{2, 1}})));
  expect_corona_matches(scalar_semidirect(spec({3}, {4, 7}, {{2}, {2}})));
  expect_corona_matches(scalar_semidirect(spec({3, 3}, {4, 7}, {{2, 1}, {1, 2}})));
  expect_corona_matches(scalar_semidirect(spec({4}, {5}, {{2}})));
  expect_corona_matches(scalar_semidirect(spec({7}, {8}, {{2}})));
}

TEST(Semidirect, CenterIsTheJointKernel) {
  for (const auto& s : {spec({2}, {3, 5}, {{2}, {4}}), spec({2, 2}, {3}, {{2, 1}}), spec({2, 2}, {3, 5}, {{2, 1}, {4, 1}}),
                        spec({3, 3}, {7}, {{2, 1}}), spec({3, 3}, {4, 7}, {{2, 1}, {2, 1}}), spec({4}, {5}, {{2}}),
                        spec({2, 2}, {3, 3}, {{2, 1}, {1, 2}})}) {
    const auto S = scalar_semidirect(s);
    Bitset kernel(S.table.order());
    for (Element x = 0; x < S.table.order(); ++x) {
      const auto& c = S.coords[x];
      bool in = std::all_of(c.v.begin(), c.v.end(), [](std::size_t v) { return v == 0; });
      for (std::size_t j = 0; j < S.fields.size() && in; ++j) in = S.alpha(j, c.h) == FieldTable::one();
      if (in) kernel.set(x);
    }
    EXPECT_EQ(center(S.table).members(), kernel);
  }
}

TEST(Corpus, ContainsTheNamedExamples) {
  const auto m = corpus_manifest();
  std::set<std::string> names;
  for (const auto& d : m) EXPECT_TRUE(names.insert(d.name).second) << "duplicate " << d.name;
  for (const char* n : {"C2xC2xC3", "D7", "A5", "S5", "PSL(2,7)", "Q8", "D4", "C3xC3", "C2xC2", "A4", "C7:C3", "C5:C4"})
    EXPECT_TRUE(names.count(n)) << n;
  std::size_t cyclic_count = 0;
  for (std::size_t n = 2; n <= 63; ++n) cyclic_count += names.count("C" + std::to_string(n));
  EXPECT_EQ(cyclic_count, 62u);
}

TEST(Corpus, CaseFourInstancesHaveCenterOfOrderP) {
  for (const auto& d : corpus_manifest()) {
    if (d.construction["kind"] != "semidirect") continue;
    const auto s = semidirect_spec_from_json(d.construction);
    if (s.h_orders.size() != 2 || s.h_orders[0] != s.h_orders[1]) continue;
    if (s.order() > 500) continue;
    const auto G = build(d, d.limits());
    const auto v = classify(G, d.limits());
    if (v.tag != CaseTag::Case4) continue;
    EXPECT_EQ(center(G).order(), s.h_orders[0]) << d.name;
  }
}

TEST(Corpus, DescriptorsRoundTrip) {
  for (const auto& d : corpus_manifest()) {
    const auto limits = d.limits();
    const auto G = build(d, limits);
    const auto again = GroupDescriptor::from_json(json::parse(d.to_json().dump()));
    EXPECT_EQ(again.to_json(), d.to_json());
    const auto H = build(again, limits);
    EXPECT_EQ(G.content_hash(), H.content_hash()) << d.name;
    const auto bytes = G.serialize();
    EXPECT_EQ(GroupTable::deserialize(bytes, limits).content_hash(), G.content_hash()) << d.name;
  }
}

TEST(Corpus, DataFileMatchesBuiltinManifest) {
  std::ifstream in(std::string(SIGMA_SOURCE_DIR) + "/data/corpus.json");
  ASSERT_TRUE(in);
  EXPECT_EQ(json::parse(in), manifest_to_json(corpus_manifest()));
}

TEST(Descriptor, BuildsEveryKind) {
  const auto b = [](const char* text) { return build(GroupDescriptor::from_json(json::parse(text))); };
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"cyclic","n":5}})").order(), 5u);
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"dicyclic","n":3}})").order(), 12u);
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"sl2","q":3}})").order(), 24u);
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"perm","degree":4,"generators":[[1,2,3,0],[1,0,2,3]]}})").order(),
            24u);
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"table","rows":[[0,1],[1,0]]}})").order(), 2u);
  EXPECT_EQ(b(R"({"name":"x","construction":{"kind":"direct_product","factors":[
      {"kind":"cyclic","n":2},{"kind":"sym","n":3}]}})")
                .order(),
            12u);
  EXPECT_THROW(b(R"({"name":"x","construction":{"kind":"nope"}})"), ValidationError);
  EXPECT_THROW(b(R"({"name":"x","construction":{"kind":"cyclic","n":-2}})"), ValidationError);
  EXPECT_THROW(b(R"({"name":"x","construction":{"kind":"table","rows":[[0,1],[0,1]]}})"), ValidationError);
  EXPECT_THROW(b(R"({"construction":{"kind":"cyclic","n":2}})"), ValidationError);
}
