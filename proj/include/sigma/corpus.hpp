#pragma once

#include <string>
#include <vector>

#include "sigma/descriptor.hpp"

namespace sigma {

namespace detail {

inline GroupDescriptor entry(std::string name, json construction) {
  GroupDescriptor d;
  d.name = std::move(name);
  d.construction = std::move(construction);
  return d;
}

inline json kind(const char* k) { return json{{"kind", k}}; }
inline json kind(const char* k, const char* key, std::size_t v) { return json{{"kind", k}, {key, v}}; }
inline json abelian_c(std::vector<std::size_t> f) { return json{{"kind", "abelian"}, {"factors", f}}; }
inline json product_c(std::vector<json> f) { return json{{"kind", "direct_product"}, {"factors", f}}; }
inline json semidirect_c(std::vector<std::size_t> h, std::vector<std::size_t> q,
                         std::vector<std::vector<std::size_t>> a) {
  return semidirect_spec_to_json(ScalarSemidirectSpec{std::move(h), std::move(q), std::move(a)});
}

}  // namespace detail

/// The builtin verification corpus, in a fixed order.
inline std::vector<GroupDescriptor> corpus_manifest() {
  using namespace detail;
  std::vector<GroupDescriptor> out;
  auto add = [&](std::string name, json c) { out.push_back(entry(std::move(name), std::move(c))); };
  auto add_marked = [&](std::string name, json c) {
    out.push_back(entry(std::move(name), std::move(c)));
    out.back().two_generated = false;
  };
  auto add_bounded = [&](std::string name, json c, std::size_t bound) {
    out.push_back(entry(std::move(name), std::move(c)));
    out.back().subgroup_order_bound = bound;
  };

  for (std::size_t n = 2; n <= 63; ++n) add("C" + std::to_string(n), kind("cyclic", "n", n));
  for (std::size_t n = 2; n <= 31; ++n) add("D" + std::to_string(n), kind("dihedral", "n", n));
  for (std::size_t a = 2; a * a <= 63; ++a)
    for (std::size_t b = a; a * b <= 63; b += a)
      add("C" + std::to_string(a) + "xC" + std::to_string(b), abelian_c({a, b}));
  add("C2xC2xC3", abelian_c({2, 2, 3}));
  add("C2xC2xC3xC3", abelian_c({2, 2, 3, 3}));
  add("C2xC2xC5", abelian_c({2, 2, 5}));
  add("C3xC3xC2", abelian_c({3, 3, 2}));

  add("Q8", kind("quaternion8"));
  for (std::size_t n = 3; 4 * n <= 60; ++n) add("Dic" + std::to_string(n), kind("dicyclic", "n", n));

  add("S3", kind("sym", "n", 3));
  add("S4", kind("sym", "n", 4));
  add("S5", kind("sym", "n", 5));
  add("A4", kind("alt", "n", 4));
  add("A5", kind("alt", "n", 5));
  add("A6", kind("alt", "n", 6));
  add("A5 (perm)", json{{"kind", "perm"}, {"degree", 5}, {"generators", {{1, 2, 3, 4, 0}, {0, 1, 3, 4, 2}}}});
  // x -> x + 1 and x -> -1/x on the projective line over F_7, with infinity = 7.
  add("PSL(2,7)",
      json{{"kind", "perm"}, {"degree", 8}, {"generators", {{1, 2, 3, 4, 5, 6, 0, 7}, {7, 6, 3, 2, 5, 4, 1, 0}}}});
  add("PSL(2,7) (matrix)", kind("psl2", "q", 7));
  add("SL(2,3)", kind("sl2", "q", 3));
  add("SL(2,5)", kind("sl2", "q", 5));

  // Shapes (V_1 x ... x V_t) : H with H cyclic of prime order or C_p x C_p.
  add("C3:C2", semidirect_c({2}, {3}, {{2}}));
  add("(C3xC5):C2", semidirect_c({2}, {3, 5}, {{2}, {4}}));
  add("(C3xC5xC7):C2", semidirect_c({2}, {3, 5, 7}, {{2}, {4}, {6}}));
  add("C3:(C2xC2)", semidirect_c({2, 2}, {3}, {{2, 1}}));
  add("(C3xC5):(C2xC2)", semidirect_c({2, 2}, {3, 5}, {{2, 1}, {4, 1}}));
  add_bounded("(C3xC5xC7):(C2xC2)", semidirect_c({2, 2}, {3, 5, 7}, {{2, 1}, {4, 1}, {6, 1}}), 420);
  add("C2^2:C3", semidirect_c({3}, {4}, {{2}}));
  add("C7:C3", semidirect_c({3}, {7}, {{2}}));
  add("(C2^2xC7):C3", semidirect_c({3}, {4, 7}, {{2}, {2}}));
  add("C7^2:C3", semidirect_c({3}, {7, 7}, {{2}, {4}}));
  add_bounded("(C2^2xC7^2):C3", semidirect_c({3}, {4, 7, 7}, {{2}, {2}, {4}}), 588);
  add("C2^2:(C3xC3)", semidirect_c({3, 3}, {4}, {{2, 1}}));
  add("C7:(C3xC3)", semidirect_c({3, 3}, {7}, {{2, 1}}));
  add("(C2^2xC7):(C3xC3)", semidirect_c({3, 3}, {4, 7}, {{2, 1}, {2, 1}}));
  add_bounded("(C2^2xC7^2):(C3xC3)", semidirect_c({3, 3}, {4, 7, 7}, {{2, 1}, {2, 1}, {4, 1}}), 1764);
  add("C2^3:C7", semidirect_c({7}, {8}, {{2}}));
  add("C2^4:C5", semidirect_c({5}, {16}, {{8}}));
  add("C11:C5", semidirect_c({5}, {11}, {{3}}));
  add("C13:C3", semidirect_c({3}, {13}, {{3}}));
  // H = C_p x C_p acting with trivial joint kernel.
  add("C3^2:(C2xC2)", semidirect_c({2, 2}, {3, 3}, {{2, 1}, {1, 2}}));
  add("(C3xC5):(C2xC2) faithful", semidirect_c({2, 2}, {3, 5}, {{2, 1}, {1, 4}}));
  // Larger or non-elementary H.
  add("C5:C4", semidirect_c({4}, {5}, {{2}}));
  add("C3:C4", semidirect_c({4}, {3}, {{2}}));
  add("C7:C6", semidirect_c({6}, {7}, {{3}}));
  add("C13:C4", semidirect_c({4}, {13}, {{5}}));
  add("C3^2:C4", semidirect_c({4}, {9}, {{3}}));
  add("C3^2:C8", semidirect_c({8}, {9}, {{4}}));

  // Direct products, coprime and not.
  const json S3 = kind("sym", "n", 3), A4 = kind("alt", "n", 4), Q8 = kind("quaternion8");
  const json D4 = kind("dihedral", "n", 4), D5 = kind("dihedral", "n", 5), C7C3 = semidirect_c({3}, {7}, {{2}});
  auto C = [](std::size_t n) { return kind("cyclic", "n", n); };
  add("S3xC5", product_c({S3, C(5)}));
  add("S3xC7", product_c({S3, C(7)}));
  add("D5xC3", product_c({D5, C(3)}));
  add("A4xC5", product_c({A4, C(5)}));
  add("C7:C3xC2", product_c({C7C3, C(2)}));
  add("C7:C3xC4", product_c({C7C3, C(4)}));
  add("Q8xC3", product_c({Q8, C(3)}));
  add("Q8xC5", product_c({Q8, C(5)}));
  add("Q8xC7", product_c({Q8, C(7)}));
  add("D4xC3", product_c({D4, C(3)}));
  add("D4xC5", product_c({D4, C(5)}));
  add("D4xC3xC3", product_c({D4, abelian_c({3, 3})}));
  add("A4xC2xC2xC5", product_c({A4, abelian_c({2, 2, 5})}));
  add("S3xC2xC5", product_c({S3, abelian_c({2, 5})}));
  add("C2xS3", product_c({C(2), S3}));
  add("C3xS3", product_c({C(3), S3}));
  add("C4xS3", product_c({C(4), S3}));
  add("S3xS3", product_c({S3, S3}));
  add("D5xS3", product_c({D5, S3}));
  add("C2xA4", product_c({C(2), A4}));
  add("C3xA4", product_c({C(3), A4}));
  add("C2xS4", product_c({C(2), kind("sym", "n", 4)}));
  add("C2xA5", product_c({C(2), kind("alt", "n", 5)}));

  add_marked("C2xC2xC2", abelian_c({2, 2, 2}));
  add_marked("C2xC2xC4", abelian_c({2, 2, 4}));
  add_marked("C3xC3xC3", abelian_c({3, 3, 3}));
  add_marked("C2xC2xC6", abelian_c({2, 2, 6}));
  add_marked("C2xD4", product_c({C(2), D4}));
  add_marked("C2xQ8", product_c({C(2), Q8}));
  add_marked("C2xC2xS3", product_c({abelian_c({2, 2}), S3}));
  return out;
}

inline json manifest_to_json(const std::vector<GroupDescriptor>& m) {
  json j = json::array();
  for (const auto& d : m) j.push_back(d.to_json());
  return j;
}

}  // namespace sigma
