#pragma once

#include <cstddef>

namespace sigma {

struct Limits {
  // Maximum order of a group built from generators.
  std::size_t element_bound = 5000;
  // Largest group whose full subgroup lattice may be enumerated.
  std::size_t subgroup_order_bound = 360;
  // Maximum number of subgroups kept during enumeration.
  std::size_t subgroup_count_cap = 20000;
  // Associativity is checked exhaustively (n^3) up to this order.
  std::size_t associativity_check_bound = 256;
  // Above this order the brute-force graph is skipped unless forced.
  std::size_t brute_force_bound = 2000;
};

}  // namespace sigma
