#pragma once

#include <cstddef>

namespace ontofit {

struct Limits {
  std::size_t max_product_size = 1'000'000;  // values in one product
  std::size_t max_search_nodes = 20'000'000;  // per homomorphism search
  std::size_t max_basis_domain = 20;          // EL basis enumerates 2^|domain| sets
  std::size_t max_subset_domain = 16;         // TGD class: subsets of adom of the product
  std::size_t max_ind_arity = 8;
  std::size_t max_enumerated_bodies = 2'000'000;
};

struct ChaseLimits {
  std::size_t max_rounds = 8;
  std::size_t max_facts = 100'000;
};

}  // namespace ontofit
