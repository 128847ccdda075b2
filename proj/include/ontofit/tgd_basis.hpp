#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ontofit/chase.hpp"
#include "ontofit/limits.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit {

// One guarded TGD per guarded body over the variable pool x1..xl (l = max arity)
// with a non-empty answer tuple. pruned: bodies have at most ||H||+1 atoms,
// with ||H|| the total number of facts in H.
TgdOntology gtgd_basis(const std::vector<Instance>& H, bool pruned, const Limits& limits = {});

// All INDs over the schema of H, up to renaming, that hold in every member of H.
TgdOntology ind_basis(const std::vector<Instance>& H, const Limits& limits = {});

// Total fact count.
std::size_t instance_norm(const std::vector<Instance>& H);

struct BasisReport {
  bool sound = true;
  std::vector<std::size_t> unsound_members;  // indices into the ontology
  std::size_t sampled = 0;                    // enumerated class members true in H
  std::size_t yes = 0;
  std::size_t unknown = 0;
  std::size_t no = 0;
  std::vector<Tgd> not_entailed;

  bool complete_within_budget() const { return no == 0; }
};

BasisReport verify_basis(const TgdOntology& o, const std::vector<Instance>& H, TgdClass cls,
                         const TgdBudget& budget, const ChaseLimits& chase_limits = {});

}  // namespace ontofit
