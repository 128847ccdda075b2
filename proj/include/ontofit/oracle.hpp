#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/dl_fitting.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit {

// Class members over `schema` up to renaming of variables, ordered by
// (body atoms, head atoms, variables), then by a canonical sequence.
// Bodies and heads have at least one atom. Return false from visit to stop.
void enumerate_tgds(const Schema& schema, TgdClass cls, const TgdBudget& budget,
                    const std::function<bool(const Tgd&)>& visit);
std::vector<Tgd> enumerate_tgds(const Schema& schema, TgdClass cls, const TgdBudget& budget);

// First enumerated TGD that holds in every positive and fails in every negative.
std::optional<Tgd> brute_force_fit(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                                   const TgdBudget& budget);

// Faster search over the same kind of space for property tests: CQs are
// evaluated once per example as answer bitsets and bodies are paired with heads
// by their answer sets. CQs with at most dense_vars variables are enumerated
// with any number of atoms.
struct OracleBudget {
  std::size_t max_body_atoms = 3;
  std::size_t max_head_atoms = 2;
  std::size_t max_vars = 4;
  std::size_t dense_vars = 2;
};

std::optional<Tgd> signature_fit(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                                 const OracleBudget& budget);

// Exact: closes the extensions of concept names under intersection and
// existential restriction on the union of all examples and searches all pairs.
std::optional<ConceptInclusion> dl_oracle_fit(const std::vector<Instance>& P, const std::vector<Instance>& N,
                                              Dialect dialect);

struct FittingInstance {
  std::vector<Instance> positives;
  std::vector<Instance> negatives;
};

struct CorpusOptions {
  std::size_t max_values = 3;
  std::size_t max_positives = 2;
  std::size_t max_negatives = 2;
  double fact_probability = 0.4;
};

// Schema is one of {R/2}, {R/2,S/2}, {A/1,R/2}; every example is non-empty.
FittingInstance random_fitting_instance(std::mt19937_64& rng, const CorpusOptions& options = {});
std::vector<FittingInstance> random_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

// Random instance over the given values and schema; may be empty.
Instance random_instance(std::mt19937_64& rng, const Schema& schema, std::size_t values, double p);

}  // namespace ontofit
