#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/instance.hpp"
#include "ontofit/limits.hpp"
#include "ontofit/simulation.hpp"

namespace ontofit {

// Instance-level front ends. Each builds interpretations over the union of the
// schemas involved; symbols of arity > 2 raise DialectError.

std::vector<Value> extension(Concept c, const Instance& instance);

struct SimulationResult {
  std::vector<Value> left;
  std::vector<Value> right;
  SimulationTable table;

  bool contains(Value d, Value e) const;
  // Separator of an excluded pair; nullopt if the pair is related.
  std::optional<Concept> separator(Value d, Value e) const;
  std::vector<std::pair<Value, Value>> relation() const;
};

SimulationResult max_simulation(const Instance& I, const Instance& J, Dialect dialect);

// Arity-1 points; a source point outside adom(p) is simulated by anything.
bool simulates(const PointedInstance& p, const PointedInstance& q, Dialect dialect);

Concept characteristic_concept(const Instance& I, Value d, int depth, Dialect dialect);

bool is_l_total(const Instance& I, Value d, Dialect dialect);

std::optional<Concept> definable_concept(const Instance& I, const std::vector<Value>& X, Dialect dialect,
                                         const Limits& limits = {});

std::shared_ptr<const Signature> signature_of(const std::vector<const Instance*>& instances);

}  // namespace ontofit
