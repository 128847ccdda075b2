#pragma once

#include <vector>

#include "ontofit/homomorphism.hpp"
#include "ontofit/instance.hpp"
#include "ontofit/limits.hpp"

namespace ontofit {

// Values of operand i become Value::tagged(v, i).
Instance disjoint_union(const std::vector<Instance>& instances);

// One pass over all operands; values are width-n tuples.
PointedInstance direct_product(const std::vector<PointedInstance>& operands, const Limits& limits = {});
Instance direct_product(const std::vector<Instance>& operands, const Limits& limits = {});

// Adds clones of the point values; the new point is the clone tuple.
PointedInstance diversify(const PointedInstance& p);

Instance restrict_to(const Instance& instance, const std::vector<Value>& values);

// Each set is listed in adom order; sets appear in order of their first covering fact.
std::vector<std::vector<Value>> maximally_guarded_sets(const Instance& instance);

bool is_total_tuple(const Instance& instance, const std::vector<Value>& tuple);

Instance image(const Instance& instance, const ValueMap& h);

// Hom-equivalent retract with the point fixed: drops values as long as the
// instance maps into itself without them.
PointedInstance core(const PointedInstance& p, const Limits& limits = {});

// Pointed product of `operands` up to homomorphic equivalence: keeps only
// hom-minimal operands, builds the part connected to the point one operand at a
// time, and adds a copy of the core of the product of the distinct instances.
// The result is a core.
PointedInstance reduced_product(const std::vector<PointedInstance>& operands, const Limits& limits = {});

}  // namespace ontofit
