#include "ontofit/dl_concepts.hpp"

#include "ontofit/errors.hpp"

namespace ontofit {

std::shared_ptr<const Signature> signature_of(const std::vector<const Instance*>& instances) {
  Schema s;
  for (const auto* I : instances) s = Schema::merge(s, I->schema());
  return std::make_shared<const Signature>(Signature::of(s));
}

std::vector<Value> extension(Concept c, const Instance& instance) {
  const auto sig = signature_of({&instance});
  const Interpretation I = Interpretation::from_instance(instance, sig);
  ExtensionEvaluator ext(I);
  const Bitset& bits = ext(c);
  std::vector<Value> out;
  for (auto x = bits.find_first(); x != Bitset::npos; x = bits.find_next(x)) out.push_back(instance.adom()[x]);
  return out;
}

bool SimulationResult::contains(Value d, Value e) const {
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] != d) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j] == e) return table.contains(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  return false;
}

std::optional<Concept> SimulationResult::separator(Value d, Value e) const {
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] != d) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j] != e) continue;
      const auto a = static_cast<std::uint32_t>(i);
      const auto b = static_cast<std::uint32_t>(j);
      if (table.contains(a, b)) return std::nullopt;
      return table.separator(a, b);
    }
  }
  throw UsageError("values outside the simulated instances");
}

std::vector<std::pair<Value, Value>> SimulationResult::relation() const {
  std::vector<std::pair<Value, Value>> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (table.contains(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j))) {
        out.emplace_back(left[i], right[j]);
      }
    }
  }
  return out;
}

SimulationResult max_simulation(const Instance& I, const Instance& J, Dialect dialect) {
  const auto sig = signature_of({&I, &J});
  SimulationResult r;
  r.left = I.adom();
  r.right = J.adom();
  r.table = max_simulation(Interpretation::from_instance(I, sig), Interpretation::from_instance(J, sig),
                           allows_inverse(dialect));
  return r;
}

bool simulates(const PointedInstance& p, const PointedInstance& q, Dialect dialect) {
  if (p.point.size() != 1 || q.point.size() != 1) throw UsageError("simulation needs points of arity 1");
  auto dp = p.instance.position(p.point[0]);
  if (!dp) return true;
  const auto sig = signature_of({&p.instance, &q.instance});
  const Interpretation I = Interpretation::from_instance(p.instance, sig);
  Interpretation J = Interpretation::from_instance(q.instance, sig);
  std::uint32_t e;
  if (auto eq = q.instance.position(q.point[0])) {
    e = static_cast<std::uint32_t>(*eq);
  } else {
    e = J.add_element();
  }
  return max_simulation(I, J, allows_inverse(dialect)).contains(static_cast<std::uint32_t>(*dp), e);
}

Concept characteristic_concept(const Instance& instance, Value d, int depth, Dialect dialect) {
  auto pos = instance.position(d);
  if (!pos) throw PreconditionError("value " + d.to_string() + " is not in the active domain");
  const auto sig = signature_of({&instance});
  return characteristic_concept(Interpretation::from_instance(instance, sig), static_cast<std::uint32_t>(*pos),
                                depth, allows_inverse(dialect));
}

bool is_l_total(const Instance& instance, Value d, Dialect dialect) {
  auto pos = instance.position(d);
  if (!pos) throw PreconditionError("value " + d.to_string() + " is not in the active domain");
  const auto sig = signature_of({&instance});
  const Interpretation universal = Interpretation::universal(sig);
  const Interpretation I = Interpretation::from_instance(instance, sig);
  return max_simulation(universal, I, allows_inverse(dialect)).contains(0, static_cast<std::uint32_t>(*pos));
}

std::optional<Concept> definable_concept(const Instance& instance, const std::vector<Value>& X, Dialect dialect,
                                         const Limits& limits) {
  const auto sig = signature_of({&instance});
  const Interpretation I = Interpretation::from_instance(instance, sig);
  Bitset bits(I.size());
  for (Value v : X) {
    auto pos = instance.position(v);
    if (!pos) throw PreconditionError("value " + v.to_string() + " is not in the active domain");
    bits.set(*pos);
  }
  return definable_concept(I, bits, dialect, nullptr, limits.max_product_size);
}

}  // namespace ontofit
