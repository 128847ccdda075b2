#pragma once

#include <unordered_map>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/interpretation.hpp"

namespace ontofit {

// Maximal simulation between two interpretations over one signature, with a
// separating concept for every excluded pair.
struct SimulationTable {
  std::size_t left = 0;
  std::size_t right = 0;
  Bitset related;
  std::vector<Concept> separators;

  bool contains(std::uint32_t d, std::uint32_t e) const { return related.test(d * right + e); }
  Concept separator(std::uint32_t d, std::uint32_t e) const { return separators[d * right + e]; }
};

// Elimination from the label-compatible pairs; `inverse` adds inverse roles.
SimulationTable max_simulation(const Interpretation& I, const Interpretation& J, bool inverse);

// Bottom-up extension computation with a per-node memo.
class ExtensionEvaluator {
 public:
  explicit ExtensionEvaluator(const Interpretation& interp) : I_(interp) {}
  const Bitset& operator()(Concept c);

 private:
  const Interpretation& I_;
  std::unordered_map<std::uint32_t, Bitset> memo_;
};

// C_{L,0}(d) = TOP AND names(d); C_{L,i+1}(d) adds EX r. C_{L,i}(e) for each r-neighbour e.
Concept characteristic_concept(const Interpretation& I, std::uint32_t d, int depth, bool inverse);

// Concept with extension exactly X, or nullopt. `self` is max_simulation(I, I)
// and is used to shrink the product; may be null.
std::optional<Concept> definable_concept(const Interpretation& I, const Bitset& X, Dialect dialect,
                                         const SimulationTable* self, std::size_t cap);

// Operands of a product that are simulation-minimal among `elements`
// (one representative per equivalence class).
std::vector<std::uint32_t> simulation_minimal(const std::vector<std::uint32_t>& elements,
                                              const SimulationTable& self);

}  // namespace ontofit
