#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/fit_verdict.hpp"
#include "ontofit/instance.hpp"
#include "ontofit/interpretation.hpp"
#include "ontofit/limits.hpp"

namespace ontofit {

struct ConceptInclusion {
  Concept lhs;
  Concept rhs;
  std::string to_string() const;  // C SUBCLASSOF D
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
};

struct DlOntology {
  Dialect dialect = Dialect::EL;
  std::vector<ConceptInclusion> inclusions;
};

bool satisfies_ci(const Instance& instance, const ConceptInclusion& ci);
bool satisfies_ontology(const Instance& instance, const DlOntology& o);
bool satisfies_ontology(const Instance& instance, const std::vector<ConceptInclusion>& o);

// Definable subsets of an interpretation with their representative concepts
// (TOP for the whole domain, BOT for the empty set when allowed).
struct DefinableSets {
  std::vector<Bitset> sets;
  std::vector<Concept> concepts;
};
DefinableSets definable_sets(const Interpretation& I, Dialect dialect, const Limits& limits = {});

// Rules 1-5 over the definable sets of the disjoint union of H. `schema`
// widens the signature (e.g. to symbols that only occur in negatives).
DlOntology el_basis(const std::vector<Instance>& H, Dialect dialect, const Limits& limits = {},
                    const Schema* schema = nullptr);

using DlFitVerdict = FitResult<ConceptInclusion>;

DlFitVerdict el_fit_tgd(const std::vector<Instance>& P, const std::vector<Instance>& N, Dialect dialect,
                        const Limits& limits = {});

enum class OntologyRoute { Characterization, Basis };

// Characterization: one inclusion per negative. Basis: a negative-violated
// member of the basis of P per negative.
DlFitVerdict el_fit_ontology(const std::vector<Instance>& P, const std::vector<Instance>& N, Dialect dialect,
                             const Limits& limits = {}, OntologyRoute route = OntologyRoute::Characterization);

ConceptInclusion parse_inclusion(std::string_view line);
std::vector<ConceptInclusion> parse_dl_ontology(std::string_view text);
std::string format_dl_ontology(const std::vector<ConceptInclusion>& o);

}  // namespace ontofit
