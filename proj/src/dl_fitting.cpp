#include "ontofit/dl_fitting.hpp"

#include <algorithm>
#include <set>

#include "ontofit/dl_concepts.hpp"
#include "ontofit/errors.hpp"
#include "ontofit/operations.hpp"
#include "ontofit/simulation.hpp"

namespace ontofit {

std::string ConceptInclusion::to_string() const { return lhs.to_string() + " SUBCLASSOF " + rhs.to_string(); }

bool satisfies_ci(const Instance& instance, const ConceptInclusion& ci) {
  const auto sig = signature_of({&instance});
  const Interpretation I = Interpretation::from_instance(instance, sig);
  ExtensionEvaluator ext(I);
  const Bitset lhs = ext(ci.lhs);
  return lhs.is_subset_of(ext(ci.rhs));
}

bool satisfies_ontology(const Instance& instance, const std::vector<ConceptInclusion>& o) {
  const auto sig = signature_of({&instance});
  const Interpretation I = Interpretation::from_instance(instance, sig);
  ExtensionEvaluator ext(I);
  for (const auto& ci : o) {
    const Bitset lhs = ext(ci.lhs);
    if (!lhs.is_subset_of(ext(ci.rhs))) return false;
  }
  return true;
}

bool satisfies_ontology(const Instance& instance, const DlOntology& o) {
  return satisfies_ontology(instance, o.inclusions);
}

namespace {

struct DirectedRole {
  int index;
  bool inverse;
};

std::vector<DirectedRole> directed_roles(const Signature& sig, bool inverse) {
  std::vector<DirectedRole> out;
  for (std::size_t r = 0; r < sig.roles.size(); ++r) out.push_back({static_cast<int>(r), false});
  if (inverse) {
    for (std::size_t r = 0; r < sig.roles.size(); ++r) out.push_back({static_cast<int>(r), true});
  }
  return out;
}

// (EX r. S)^I for a set S of elements.
Bitset exists_image(const Interpretation& I, DirectedRole r, const Bitset& S) {
  Bitset out(I.size());
  for (auto x = S.find_first(); x != Bitset::npos; x = S.find_next(x)) {
    for (auto d : I.neighbours(r.index, !r.inverse, static_cast<std::uint32_t>(x))) out.set(d);
  }
  return out;
}

Bitset name_extension(const Interpretation& I, int a) {
  Bitset out(I.size());
  for (std::uint32_t d = 0; d < I.size(); ++d) {
    if (I.label(d).test(a)) out.set(d);
  }
  return out;
}

// Visits every inclusion of the basis as (lhs, rhs) description; stops when f returns false.
// Sets are evaluated in `I`; the callback receives indices into the rule parts.
struct BasisRule {
  enum Kind { NameRhs, ExistsRhs, NameLhs, ExistsLhs, Meet } kind;
  std::size_t x = 0, y = 0, z = 0;  // set indices; for names, x or y is the name index
  DirectedRole role{0, false};
};

template <class F>
void for_each_rule(const Interpretation& I, const DefinableSets& D, bool inverse, F f) {
  const auto& sig = I.signature();
  const auto roles = directed_roles(sig, inverse);
  const std::size_t k = D.sets.size();
  std::vector<Bitset> names;
  for (std::size_t a = 0; a < sig.names.size(); ++a) names.push_back(name_extension(I, static_cast<int>(a)));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t a = 0; a < names.size(); ++a) {
      if (D.sets[x].is_subset_of(names[a]) && !f(BasisRule{BasisRule::NameRhs, x, a, 0, {}})) return;
    }
  }
  for (const auto& r : roles) {
    std::vector<Bitset> ex;
    for (std::size_t y = 0; y < k; ++y) ex.push_back(exists_image(I, r, D.sets[y]));
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (D.sets[x].is_subset_of(ex[y]) && !f(BasisRule{BasisRule::ExistsRhs, x, y, 0, r})) return;
      }
    }
  }
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t x = 0; x < k; ++x) {
      if (names[a].is_subset_of(D.sets[x]) && !f(BasisRule{BasisRule::NameLhs, a, x, 0, {}})) return;
    }
  }
  for (const auto& r : roles) {
    for (std::size_t x = 0; x < k; ++x) {
      const Bitset ex = exists_image(I, r, D.sets[x]);
      for (std::size_t y = 0; y < k; ++y) {
        if (ex.is_subset_of(D.sets[y]) && !f(BasisRule{BasisRule::ExistsLhs, x, y, 0, r})) return;
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t x2 = x; x2 < k; ++x2) {
      const Bitset meet = D.sets[x] & D.sets[x2];
      for (std::size_t y = 0; y < k; ++y) {
        if (meet.is_subset_of(D.sets[y]) && !f(BasisRule{BasisRule::Meet, x, x2, y, {}})) return;
      }
    }
  }
}

ConceptInclusion materialize(const BasisRule& r, const Signature& sig, const DefinableSets& D) {
  auto role = [&](DirectedRole d) { return Role{sig.roles[d.index], d.inverse}; };
  switch (r.kind) {
    case BasisRule::NameRhs:
      return {D.concepts[r.x], Concept::name(sig.names[r.y])};
    case BasisRule::ExistsRhs:
      return {D.concepts[r.x], Concept::exists(role(r.role), D.concepts[r.y])};
    case BasisRule::NameLhs:
      return {Concept::name(sig.names[r.x]), D.concepts[r.y]};
    case BasisRule::ExistsLhs:
      return {Concept::exists(role(r.role), D.concepts[r.x]), D.concepts[r.y]};
    case BasisRule::Meet:
      return {Concept::conj({D.concepts[r.x], D.concepts[r.y]}), D.concepts[r.z]};
  }
  throw InvariantViolation("unknown basis rule");
}

// Evaluates the basis rules in N without building their concepts.
std::optional<ConceptInclusion> violated_rule(const Interpretation& I, const DefinableSets& D, bool inverse,
                                              const Interpretation& N) {
  ExtensionEvaluator ev(N);
  std::vector<Bitset> ext;
  for (Concept c : D.concepts) ext.push_back(ev(c));
  std::vector<Bitset> names;
  for (std::size_t a = 0; a < N.signature().names.size(); ++a) names.push_back(name_extension(N, static_cast<int>(a)));
  std::optional<ConceptInclusion> found;
  for_each_rule(I, D, inverse, [&](const BasisRule& r) {
    bool holds = true;
    switch (r.kind) {
      case BasisRule::NameRhs:
        holds = ext[r.x].is_subset_of(names[r.y]);
        break;
      case BasisRule::ExistsRhs:
        holds = ext[r.x].is_subset_of(exists_image(N, r.role, ext[r.y]));
        break;
      case BasisRule::NameLhs:
        holds = names[r.x].is_subset_of(ext[r.y]);
        break;
      case BasisRule::ExistsLhs:
        holds = exists_image(N, r.role, ext[r.x]).is_subset_of(ext[r.y]);
        break;
      case BasisRule::Meet:
        holds = (ext[r.x] & ext[r.y]).is_subset_of(ext[r.z]);
        break;
    }
    if (!holds) found = materialize(r, I.signature(), D);
    return holds;
  });
  return found;
}

void check_inputs(const std::vector<Instance>& P, const std::vector<Instance>& N) {
  if (P.empty() || N.empty()) throw UsageError("fitting needs at least one positive and one negative example");
}

std::shared_ptr<const Signature> fitting_signature(const std::vector<Instance>& P, const std::vector<Instance>& N) {
  std::vector<const Instance*> all;
  for (const auto& I : P) all.push_back(&I);
  for (const auto& I : N) all.push_back(&I);
  return signature_of(all);
}

Instance union_with_schema(const std::vector<Instance>& H, const Schema& schema) {
  Instance U = disjoint_union(H);
  U.extend_schema(schema);
  return U;
}

void verify_witness(const ConceptInclusion& ci, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  for (const auto& I : P) {
    if (!satisfies_ci(I, ci)) throw InvariantViolation("witness " + ci.to_string() + " fails a positive example");
  }
  for (const auto& I : N) {
    if (satisfies_ci(I, ci)) throw InvariantViolation("witness " + ci.to_string() + " holds in a negative example");
  }
}

std::string describe(const std::vector<const Instance*>& N, const std::vector<std::uint32_t>& comps) {
  std::string out = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ",";
    out += N[i]->adom()[comps[i]].to_string();
  }
  return out + ")";
}

}  // namespace

DefinableSets definable_sets(const Interpretation& I, Dialect dialect, const Limits& limits) {
  const std::size_t n = I.size();
  if (n > limits.max_basis_domain) {
    throw ResourceLimit("basis domain has " + std::to_string(n) + " elements; the cap is " +
                        std::to_string(limits.max_basis_domain));
  }
  const SimulationTable self = max_simulation(I, I, allows_inverse(dialect));
  DefinableSets out;
  const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  for (std::uint64_t mask = 0;; ++mask) {
    Bitset X(n, mask);
    if (mask == full) {
      out.sets.push_back(X);
      out.concepts.push_back(Concept::top());
    } else if (mask == 0 && allows_bottom(dialect)) {
      out.sets.push_back(X);
      out.concepts.push_back(Concept::bottom());
    } else if (auto c = definable_concept(I, X, dialect, &self, limits.max_product_size)) {
      out.sets.push_back(X);
      out.concepts.push_back(*c);
    }
    if (mask == full) break;
  }
  return out;
}

DlOntology el_basis(const std::vector<Instance>& H, Dialect dialect, const Limits& limits, const Schema* schema) {
  Schema s;
  for (const auto& I : H) s = Schema::merge(s, I.schema());
  if (schema) s = Schema::merge(s, *schema);
  const Instance U = union_with_schema(H, s);
  const auto sig = std::make_shared<const Signature>(Signature::of(s));
  const Interpretation I = Interpretation::from_instance(U, sig);
  const DefinableSets D = definable_sets(I, dialect, limits);
  DlOntology o{dialect, {}};
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for_each_rule(I, D, allows_inverse(dialect), [&](const BasisRule& r) {
    const ConceptInclusion ci = materialize(r, *sig, D);
    if (seen.emplace(ci.lhs.id(), ci.rhs.id()).second) o.inclusions.push_back(ci);
    return true;
  });
  return o;
}

DlFitVerdict el_fit_tgd(const std::vector<Instance>& P, const std::vector<Instance>& N, Dialect dialect,
                        const Limits& limits) {
  check_inputs(P, N);
  DlFitVerdict verdict;
  try {
    const bool inverse = allows_inverse(dialect);
    const bool bottom = allows_bottom(dialect);
    const auto sig = fitting_signature(P, N);
    const Interpretation U = Interpretation::from_instance(disjoint_union(P), sig);
    std::vector<Interpretation> negs;
    std::vector<const Instance*> neg_instances;
    for (const auto& I : N) {
      negs.push_back(Interpretation::from_instance(I, sig));
      neg_instances.push_back(&I);
    }
    std::vector<const Interpretation*> factors;
    for (const auto& I : negs) factors.push_back(&I);
    const Interpretation prod = full_product(factors, limits.max_product_size);
    const Interpretation universal = Interpretation::universal(sig);

    std::vector<Bitset> total;  // per negative: L-total elements
    std::size_t max_neg = 0;
    for (const auto& I : negs) {
      max_neg = std::max(max_neg, I.size());
      const SimulationTable t = max_simulation(universal, I, inverse);
      Bitset b(I.size());
      for (std::uint32_t d = 0; d < I.size(); ++d) {
        if (t.contains(0, d)) b.set(d);
      }
      total.push_back(b);
    }
    const SimulationTable into_pos = max_simulation(prod, U, inverse);
    const SimulationTable self = max_simulation(U, U, inverse);
    const int lhs_depth = static_cast<int>(prod.size() * U.size());

    for (std::uint32_t d = 0; d < prod.size(); ++d) {
      const auto comps = product_components(factors, d);
      if (!bottom) {
        bool any_total = false;
        for (std::size_t i = 0; i < comps.size(); ++i) any_total = any_total || total[i].test(comps[i]);
        if (any_total) continue;
      }
      CandidateOutcome outcome{describe(neg_instances, comps), true, true};
      std::vector<std::uint32_t> S;
      for (std::uint32_t e = 0; e < U.size(); ++e) {
        if (into_pos.contains(d, e)) S.push_back(e);
      }
      if (S.empty()) {
        outcome.condition1 = false;
        outcome.condition2 = false;
        verdict.certificate.push_back(outcome);
        const Concept lhs = characteristic_concept(prod, d, lhs_depth, inverse);
        const Concept rhs = bottom ? Concept::bottom()
                                   : characteristic_concept(universal, 0, static_cast<int>(max_neg), inverse);
        const ConceptInclusion ci{lhs, rhs};
        verify_witness(ci, P, N);
        verdict.verdict = Verdict::Exists;
        verdict.witness.push_back(ci);
        return verdict;
      }
      const auto reps = simulation_minimal(S, self);
      std::vector<const Interpretation*> pf(reps.size(), &U);
      const PointedProduct J = reachable_product(pf, reps, inverse, limits.max_product_size);
      std::vector<Concept> separators;
      bool maps = false;
      for (std::size_t i = 0; i < negs.size() && !maps; ++i) {
        const SimulationTable t = max_simulation(J.interp, negs[i], inverse);
        if (t.contains(0, comps[i])) {
          maps = true;
        } else {
          separators.push_back(t.separator(0, comps[i]));
        }
      }
      outcome.condition2 = maps;
      verdict.certificate.push_back(outcome);
      if (!maps) {
        const ConceptInclusion ci{characteristic_concept(prod, d, lhs_depth, inverse), Concept::conj(separators)};
        verify_witness(ci, P, N);
        verdict.verdict = Verdict::Exists;
        verdict.witness.push_back(ci);
        return verdict;
      }
    }
    verdict.verdict = Verdict::No;
  } catch (const ResourceLimit& e) {
    verdict.verdict = Verdict::ResourceLimit;
    verdict.note = e.what();
    verdict.witness.clear();
  }
  return verdict;
}

DlFitVerdict el_fit_ontology(const std::vector<Instance>& P, const std::vector<Instance>& N, Dialect dialect,
                             const Limits& limits, OntologyRoute route) {
  check_inputs(P, N);
  DlFitVerdict verdict;
  if (route == OntologyRoute::Characterization) {
    for (std::size_t j = 0; j < N.size(); ++j) {
      DlFitVerdict one = el_fit_tgd(P, {N[j]}, dialect, limits);
      for (auto& c : one.certificate) {
        c.candidate = "negative " + std::to_string(j + 1) + " " + c.candidate;
        verdict.certificate.push_back(c);
      }
      if (!one.exists()) {
        verdict.verdict = one.verdict;
        verdict.note = one.note;
        verdict.witness.clear();
        return verdict;
      }
      if (std::find(verdict.witness.begin(), verdict.witness.end(), one.witness[0]) == verdict.witness.end()) {
        verdict.witness.push_back(one.witness[0]);
      }
    }
    verdict.verdict = Verdict::Exists;
    return verdict;
  }
  try {
    const auto sig = fitting_signature(P, N);
    const Interpretation I = Interpretation::from_instance(disjoint_union(P), sig);
    const DefinableSets D = definable_sets(I, dialect, limits);
    for (std::size_t j = 0; j < N.size(); ++j) {
      const Interpretation Nj = Interpretation::from_instance(N[j], sig);
      auto ci = violated_rule(I, D, allows_inverse(dialect), Nj);
      verdict.certificate.push_back({"negative " + std::to_string(j + 1), true, !ci.has_value()});
      if (!ci) {
        verdict.verdict = Verdict::No;
        verdict.witness.clear();
        return verdict;
      }
      if (std::find(verdict.witness.begin(), verdict.witness.end(), *ci) == verdict.witness.end()) {
        verdict.witness.push_back(*ci);
      }
    }
    for (const auto& I2 : P) {
      if (!satisfies_ontology(I2, verdict.witness)) throw InvariantViolation("basis member fails a positive example");
    }
    for (const auto& I2 : N) {
      if (satisfies_ontology(I2, verdict.witness)) throw InvariantViolation("basis witness holds in a negative example");
    }
    verdict.verdict = Verdict::Exists;
  } catch (const ResourceLimit& e) {
    verdict.verdict = Verdict::ResourceLimit;
    verdict.note = e.what();
    verdict.witness.clear();
  }
  return verdict;
}

ConceptInclusion parse_inclusion(std::string_view line) {
  const std::string_view sep = "SUBCLASSOF";
  const auto pos = line.find(sep);
  if (pos == std::string_view::npos) throw ParseError("expected C SUBCLASSOF D");
  return {parse_concept(line.substr(0, pos)), parse_concept(line.substr(pos + sep.size()))};
}

std::vector<ConceptInclusion> parse_dl_ontology(std::string_view text) {
  std::vector<ConceptInclusion> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_inclusion(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::string format_dl_ontology(const std::vector<ConceptInclusion>& o) {
  std::string out;
  for (const auto& ci : o) out += ci.to_string() + "\n";
  return out;
}

}  // namespace ontofit
