#include <gtest/gtest.h>

#include <algorithm>

#include "ontofit/dl_concepts.hpp"
#include "ontofit/dl_fitting.hpp"
#include "ontofit/errors.hpp"
#include "ontofit/generators.hpp"
#include "ontofit/operations.hpp"
#include "ontofit/oracle.hpp"
#include "test_support.hpp"

using namespace ontofit;
using namespace ontofit::testing;

namespace {

const Dialect kDialects[] = {Dialect::EL, Dialect::ELI, Dialect::ELbot, Dialect::ELIbot};

Concept ex(Concept c) { return Concept::exists(Role{R2(), false}, c); }

bool brute_ci(const Instance& I, const ConceptInclusion& ci) {
  const auto lhs = brute_extension(ci.lhs, I);
  const auto rhs = brute_extension(ci.rhs, I);
  return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

bool brute_fits(const std::vector<ConceptInclusion>& o, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  for (const Instance& p : P)
    for (const auto& ci : o)
      if (!brute_ci(p, ci)) return false;
  for (const Instance& n : N) {
    bool violated = false;
    for (const auto& ci : o) violated = violated || !brute_ci(n, ci);
    if (!violated) return false;
  }
  return true;
}

std::vector<std::string> sorted_lines(const DlOntology& o) {
  std::vector<std::string> out;
  for (const auto& ci : o.inclusions) out.push_back(ci.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t adom_product(const std::vector<Instance>& xs) {
  std::size_t n = 1;
  for (const auto& x : xs) n *= x.adom().size();
  return n;
}

std::size_t adom_sum(const std::vector<Instance>& xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n += x.adom().size();
  return n;
}

}  // namespace

TEST(SatisfiesCi, Examples) {
  const ConceptInclusion a{ex(Concept::top()), ex(ex(Concept::top()))};
  EXPECT_TRUE(satisfies_ci(bidirected_pair(), a));
  const ConceptInclusion b{ex(ex(Concept::top())), Concept::bottom()};
  EXPECT_FALSE(satisfies_ci(Instance{fact("R", {"a", "a"})}, b));
  EXPECT_TRUE(satisfies_ci(directed_cycle(3), ConceptInclusion{ex(Concept::top()), Concept::top()}));
  EXPECT_TRUE(satisfies_ci(Instance{}, b));
}

TEST(SatisfiesOntology, Examples) {
  EXPECT_TRUE(satisfies_ontology(directed_cycle(3), std::vector<ConceptInclusion>{}));
  const DlOntology basis = el_basis({bidirected_pair()}, Dialect::ELI);
  EXPECT_TRUE(satisfies_ontology(bidirected_pair(), basis));
  // the pair has no ELI fit against the 3-cycle, so the 3-cycle satisfies its basis
  EXPECT_TRUE(satisfies_ontology(directed_cycle(3), basis));
  EXPECT_FALSE(satisfies_ontology(Instance{fact("R", {"a", "b"})}, basis));
}

TEST(ElBasis, UnarySchemaForcesTopIntoA) {
  const Schema wide{A1(), intern_symbol("B", 1)};
  const DlOntology o = el_basis({Instance{fact("A", {"a"})}}, Dialect::EL, {}, &wide);
  EXPECT_TRUE(satisfies_ontology(Instance{fact("A", {"a"})}, o));
  EXPECT_FALSE(satisfies_ontology(Instance{fact("B", {"b"})}, o));
  EXPECT_FALSE(satisfies_ci(Instance{fact("B", {"b"})}, ConceptInclusion{Concept::top(), Concept::name(A1())}));
}

TEST(ElBasis, SoundOnRandomInstances) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const Instance I = random_graph(rng, 1 + rng() % 4, 0.35, rng() % 2 == 0);
    if (I.empty()) continue;
    for (Dialect d : kDialects) {
      const DlOntology o = el_basis({I}, d);
      EXPECT_TRUE(satisfies_ontology(I, o));
      for (const auto& ci : o.inclusions) EXPECT_TRUE(brute_ci(I, ci)) << ci.to_string();
    }
  }
}

TEST(ElBasis, DefinedThroughDisjointUnion) {
  const std::vector<Instance> H{Instance{fact("R", {"a", "b"})}, Instance{fact("R", {"b", "a"})}};
  EXPECT_EQ(sorted_lines(el_basis(H, Dialect::ELI)), sorted_lines(el_basis({disjoint_union(H)}, Dialect::ELI)));
}

TEST(ElBasis, DomainCap) {
  Instance big;
  for (int i = 0; i < 6; ++i)
    big.add(R2(), {Value::atom("v" + std::to_string(i)), Value::atom("v" + std::to_string(i + 1))});
  Limits limits;
  limits.max_basis_domain = 5;
  EXPECT_THROW(el_basis({big}, Dialect::EL, limits), ResourceLimit);
}

TEST(ElFitTgd, BottomExample) {
  const NamedFitting f = bottom_example();
  EXPECT_EQ(el_fit_tgd(f.positives, f.negatives, Dialect::EL).verdict, Verdict::No);
  EXPECT_EQ(el_fit_tgd(f.positives, f.negatives, Dialect::ELI).verdict, Verdict::No);
  for (Dialect d : {Dialect::ELbot, Dialect::ELIbot}) {
    const auto r = el_fit_tgd(f.positives, f.negatives, d);
    ASSERT_EQ(r.verdict, Verdict::Exists);
    ASSERT_EQ(r.witness.size(), 1u);
    EXPECT_TRUE(brute_fits(r.witness, f.positives, f.negatives));
  }
  const ConceptInclusion known{ex(ex(Concept::top())), Concept::bottom()};
  EXPECT_TRUE(brute_fits({known}, f.positives, f.negatives));
}

TEST(ElFitTgd, PairAgainstCycleHasNoEliFit) {
  const NamedFitting f = example1();
  EXPECT_EQ(el_fit_tgd(f.positives, f.negatives, Dialect::ELI).verdict, Verdict::No);
  EXPECT_EQ(el_fit_ontology(f.positives, f.negatives, Dialect::ELI).verdict, Verdict::No);
  EXPECT_EQ(el_fit_ontology(f.positives, f.negatives, Dialect::ELI, {}, OntologyRoute::Basis).verdict, Verdict::No);
}

TEST(ElFitOntology, ConceptNameExample) {
  const std::vector<Instance> P{Instance{fact("A", {"a"}), fact("B", {"a"})}};
  const std::vector<Instance> N{Instance{fact("A", {"a"})}};
  for (OntologyRoute route : {OntologyRoute::Characterization, OntologyRoute::Basis}) {
    const auto r = el_fit_ontology(P, N, Dialect::EL, {}, route);
    ASSERT_EQ(r.verdict, Verdict::Exists);
    EXPECT_TRUE(brute_fits(r.witness, P, N));
  }
  const ConceptInclusion ab{Concept::name(A1()), Concept::name(intern_symbol("B", 1))};
  EXPECT_TRUE(brute_fits({ab}, P, N));
}

TEST(ElFitOntology, AtMostOneInclusionPerNegative) {
  const auto corpus = random_corpus(60, 77);
  for (const auto& fi : corpus) {
    bool binary_only = true;
    for (const auto* xs : {&fi.positives, &fi.negatives})
      for (const auto& I : *xs) binary_only = binary_only && I.schema().max_arity() <= 2;
    if (!binary_only) continue;
    const auto r = el_fit_ontology(fi.positives, fi.negatives, Dialect::ELI);
    if (r.exists()) EXPECT_LE(r.witness.size(), fi.negatives.size());
  }
}

TEST(ElFitting, WitnessesFitAndAgreeWithOracle) {
  const auto corpus = random_corpus(150, 1234);
  for (const auto& fi : corpus) {
    for (Dialect d : kDialects) {
      const auto r = el_fit_tgd(fi.positives, fi.negatives, d);
      ASSERT_NE(r.verdict, Verdict::ResourceLimit);
      const auto oracle = dl_oracle_fit(fi.positives, fi.negatives, d);
      ASSERT_EQ(r.exists(), oracle.has_value()) << dialect_name(d);
      if (oracle) EXPECT_TRUE(brute_fits({*oracle}, fi.positives, fi.negatives));
      if (!r.exists()) continue;
      EXPECT_TRUE(brute_fits(r.witness, fi.positives, fi.negatives));
      const auto& w = r.witness[0];
      EXPECT_TRUE(allows_inverse(d) || (!uses_inverse(w.lhs) && !uses_inverse(w.rhs)));
      EXPECT_TRUE(allows_bottom(d) || (!uses_bottom(w.lhs) && !uses_bottom(w.rhs)));
      const std::size_t n = adom_product(fi.negatives) * (adom_sum(fi.positives) + 1);
      EXPECT_LE(succinct_size(w.lhs) + succinct_size(w.rhs), 8 * (n + 2) * (n + 2));
    }
  }
}

TEST(ElFitting, RoutesAgree) {
  const auto corpus = random_corpus(200, 99);
  for (const auto& fi : corpus) {
    for (Dialect d : kDialects) {
      const auto a = el_fit_ontology(fi.positives, fi.negatives, d, {}, OntologyRoute::Characterization);
      const auto b = el_fit_ontology(fi.positives, fi.negatives, d, {}, OntologyRoute::Basis);
      ASSERT_EQ(a.verdict, b.verdict) << dialect_name(d);
      if (a.exists()) EXPECT_TRUE(brute_fits(a.witness, fi.positives, fi.negatives));
      if (b.exists()) EXPECT_TRUE(brute_fits(b.witness, fi.positives, fi.negatives));
    }
  }
}

TEST(InclusionIo, RoundTrip) {
  const auto o = parse_dl_ontology("A SUBCLASSOF EX R. B\n# note\n(A AND B) SUBCLASSOF BOT\n");
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(parse_dl_ontology(format_dl_ontology(o)), o);
  EXPECT_THROW(parse_inclusion("A B"), ParseError);
}
