#include <gtest/gtest.h>

#include <set>

#include "ontofit/errors.hpp"
#include "ontofit/generators.hpp"
#include "ontofit/oracle.hpp"
#include "ontofit/tgd_fitting.hpp"
#include "test_support.hpp"

using namespace ontofit;
using namespace ontofit::testing;

namespace {

bool fits(const Tgd& t, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  for (const Instance& p : P)
    if (!brute_satisfies(p, t)) return false;
  for (const Instance& n : N)
    if (brute_satisfies(n, t)) return false;
  return true;
}

}  // namespace

TEST(EnumerateTgds, IndContainsSymmetry) {
  const auto all = enumerate_tgds(Schema{R2()}, TgdClass::IND, TgdBudget{1, 1, 4});
  const Tgd sym = parse_tgd("R(x,y) -> R(y,x)");
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const Tgd& t) { return tgd_isomorphic(t, sym); }));
  for (const Tgd& t : all) EXPECT_TRUE(in_class(t, TgdClass::IND)) << t.to_string();
}

TEST(EnumerateTgds, ZeroBudgetIsEmpty) {
  EXPECT_TRUE(enumerate_tgds(Schema{R2()}, TgdClass::TGD, TgdBudget{0, 1, 3}).empty());
  EXPECT_TRUE(enumerate_tgds(Schema{R2()}, TgdClass::TGD, TgdBudget{1, 0, 3}).empty());
}

TEST(EnumerateTgds, DeterministicAndDeduplicated) {
  for (TgdClass c : {TgdClass::GTGD, TgdClass::F1TGD, TgdClass::FullTGD, TgdClass::IND, TgdClass::TGD}) {
    const auto a = enumerate_tgds(Schema{R2(), A1()}, c, TgdBudget{2, 1, 3});
    const auto b = enumerate_tgds(Schema{R2(), A1()}, c, TgdBudget{2, 1, 3});
    ASSERT_EQ(a.size(), b.size());
    EXPECT_FALSE(a.empty());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i], b[i]);
      EXPECT_TRUE(in_class(a[i], c));
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) ASSERT_FALSE(tgd_isomorphic(a[i], a[j])) << a[i].to_string();
  }
}

TEST(EnumerateTgds, OrderedBySize) {
  const auto all = enumerate_tgds(Schema{R2()}, TgdClass::TGD, TgdBudget{2, 2, 3});
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto key = [](const Tgd& t) { return std::make_tuple(t.body.size(), t.head.size(), t.variables.size()); };
    EXPECT_LE(key(all[i - 1]), key(all[i]));
  }
}

TEST(EnumerateTgds, EarlyStop) {
  std::size_t seen = 0;
  enumerate_tgds(Schema{R2()}, TgdClass::TGD, TgdBudget{2, 1, 3}, [&](const Tgd&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(BruteForceFit, PairAgainstCycleAndClique) {
  const NamedFitting e = example1();
  const auto g = brute_force_fit(e.positives, e.negatives, TgdClass::GTGD, TgdBudget{1, 1, 2});
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(fits(*g, e.positives, e.negatives));

  const NamedFitting f = example1_prime();
  EXPECT_FALSE(brute_force_fit(f.positives, f.negatives, TgdClass::GTGD, TgdBudget{2, 1, 3}).has_value());
  const auto tri = brute_force_fit(f.positives, f.negatives, TgdClass::F1TGD, TgdBudget{3, 1, 3});
  ASSERT_TRUE(tri.has_value());
  EXPECT_TRUE(fits(*tri, f.positives, f.negatives));
  EXPECT_EQ(tri->body.size(), 3u);
}

TEST(SignatureFit, AgreesWithBruteForce) {
  const auto corpus = random_corpus(60, 606);
  const TgdBudget small{2, 1, 3};
  OracleBudget sig;
  sig.max_body_atoms = 2;
  sig.max_head_atoms = 1;
  sig.max_vars = 3;
  sig.dense_vars = 0;
  for (const auto& fi : corpus) {
    for (TgdClass c : {TgdClass::GTGD, TgdClass::F1TGD, TgdClass::FullTGD, TgdClass::IND}) {
      const auto a = brute_force_fit(fi.positives, fi.negatives, c, small);
      const auto b = signature_fit(fi.positives, fi.negatives, c, sig);
      ASSERT_EQ(a.has_value(), b.has_value()) << class_name(c);
      if (b) {
        EXPECT_TRUE(in_class(*b, c));
        EXPECT_TRUE(fits(*b, fi.positives, fi.negatives)) << b->to_string();
      }
    }
  }
}

TEST(DlOracle, FitsWhenFound) {
  const auto corpus = random_corpus(40, 17);
  for (const auto& fi : corpus) {
    const auto r = dl_oracle_fit(fi.positives, fi.negatives, Dialect::ELIbot);
    if (!r) continue;
    for (const Instance& p : fi.positives) EXPECT_TRUE(satisfies_ci(p, *r));
    for (const Instance& n : fi.negatives) EXPECT_FALSE(satisfies_ci(n, *r));
  }
}

TEST(RandomCorpus, ShapeAndDeterminism) {
  const auto a = random_corpus(50, 3);
  const auto b = random_corpus(50, 3);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].positives.size(), b[i].positives.size());
    for (std::size_t j = 0; j < a[i].positives.size(); ++j) EXPECT_EQ(a[i].positives[j].facts(), b[i].positives[j].facts());
    ASSERT_EQ(a[i].negatives.size(), b[i].negatives.size());
    for (std::size_t j = 0; j < a[i].negatives.size(); ++j) EXPECT_EQ(a[i].negatives[j].facts(), b[i].negatives[j].facts());
    EXPECT_GE(a[i].negatives.size(), 1u);
    EXPECT_LE(a[i].negatives.size(), 2u);
    for (const auto* xs : {&a[i].positives, &a[i].negatives})
      for (const Instance& I : *xs) {
        EXPECT_FALSE(I.empty());
        EXPECT_LE(I.adom().size(), 3u);
      }
  }
}

TEST(Generators, Lasso) {
  const Instance L2 = lasso_component(2);
  EXPECT_EQ(L2.size(), 5u);
  const auto a = [](int i) { return "a" + std::to_string(i) + "_2"; };
  for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 2}}) EXPECT_TRUE(L2.contains(fact("R", {a(x), a(y)})));
  EXPECT_TRUE(L2.contains(fact("P", {a(2)})));
  const Instance I1 = lasso(1);
  EXPECT_EQ(I1.size(), 6u);
  EXPECT_TRUE(I1.contains(fact("A", {a(0)})));
  EXPECT_EQ(first_primes(4), (std::vector<std::size_t>{2, 3, 5, 7}));
  EXPECT_EQ(lasso(3).size(), 6u + 8u + 12u);
}

TEST(Generators, IndFamily) {
  const Instance one = ind_family(1);
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(one.schema().max_arity(), 2);
  const Instance two = ind_family(2);
  EXPECT_EQ(two.size(), 6u);
  EXPECT_EQ(two.schema().max_arity(), 4);
  EXPECT_THROW(ind_family(0), UsageError);
}

TEST(Generators, NamedCatalog) {
  const Generated e = gen_named("example1");
  std::size_t nprime = 0;
  for (const auto& [label, I] : e.instances)
    if (label == "Nprime1") nprime = I.facts_of(R2()).size();
  EXPECT_EQ(nprime, 6u);
  EXPECT_EQ(gen_named("omega_I").tgds.size(), 6u);
  const Generated r = gen_named("rho", 3);
  ASSERT_EQ(r.tgds.size(), 1u);
  EXPECT_TRUE(tgd_isomorphic(r.tgds[0], parse_tgd("R(x,y), R(y,z), R(z,x) -> R(x,x)")));
  EXPECT_THROW(gen_named("no-such-family"), UsageError);
  for (const std::string& name : generator_names()) EXPECT_NO_THROW(gen_named(name));
}

TEST(Generators, OmegaHoldsInPairAndRhoOddOnly) {
  for (const Tgd& t : omega_I()) EXPECT_TRUE(brute_satisfies(bidirected_pair(), t)) << t.to_string();
  for (std::size_t n : {3u, 5u}) EXPECT_TRUE(brute_satisfies(bidirected_pair(), rho(n)));
  for (std::size_t n : {2u, 4u}) EXPECT_FALSE(brute_satisfies(bidirected_pair(), rho(n)));
}
