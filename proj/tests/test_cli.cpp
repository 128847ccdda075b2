#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ontofit/cli.hpp"
#include "ontofit/dl_fitting.hpp"
#include "ontofit/fact_io.hpp"
#include "ontofit/generators.hpp"
#include "ontofit/tgd.hpp"

using namespace ontofit;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

std::string fixture(const std::string& name) { return std::string(ONTOFIT_FIXTURES) + "/" + name; }

CliRun run(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(ONTOFIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> values_of(const std::string& out, const std::string& key) {
  std::vector<std::string> found;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ": ", 0) == 0) found.push_back(line.substr(key.size() + 2));
  }
  return found;
}

const std::string kExample1 = "--pos " + fixture("example1_P1.facts") + " --neg " + fixture("example1_N1.facts");
const std::string kExample1Prime = "--pos " + fixture("example1_P1.facts") + " --neg " + fixture("example1_Nprime1.facts");

}  // namespace

TEST(Cli, FitExistsPairAgainstCycle) {
  EXPECT_EQ(run("fit-exists --class GTGD --mode tgd " + kExample1).status, kExitYes);
  EXPECT_EQ(run("fit-exists --class ELI --mode tgd " + kExample1).status, kExitNo);
  EXPECT_EQ(run("fit-exists --class GTGD --mode tgd " + kExample1Prime).status, kExitNo);
  EXPECT_EQ(run("fit-exists --class F1TGD --mode tgd " + kExample1Prime).status, kExitYes);
}

TEST(Cli, CheckRhoOnPair) {
  EXPECT_EQ(run("check --constraint " + fixture("rho3.tgd") + " --instance " + fixture("bidirected-pair_I.facts")).status,
            kExitYes);
  EXPECT_EQ(
      run("check --constraint " + fixture("rho3.tgd") + " --instance " + fixture("directed-cycle3_C.facts")).status,
      kExitNo);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").status, kExitUsage);
  EXPECT_EQ(run("fit-exists --class GTGD").status, kExitUsage);
  EXPECT_EQ(run("fit-exists --class XTGD --mode tgd " + kExample1).status, kExitUsage);
  const auto bad = std::filesystem::temp_directory_path() / "ontofit_bad.facts";
  std::ofstream(bad) << "R(a,\n";
  EXPECT_EQ(run("fit-exists --class GTGD --mode tgd --pos " + bad.string() + " --neg " + fixture("example1_N1.facts")).status,
            kExitParse);
  std::filesystem::remove(bad);
}

TEST(Cli, ResourceLimit) {
  EXPECT_EQ(run("fit-exists --class TGD --mode tgd --max-subsets 2 " + kExample1Prime).status, kExitLimit);
}

TEST(Cli, WitnessLinesReparse) {
  const CliRun t = run("fit --class GTGD --mode tgd " + kExample1);
  ASSERT_EQ(t.status, kExitYes);
  EXPECT_EQ(values_of(t.out, "verdict"), std::vector<std::string>{"EXISTS"});
  const auto tw = values_of(t.out, "witness");
  ASSERT_EQ(tw.size(), 1u);
  const Tgd w = parse_tgd(tw[0]);
  EXPECT_TRUE(model_check(bidirected_pair(), w));
  EXPECT_FALSE(model_check(directed_cycle(3), w));

  const std::string bottom = "--pos " + fixture("bottom-example_P1.facts") + " --neg " + fixture("bottom-example_N1.facts");
  const CliRun d = run("fit --class ELbot --mode ontology " + bottom);
  ASSERT_EQ(d.status, kExitYes);
  const auto dw = values_of(d.out, "witness");
  ASSERT_FALSE(dw.empty());
  for (const auto& line : dw) EXPECT_NO_THROW(parse_inclusion(line)) << line;

  const CliRun f = run("fit --class FULL --mode ontology --pos " + fixture("fullhead-example_P1.facts") + " --neg " +
                    fixture("fullhead-example_N1.facts") + " " + fixture("fullhead-example_N2.facts"));
  ASSERT_EQ(f.status, kExitYes);
  for (const auto& line : values_of(f.out, "witness")) EXPECT_EQ(parse_tgd(line).head.size(), 1u) << line;
}

TEST(Cli, BasisAndEntail) {
  const CliRun b = run("basis --class GTGD --pruned " + fixture("bidirected-pair_I.facts"));
  ASSERT_EQ(b.status, kExitYes);
  const auto members = values_of(b.out, "tgd");
  EXPECT_FALSE(members.empty());
  for (const auto& line : members) EXPECT_TRUE(model_check(bidirected_pair(), parse_tgd(line))) << line;
  EXPECT_EQ(run("entail --ontology " + fixture("omega_I.tgd") + " --tgd " + fixture("rho5.tgd")).status, kExitYes);
}

TEST(Cli, GenMatchesFixtures) {
  for (const auto& [name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"example1", 0}, {"bottom-example", 0}, {"fullhead-example", 0}, {"bidirected-pair", 0}, {"omega_I", 0},
           {"rho", 3}, {"rho", 5}, {"bidirected-3-clique", 0}, {"directed-cycle", 3}, {"lasso", 1}, {"lasso", 2},
           {"ind-family", 1}, {"ind-family", 2}}) {
    const Generated g = gen_named(name, n);
    const std::string stem = n == 0 ? name : name + std::to_string(n);
    for (const auto& [label, I] : g.instances) {
      std::ifstream in(fixture(stem + "_" + label + ".facts"));
      ASSERT_TRUE(in) << stem << "_" << label;
      std::stringstream text;
      text << in.rdbuf();
      EXPECT_EQ(parse_instance(text.str()).facts(), I.facts()) << stem << "_" << label;
    }
    if (!g.tgds.empty()) {
      std::ifstream in(fixture(stem + ".tgd"));
      ASSERT_TRUE(in) << stem;
      std::stringstream text;
      text << in.rdbuf();
      EXPECT_EQ(parse_tgd_ontology(text.str()), g.tgds) << stem;
    }
  }
}
