#include "ontofit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>

#include "ontofit/chase.hpp"
#include "ontofit/dl_fitting.hpp"
#include "ontofit/errors.hpp"
#include "ontofit/fact_io.hpp"
#include "ontofit/generators.hpp"
#include "ontofit/tgd_basis.hpp"
#include "ontofit/tgd_fitting.hpp"

namespace ontofit {

namespace {

struct Options {
  std::size_t max_product_size = Limits{}.max_product_size;
  std::size_t max_subsets = Limits{}.max_subset_domain;
  std::uint64_t seed = 1;
  bool tree = false;

  std::string cls;
  std::string mode = "tgd";
  std::string route = "characterization";
  std::vector<std::string> pos, neg, files;
  bool pruned = false;
  std::string constraint, instance, ontology, tgd;
  std::size_t rounds = ChaseLimits{}.max_rounds;
  std::string gen_name;
  std::size_t gen_n = 0;
  std::string out_dir;

  Limits limits() const {
    Limits l;
    l.max_product_size = max_product_size;
    l.max_subset_domain = max_subsets;
    return l;
  }
};

bool is_dl_class(const std::string& c) {
  try {
    parse_dialect(c);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Instance> read_all(const std::vector<std::string>& paths) {
  std::vector<Instance> out;
  for (const auto& p : paths) out.push_back(read_instance(p));
  return out;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return kExitYes;
    case Verdict::No:
      return kExitNo;
    case Verdict::ResourceLimit:
      return kExitLimit;
  }
  return kExitInternal;
}

void print_certificate(std::ostream& out, const std::vector<CandidateOutcome>& cert) {
  for (const auto& c : cert) {
    out << "candidate: " << c.candidate << " condition1=" << (c.condition1 ? "true" : "false")
        << " condition2=" << (c.condition2 ? "true" : "false") << "\n";
  }
}

std::uint64_t concept_size(Concept c, bool tree) { return tree ? tree_size(c) : succinct_size(c); }

int run_fit(const Options& o, bool print_witness, std::ostream& out) {
  const auto P = read_all(o.pos);
  const auto N = read_all(o.neg);
  const bool ontology = o.mode == "ontology";
  if (!ontology && o.mode != "tgd") throw UsageError("--mode must be tgd or ontology");
  out << "class: " << o.cls << "\n" << "mode: " << o.mode << "\n";
  if (is_dl_class(o.cls)) {
    const Dialect d = parse_dialect(o.cls);
    OntologyRoute route = OntologyRoute::Characterization;
    if (o.route == "basis") {
      route = OntologyRoute::Basis;
    } else if (o.route != "characterization") {
      throw UsageError("--route must be characterization or basis");
    }
    const DlFitVerdict v = ontology ? el_fit_ontology(P, N, d, o.limits(), route) : el_fit_tgd(P, N, d, o.limits());
    out << "verdict: " << verdict_name(v.verdict) << "\n";
    if (print_witness) {
      for (const auto& ci : v.witness) {
        out << "witness: " << ci.to_string() << "\n";
        out << "witness-size: " << concept_size(ci.lhs, o.tree) + concept_size(ci.rhs, o.tree) << "\n";
      }
      print_certificate(out, v.certificate);
    }
    if (!v.note.empty()) out << "note: " << v.note << "\n";
    return exit_for(v.verdict);
  }
  const TgdClass cls = parse_class(o.cls);
  const TgdFitVerdict v = ontology ? fit_ontology(P, N, cls, o.limits()) : fit_tgd(P, N, cls, o.limits());
  out << "verdict: " << verdict_name(v.verdict) << "\n";
  if (print_witness) {
    for (const auto& t : v.witness) {
      out << "witness: " << t.to_string() << "\n";
      out << "witness-size: " << t.size() << "\n";
    }
    print_certificate(out, v.certificate);
  }
  if (!v.note.empty()) out << "note: " << v.note << "\n";
  return exit_for(v.verdict);
}

int run_basis(const Options& o, std::ostream& out) {
  const auto H = read_all(o.files);
  if (H.empty()) throw UsageError("basis needs at least one instance file");
  out << "class: " << o.cls << "\n";
  std::vector<std::string> lines;
  try {
    if (is_dl_class(o.cls)) {
      const DlOntology b = el_basis(H, parse_dialect(o.cls), o.limits());
      for (const auto& ci : b.inclusions) lines.push_back("inclusion: " + ci.to_string());
    } else {
      const TgdClass cls = parse_class(o.cls);
      TgdOntology b;
      if (cls == TgdClass::GTGD) {
        b = gtgd_basis(H, o.pruned, o.limits());
      } else if (cls == TgdClass::IND) {
        b = ind_basis(H, o.limits());
      } else {
        throw UsageError("bases are constructed for EL, ELI, ELbot, ELIbot, GTGD and IND only");
      }
      for (const auto& t : b) lines.push_back("tgd: " + t.to_string());
    }
  } catch (const ResourceLimit& e) {
    out << "verdict: RESOURCE-LIMIT\nnote: " << e.what() << "\n";
    return kExitLimit;
  }
  std::sort(lines.begin(), lines.end());
  out << "members: " << lines.size() << "\n";
  for (const auto& l : lines) out << l << "\n";
  return kExitYes;
}

int run_check(const Options& o, std::ostream& out) {
  const std::string text = read_text_file(o.constraint);
  const Instance I = read_instance(o.instance);
  bool holds;
  if (text.find("SUBCLASSOF") != std::string::npos) {
    holds = satisfies_ontology(I, parse_dl_ontology(text));
  } else {
    holds = satisfies(I, parse_tgd_ontology(text));
  }
  out << "holds: " << (holds ? "true" : "false") << "\n";
  return holds ? kExitYes : kExitNo;
}

int run_entail(const Options& o, std::ostream& out) {
  const TgdOntology onto = parse_tgd_ontology(read_text_file(o.ontology));
  const TgdOntology goals = parse_tgd_ontology(read_text_file(o.tgd));
  if (goals.empty()) throw UsageError("no TGD in " + o.tgd);
  ChaseLimits limits;
  limits.max_rounds = o.rounds;
  Entailment worst = Entailment::Yes;
  for (const auto& g : goals) {
    const Entailment e = entails(onto, g, limits);
    out << "tgd: " << g.to_string() << "\n" << "entailed: " << entailment_name(e) << "\n";
    if (e == Entailment::No) {
      worst = Entailment::No;
    } else if (e == Entailment::Unknown && worst == Entailment::Yes) {
      worst = Entailment::Unknown;
    }
  }
  return worst == Entailment::Yes ? kExitYes : worst == Entailment::No ? kExitNo : kExitLimit;
}

int run_gen(const Options& o, std::ostream& out) {
  const Generated g = gen_named(o.gen_name, o.gen_n);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  auto emit = [&](const std::string& file, const std::string& body) {
    if (o.out_dir.empty()) {
      out << "# " << file << "\n" << body;
      return;
    }
    const auto path = std::filesystem::path(o.out_dir) / file;
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path.string());
    f << body;
    out << "file: " << path.string() << "\n";
  };
  const std::string stem = o.gen_n == 0 ? o.gen_name : o.gen_name + std::to_string(o.gen_n);
  for (const auto& [label, I] : g.instances) emit(stem + "_" + label + ".facts", format_instance(I));
  if (!g.tgds.empty()) emit(stem + ".tgd", format_tgd_ontology(g.tgds));
  return kExitYes;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fitting and basis construction for TGDs and EL concept inclusions", "ontofit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--max-product-size", o.max_product_size, "Cap on values in one product");
  app.add_option("--max-subsets", o.max_subsets, "Cap on product values for TGD subset enumeration");
  app.add_option("--seed", o.seed, "Seed for random corpus generation");
  auto* succinct = app.add_flag("--succinct", "Report concept sizes as DAG sizes (default)");
  auto* tree = app.add_flag("--tree", "Report concept sizes as tree sizes");
  succinct->excludes(tree);

  const std::string classes = "EL|ELI|ELbot|ELIbot|GTGD|FGTGD|F1TGD|FULL|IND|TGD";
  auto add_fit = [&](const std::string& name, const std::string& desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("--class", o.cls, classes)->required();
    c->add_option("--mode", o.mode, "tgd or ontology");
    c->add_option("--route", o.route, "Ontology route for EL classes: characterization or basis");
    c->add_option("--pos", o.pos, "Positive example files")->required();
    c->add_option("--neg", o.neg, "Negative example files")->required();
    return c;
  };
  auto* fit_exists = add_fit("fit-exists", "Decide whether a fitting constraint exists");
  auto* fit = add_fit("fit", "Construct a fitting constraint");

  auto* basis = app.add_subcommand("basis", "Construct a finite basis");
  basis->add_option("--class", o.cls, "EL|ELI|ELbot|ELIbot|GTGD|IND")->required();
  basis->add_flag("--pruned", o.pruned, "GTGD: bound body atoms by the number of facts plus one");
  basis->add_option("files", o.files, "Instance files")->required();

  auto* check = app.add_subcommand("check", "Check a constraint file against an instance");
  check->add_option("--constraint", o.constraint, "TGD or concept inclusion file")->required();
  check->add_option("--instance", o.instance, "Instance file")->required();

  auto* entail = app.add_subcommand("entail", "Bounded chase entailment");
  entail->add_option("--ontology", o.ontology, "TGD file")->required();
  entail->add_option("--tgd", o.tgd, "File with the TGDs to test")->required();
  entail->add_option("--rounds", o.rounds, "Chase rounds");

  auto* gen = app.add_subcommand("gen", "Print a named instance family");
  gen->add_option("name", o.gen_name, "Generator name")->required();
  gen->add_option("n", o.gen_n, "Family parameter");
  gen->add_option("--out", o.out_dir, "Write files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  o.tree = tree->count() > 0;
  (void)succinct;

  try {
    if (fit_exists->parsed()) return run_fit(o, false, out);
    if (fit->parsed()) return run_fit(o, true, out);
    if (basis->parsed()) return run_basis(o, out);
    if (check->parsed()) return run_check(o, out);
    if (entail->parsed()) return run_entail(o, out);
    if (gen->parsed()) return run_gen(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DialectError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    out << "verdict: RESOURCE-LIMIT\nnote: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ontofit
