#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ontofit/instance.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit {

Instance bidirected_pair();                   // R(a,b), R(b,a)
Instance directed_cycle(std::size_t n);       // R(a1,a2), ..., R(an,a1); n = 3 uses a, b, c
Instance bidirected_clique3();                // R(u,v) for distinct u, v in {a,b,c}

struct NamedFitting {
  std::vector<Instance> positives;
  std::vector<Instance> negatives;
};

NamedFitting example1();        // P = bidirected pair, N = directed 3-cycle
NamedFitting example1_prime();  // P = bidirected pair, N = bidirected 3-clique
NamedFitting bottom_example();  // P = {R(a,b)}, N = {R(a,a)}
NamedFitting fullhead_example();  // P = {A(a),B1(a),B2(a)}, N = {A(a),B1(a)}, {A(a),B2(a)}

// The FullTGD basis of the bidirected pair: symmetry, the three-step rule and
// four loop rules.
TgdOntology omega_I();
// R(x1,x2), ..., R(xn,x1) -> R(x1,x1)
Tgd rho(std::size_t n);

Instance lasso_component(std::size_t m);  // L_m with values a<i>_<m>
Instance lasso(std::size_t n);            // union of L_p and A(a0_p) over the first n primes
Instance ind_family(std::size_t n);
std::vector<std::size_t> first_primes(std::size_t n);

struct Generated {
  std::vector<std::pair<std::string, Instance>> instances;
  TgdOntology tgds;
};

// Names: example1, bottom-example, fullhead-example, bidirected-pair, omega_I,
// rho, bidirected-3-clique, directed-cycle, lasso, ind-family. n is used by
// rho, directed-cycle, lasso and ind-family. Throws UsageError on unknown names.
Generated gen_named(const std::string& name, std::size_t n = 0);
std::vector<std::string> generator_names();

}  // namespace ontofit
