#include "ontofit/generators.hpp"

#include "ontofit/errors.hpp"

namespace ontofit {

namespace {

Value v(const std::string& name) { return Value::atom(name); }

Symbol R2() { return intern_symbol("R", 2); }

}  // namespace

Instance bidirected_pair() { return Instance{fact("R", {"a", "b"}), fact("R", {"b", "a"})}; }

Instance directed_cycle(std::size_t n) {
  if (n == 0) throw UsageError("cycle length must be positive");
  if (n == 3) return Instance{fact("R", {"a", "b"}), fact("R", {"b", "c"}), fact("R", {"c", "a"})};
  Instance I;
  for (std::size_t i = 1; i <= n; ++i) {
    I.add(R2(), {v("a" + std::to_string(i)), v("a" + std::to_string(i % n + 1))});
  }
  return I;
}

Instance bidirected_clique3() {
  Instance I = directed_cycle(3);
  for (const char* e : {"ba", "cb", "ac"}) I.add(R2(), {v(std::string(1, e[0])), v(std::string(1, e[1]))});
  return I;
}

NamedFitting example1() { return {{bidirected_pair()}, {directed_cycle(3)}}; }
NamedFitting example1_prime() { return {{bidirected_pair()}, {bidirected_clique3()}}; }
NamedFitting bottom_example() { return {{Instance{fact("R", {"a", "b"})}}, {Instance{fact("R", {"a", "a"})}}}; }

NamedFitting fullhead_example() {
  return {{Instance{fact("A", {"a"}), fact("B1", {"a"}), fact("B2", {"a"})}},
          {Instance{fact("A", {"a"}), fact("B1", {"a"})}, Instance{fact("A", {"a"}), fact("B2", {"a"})}}};
}

TgdOntology omega_I() {
  TgdOntology o{parse_tgd("R(x,y) -> R(y,x)"), parse_tgd("R(x,y), R(y,z), R(z,u) -> R(x,u)")};
  for (const char* ty : {"R(u1,y)", "R(y,u1)"}) {
    for (const char* tz : {"R(u2,z)", "R(z,u2)"}) {
      o.push_back(parse_tgd(std::string("R(x,x), ") + ty + ", " + tz + " -> R(y,z)"));
    }
  }
  return o;
}

Tgd rho(std::size_t n) {
  if (n == 0) throw UsageError("cycle length must be positive");
  std::string body;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) body += ", ";
    body += "R(x" + std::to_string(i) + ",x" + std::to_string(i % n + 1) + ")";
  }
  return parse_tgd(body + " -> R(x1,x1)");
}

Instance lasso_component(std::size_t m) {
  if (m == 0) throw UsageError("lasso parameter must be positive");
  auto a = [&](std::size_t i) { return v("a" + std::to_string(i) + "_" + std::to_string(m)); };
  Instance I;
  for (std::size_t i = 0; i + 1 < 2 * m; ++i) I.add(R2(), {a(i), a(i + 1)});
  I.add(R2(), {a(2 * m - 1), a(m)});
  I.add(intern_symbol("P", 1), {a(m)});
  return I;
}

std::vector<std::size_t> first_primes(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t c = 2; out.size() < n; ++c) {
    bool prime = true;
    for (std::size_t p : out) prime = prime && c % p != 0;
    if (prime) out.push_back(c);
  }
  return out;
}

Instance lasso(std::size_t n) {
  if (n == 0) throw UsageError("lasso parameter must be positive");
  Instance I;
  for (std::size_t p : first_primes(n)) {
    const Instance L = lasso_component(p);
    for (const Fact& f : L.facts()) I.add(f);
    I.add(intern_symbol("A", 1), {v("a0_" + std::to_string(p))});
  }
  return I;
}

Instance ind_family(std::size_t n) {
  if (n == 0) throw UsageError("family parameter must be positive");
  const Symbol S = intern_symbol("S", static_cast<int>(2 * n));
  const Symbol R = intern_symbol("R", static_cast<int>(2 * n));
  Instance I;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Value> a;
    for (std::size_t j = 1; j <= 2 * n; ++j) a.push_back(v("a" + std::to_string(i) + "_" + std::to_string(j)));
    std::vector<Value> b = a, c = a;
    b[2 * i - 2] = v("b" + std::to_string(i));
    c[2 * i - 1] = v("c" + std::to_string(i));
    I.add(S, a);
    I.add(R, b);
    I.add(R, c);
  }
  return I;
}

Generated gen_named(const std::string& name, std::size_t n) {
  Generated g;
  auto fitting = [&](const NamedFitting& f, const std::string& neg_prefix) {
    for (std::size_t i = 0; i < f.positives.size(); ++i) g.instances.push_back({"P" + std::to_string(i + 1), f.positives[i]});
    for (std::size_t i = 0; i < f.negatives.size(); ++i) {
      g.instances.push_back({neg_prefix + std::to_string(i + 1), f.negatives[i]});
    }
  };
  if (name == "example1") {
    fitting(example1(), "N");
    g.instances.push_back({"Nprime1", bidirected_clique3()});
  } else if (name == "bottom-example") {
    fitting(bottom_example(), "N");
  } else if (name == "fullhead-example") {
    fitting(fullhead_example(), "N");
  } else if (name == "bidirected-pair") {
    g.instances.push_back({"I", bidirected_pair()});
  } else if (name == "omega_I") {
    g.instances.push_back({"I", bidirected_pair()});
    g.tgds = omega_I();
  } else if (name == "rho") {
    g.tgds.push_back(rho(n == 0 ? 3 : n));
  } else if (name == "bidirected-3-clique") {
    g.instances.push_back({"J", bidirected_clique3()});
  } else if (name == "directed-cycle") {
    g.instances.push_back({"C", directed_cycle(n == 0 ? 3 : n)});
  } else if (name == "lasso") {
    g.instances.push_back({"I", lasso(n == 0 ? 1 : n)});
  } else if (name == "ind-family") {
    g.instances.push_back({"I", ind_family(n == 0 ? 2 : n)});
  } else {
    throw UsageError("unknown generator " + name);
  }
  return g;
}

std::vector<std::string> generator_names() {
  return {"example1", "bottom-example", "fullhead-example", "bidirected-pair", "omega_I",
          "rho",      "bidirected-3-clique", "directed-cycle", "lasso", "ind-family"};
}

}  // namespace ontofit
