#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ontofit/instance.hpp"
#include "ontofit/limits.hpp"

namespace ontofit {

struct Atom {
  Symbol symbol;
  std::vector<std::uint32_t> args;  // variable indices
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct ConjunctiveQuery {
  std::vector<std::string> variables;
  std::vector<std::uint32_t> answer;
  std::vector<Atom> atoms;

  bool is_safe() const;
  bool is_guarded() const;
  Schema schema() const;
  std::string to_string() const;  // q(x,y) :- R(x,y), S(y)
};

std::string format_atom(const Atom& a, const std::vector<std::string>& names);

// Variables become atomic values named after them.
PointedInstance canonical_instance(const ConjunctiveQuery& q);

// Point values get answer names prefix1..prefixk, the rest other1..
// Throws PreconditionError on repeats or point values outside the active domain.
ConjunctiveQuery canonical_cq(const PointedInstance& p, const std::string& answer_prefix = "x",
                              const std::string& other_prefix = "y");

std::vector<std::vector<Value>> evaluate_cq(const ConjunctiveQuery& q, const Instance& instance,
                                            const Limits& limits = {});

// Same CQ up to renaming of variables (answer positions must correspond).
bool isomorphic(const ConjunctiveQuery& a, const ConjunctiveQuery& b);

}  // namespace ontofit
