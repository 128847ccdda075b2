#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ontofit/cq.hpp"
#include "ontofit/homomorphism.hpp"
#include "ontofit/instance.hpp"

namespace ontofit {

// body -> exists z. head; both sides index into one variable list.
struct Tgd {
  std::vector<std::string> variables;
  std::vector<Atom> body;
  std::vector<Atom> head;

  // Variables in both body and head, in index order.
  std::vector<std::uint32_t> frontier() const;
  std::vector<std::uint32_t> existentials() const;
  ConjunctiveQuery body_query() const;  // answer = frontier
  ConjunctiveQuery head_query() const;  // answer = frontier
  Schema schema() const;
  std::size_t size() const { return body.size() + head.size(); }
  std::string to_string() const;

  // Joins two CQs on their answer tuples: body.answer[i] is identified with head.answer[i].
  // Head variables outside the answer become fresh existentials.
  static Tgd from_queries(const ConjunctiveQuery& body, const ConjunctiveQuery& head);

  friend bool operator==(const Tgd&, const Tgd&) = default;
};

struct TgdFlags {
  bool full = false;
  bool guarded = false;
  bool frontier_guarded = false;
  bool frontier_one = false;
  bool ind = false;
};

enum class TgdClass { GTGD, FGTGD, F1TGD, FullTGD, IND, TGD };

TgdFlags classify(const Tgd& t);
bool in_class(const Tgd& t, TgdClass c);
std::string class_name(TgdClass c);
TgdClass parse_class(std::string_view name);  // GTGD FGTGD F1TGD FULL IND TGD

using TgdOntology = std::vector<Tgd>;

// Size bounds for enumerating TGDs.
struct TgdBudget {
  std::size_t max_body_atoms = 2;
  std::size_t max_head_atoms = 1;
  std::size_t max_vars = 3;
};

bool model_check(const Instance& instance, const Tgd& t, const Limits& limits = {});
bool model_check(const HomTarget& target, const Tgd& t, const Limits& limits = {});
bool satisfies(const Instance& instance, const TgdOntology& o, const Limits& limits = {});

// Same TGD up to a bijective renaming of variables.
bool tgd_isomorphic(const Tgd& a, const Tgd& b);

// For a TGD without frontier variables: copies the first body atom into the
// head with every variable except its first one made existential.
Tgd frontier_one_rewrite(const Tgd& t);

Tgd parse_tgd(std::string_view text);
TgdOntology parse_tgd_ontology(std::string_view text);
std::string format_tgd_ontology(const TgdOntology& o);

}  // namespace ontofit
