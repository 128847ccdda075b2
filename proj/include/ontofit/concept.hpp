#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ontofit/symbols.hpp"

namespace ontofit {

enum class Dialect { EL, ELI, ELbot, ELIbot };

bool allows_inverse(Dialect d);
bool allows_bottom(Dialect d);
std::string dialect_name(Dialect d);  // EL, ELI, ELbot, ELIbot
Dialect parse_dialect(std::string_view name);

struct Role {
  Symbol name;
  bool inverse = false;
  friend bool operator==(const Role&, const Role&) = default;
};

// Node of the process-wide hash-consed concept DAG.
class Concept {
 public:
  enum class Kind : std::uint8_t { Top, Bottom, Name, And, Exists };

  Concept() = default;  // TOP

  static Concept top();
  static Concept bottom();
  static Concept name(Symbol concept_name);
  // Flattens nested conjunctions, sorts and dedups; zero children give TOP,
  // one child gives the child itself.
  static Concept conj(std::vector<Concept> children);
  static Concept exists(Role role, Concept child);

  Kind kind() const;
  Symbol symbol() const;                        // Name
  Role role() const;                            // Exists
  Concept child() const;                        // Exists
  const std::vector<Concept>& children() const;  // And

  std::uint32_t id() const { return id_; }
  std::string to_string() const;

  friend bool operator==(Concept a, Concept b) { return a.id_ == b.id_; }
  friend bool operator!=(Concept a, Concept b) { return a.id_ != b.id_; }
  friend bool operator<(Concept a, Concept b) { return a.id_ < b.id_; }

  static Concept from_id(std::uint32_t id) { return Concept(id); }

 private:
  explicit Concept(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Number of nodes of the tree unfolding (saturates at UINT64_MAX).
std::uint64_t tree_size(Concept c);
// Number of distinct DAG nodes reachable from c.
std::uint64_t succinct_size(Concept c);
int role_depth(Concept c);
// Largest number of existential restrictions conjoined at one node.
int outdegree(Concept c);
bool uses_inverse(Concept c);
bool uses_bottom(Concept c);

// TOP | BOT | A | (C AND D ...) | EX R. C | EX R-. C
Concept parse_concept(std::string_view text);

}  // namespace ontofit

template <>
struct std::hash<ontofit::Concept> {
  std::size_t operator()(ontofit::Concept c) const noexcept { return std::hash<std::uint32_t>()(c.id()); }
};
