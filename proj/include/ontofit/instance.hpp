#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ontofit/symbols.hpp"
#include "ontofit/value.hpp"

namespace ontofit {

class Schema {
 public:
  Schema() = default;
  Schema(std::initializer_list<Symbol> symbols);

  // Throws UsageError when a symbol with the same name but another arity exists.
  void add(Symbol s);
  bool contains(Symbol s) const;
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }
  int max_arity() const;
  std::string to_string() const;

  static Schema merge(const Schema& a, const Schema& b);
  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  std::vector<Symbol> symbols_;  // sorted by (name, arity)
};

struct Fact {
  Symbol symbol;
  std::vector<Value> args;

  std::string to_string() const;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct FactHash {
  std::size_t operator()(const Fact& f) const noexcept;
};

class Instance {
 public:
  Instance() = default;
  explicit Instance(Schema schema) : schema_(std::move(schema)) {}
  Instance(std::initializer_list<Fact> facts);

  // Returns false when the fact was already present.
  bool add(const Fact& f);
  bool add(Symbol s, std::vector<Value> args) { return add(Fact{s, std::move(args)}); }
  void extend_schema(const Schema& s);

  const Schema& schema() const { return schema_; }
  const std::vector<Fact>& facts() const { return facts_; }
  const std::vector<Value>& adom() const { return adom_; }
  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }

  bool contains(const Fact& f) const { return set_.count(f) != 0; }
  bool contains(Symbol s, std::span<const Value> args) const;
  bool in_adom(Value v) const { return position_.count(v) != 0; }
  // position in the fixed adom order (first occurrence in fact insertion order)
  std::optional<std::size_t> position(Value v) const;
  const std::vector<std::size_t>& facts_of(Symbol s) const;

  std::string to_string() const;

 private:
  Schema schema_;
  std::vector<Fact> facts_;
  std::unordered_set<Fact, FactHash> set_;
  std::vector<Value> adom_;
  std::unordered_map<Value, std::size_t> position_;
  std::unordered_map<Symbol, std::vector<std::size_t>> by_symbol_;
};

struct PointedInstance {
  Instance instance;
  std::vector<Value> point;
};

// Fact over atomic values, e.g. fact("R", {"a", "b"}).
Fact fact(std::string_view symbol, std::initializer_list<std::string_view> args);

}  // namespace ontofit
