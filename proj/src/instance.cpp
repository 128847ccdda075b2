#include "ontofit/instance.hpp"

#include <algorithm>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace {

bool symbol_order(Symbol a, Symbol b) {
  const auto& na = symbol_name(a);
  const auto& nb = symbol_name(b);
  if (na != nb) return na < nb;
  return symbol_arity(a) < symbol_arity(b);
}

const std::vector<std::size_t> kNoFacts;

}  // namespace

Schema::Schema(std::initializer_list<Symbol> symbols) {
  for (Symbol s : symbols) add(s);
}

void Schema::add(Symbol s) {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s, symbol_order);
  if (it != symbols_.end() && *it == s) return;
  for (Symbol t : symbols_) {
    if (symbol_name(t) == symbol_name(s)) {
      throw UsageError("symbol " + symbol_name(s) + " used with arities " + std::to_string(symbol_arity(t)) +
                       " and " + std::to_string(symbol_arity(s)));
    }
  }
  symbols_.insert(it, s);
}

bool Schema::contains(Symbol s) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), s, symbol_order);
}

int Schema::max_arity() const {
  int m = 0;
  for (Symbol s : symbols_) m = std::max(m, symbol_arity(s));
  return m;
}

std::string Schema::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ", ";
    out += symbol_name(symbols_[i]) + "/" + std::to_string(symbol_arity(symbols_[i]));
  }
  return out + "}";
}

Schema Schema::merge(const Schema& a, const Schema& b) {
  Schema out = a;
  for (Symbol s : b.symbols_) out.add(s);
  return out;
}

std::string Fact::to_string() const {
  std::string out = symbol_name(symbol) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].to_string();
  }
  return out + ")";
}

std::size_t FactHash::operator()(const Fact& f) const noexcept {
  std::size_t h = f.symbol * 0x9E3779B97F4A7C15ull;
  for (Value v : f.args) h = (h ^ v.id()) * 0x100000001B3ull + (h >> 29);
  return h;
}

Instance::Instance(std::initializer_list<Fact> facts) {
  for (const Fact& f : facts) add(f);
}

bool Instance::add(const Fact& f) {
  if (static_cast<int>(f.args.size()) != symbol_arity(f.symbol)) {
    throw UsageError("fact " + f.to_string() + " does not match the arity of its symbol");
  }
  if (set_.count(f)) return false;
  schema_.add(f.symbol);
  set_.insert(f);
  by_symbol_[f.symbol].push_back(facts_.size());
  facts_.push_back(f);
  for (Value v : f.args) {
    if (position_.emplace(v, adom_.size()).second) adom_.push_back(v);
  }
  return true;
}

void Instance::extend_schema(const Schema& s) {
  for (Symbol x : s.symbols()) schema_.add(x);
}

bool Instance::contains(Symbol s, std::span<const Value> args) const {
  return set_.count(Fact{s, std::vector<Value>(args.begin(), args.end())}) != 0;
}

std::optional<std::size_t> Instance::position(Value v) const {
  auto it = position_.find(v);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& Instance::facts_of(Symbol s) const {
  auto it = by_symbol_.find(s);
  return it == by_symbol_.end() ? kNoFacts : it->second;
}

std::string Instance::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < facts_.size(); ++i) {
    if (i) out += ", ";
    out += facts_[i].to_string();
  }
  return out + "}";
}

Fact fact(std::string_view symbol, std::initializer_list<std::string_view> args) {
  Fact f{intern_symbol(symbol, static_cast<int>(args.size())), {}};
  for (auto a : args) f.args.push_back(Value::atom(a));
  return f;
}

}  // namespace ontofit
