#include "ontofit/symbols.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace {

struct Entry {
  std::string name;
  int arity;
};

struct Table {
  std::shared_mutex mu;
  std::deque<Entry> entries;
  std::unordered_map<std::string, Symbol> ids;
};

Table& table() {
  static Table t;
  return t;
}

std::string key(std::string_view name, int arity) {
  return std::string(name) + "/" + std::to_string(arity);
}

}  // namespace

Symbol intern_symbol(std::string_view name, int arity) {
  if (arity < 1) throw UsageError("symbol " + std::string(name) + " needs arity >= 1");
  Table& t = table();
  const std::string k = key(name, arity);
  {
    std::shared_lock lock(t.mu);
    auto it = t.ids.find(k);
    if (it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mu);
  auto it = t.ids.find(k);
  if (it != t.ids.end()) return it->second;
  const auto id = static_cast<Symbol>(t.entries.size());
  t.entries.push_back({std::string(name), arity});
  t.ids.emplace(k, id);
  return id;
}

const std::string& symbol_name(Symbol s) {
  Table& t = table();
  std::shared_lock lock(t.mu);
  return t.entries.at(s).name;
}

int symbol_arity(Symbol s) {
  Table& t = table();
  std::shared_lock lock(t.mu);
  return t.entries.at(s).arity;
}

}  // namespace ontofit
