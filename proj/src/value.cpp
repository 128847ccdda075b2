#include "ontofit/value.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace {

struct Node {
  Value::Kind kind;
  std::string name;
  std::vector<Value> parts;
  Value original;
  std::uint32_t index = 0;
};

struct Store {
  std::shared_mutex mu;
  std::deque<Node> nodes;
  std::unordered_map<std::string, std::uint32_t> ids;

  Store() {
    nodes.push_back({Value::Kind::Atom, "", {}, Value(), 0});
    ids.emplace(std::string(1, 'A'), 0);
  }
};

Store& store() {
  static Store s;
  return s;
}

void append_u32(std::string& out, std::uint32_t x) {
  out.append(reinterpret_cast<const char*>(&x), sizeof x);
}

const Node& node(Value v) {
  Store& s = store();
  std::shared_lock lock(s.mu);
  return s.nodes[v.id()];
}

}  // namespace

// Builds the node lazily so lookups of existing values allocate only the key.
template <class Make>
static std::uint32_t intern(const std::string& key, Make make) {
  Store& s = store();
  {
    std::shared_lock lock(s.mu);
    auto it = s.ids.find(key);
    if (it != s.ids.end()) return it->second;
  }
  std::unique_lock lock(s.mu);
  auto it = s.ids.find(key);
  if (it != s.ids.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(s.nodes.size());
  s.nodes.push_back(make());
  s.ids.emplace(key, id);
  return id;
}

Value Value::atom(std::string_view name) {
  std::string key(1, 'A');
  key.append(name);
  return Value(intern(key, [&] { return Node{Kind::Atom, std::string(name), {}, Value(), 0}; }));
}

Value Value::tuple(std::span<const Value> parts) {
  std::string key(1, 'T');
  for (Value p : parts) append_u32(key, p.id());
  return Value(intern(key, [&] { return Node{Kind::Tuple, "", {parts.begin(), parts.end()}, Value(), 0}; }));
}

Value Value::clone(Value original, std::uint32_t index) {
  std::string key(1, 'C');
  append_u32(key, original.id());
  append_u32(key, index);
  return Value(intern(key, [&] { return Node{Kind::Clone, "", {}, original, index}; }));
}

Value Value::tagged(Value original, std::uint32_t source) {
  std::string key(1, 'G');
  append_u32(key, original.id());
  append_u32(key, source);
  return Value(intern(key, [&] { return Node{Kind::Tagged, "", {}, original, source}; }));
}

Value::Kind Value::kind() const { return node(*this).kind; }
const std::string& Value::name() const { return node(*this).name; }
const std::vector<Value>& Value::parts() const { return node(*this).parts; }
Value Value::original() const { return node(*this).original; }
std::uint32_t Value::index() const { return node(*this).index; }

std::string Value::to_string() const {
  const Node& n = node(*this);
  switch (n.kind) {
    case Kind::Atom:
      return n.name;
    case Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.parts.size(); ++i) {
        if (i) out += ",";
        out += n.parts[i].to_string();
      }
      return out + ")";
    }
    case Kind::Clone:
      return n.original.to_string() + "*" + (n.index ? std::to_string(n.index) : "");
    case Kind::Tagged:
      return n.original.to_string() + "@" + std::to_string(n.index);
  }
  return {};
}

bool value_less(Value a, Value b) {
  if (a == b) return false;
  const Node& x = node(a);
  const Node& y = node(b);
  if (x.kind != y.kind) return x.kind < y.kind;
  switch (x.kind) {
    case Value::Kind::Atom:
      return x.name < y.name;
    case Value::Kind::Tuple:
      return std::lexicographical_compare(x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end(),
                                          value_less);
    case Value::Kind::Clone:
    case Value::Kind::Tagged:
      if (x.original != y.original) return value_less(x.original, y.original);
      return x.index < y.index;
  }
  return false;
}

std::vector<Value> atoms(std::initializer_list<std::string_view> names) {
  std::vector<Value> out;
  for (auto n : names) out.push_back(Value::atom(n));
  return out;
}

}  // namespace ontofit
