#include "ontofit/concept.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace {

struct Node {
  Concept::Kind kind;
  Symbol symbol = 0;
  bool inverse = false;
  std::vector<Concept> children;  // And: all; Exists: one
};

struct Store {
  std::shared_mutex mu;
  std::deque<Node> nodes;
  std::unordered_map<std::string, std::uint32_t> ids;
};

void append_u32(std::string& out, std::uint32_t x) { out.append(reinterpret_cast<const char*>(&x), sizeof x); }

std::string key_of(const Node& n) {
  std::string k(1, static_cast<char>(n.kind));
  append_u32(k, n.symbol);
  k.push_back(n.inverse ? 1 : 0);
  for (Concept c : n.children) append_u32(k, c.id());
  return k;
}

Store& make_store();

Store& store() {
  static Store& s = make_store();
  return s;
}

std::uint32_t intern(Node n) {
  Store& s = store();
  const std::string k = key_of(n);
  {
    std::shared_lock lock(s.mu);
    auto it = s.ids.find(k);
    if (it != s.ids.end()) return it->second;
  }
  std::unique_lock lock(s.mu);
  auto it = s.ids.find(k);
  if (it != s.ids.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(s.nodes.size());
  s.ids.emplace(k, id);
  s.nodes.push_back(std::move(n));
  return id;
}

Store& make_store() {
  static Store s;
  // ids 0 and 1 are TOP and BOT
  for (auto kind : {Concept::Kind::Top, Concept::Kind::Bottom}) {
    Node n{kind, 0, false, {}};
    s.ids.emplace(key_of(n), static_cast<std::uint32_t>(s.nodes.size()));
    s.nodes.push_back(n);
  }
  return s;
}

const Node& node(Concept c) {
  Store& s = store();
  std::shared_lock lock(s.mu);
  return s.nodes[c.id()];
}

}  // namespace

bool allows_inverse(Dialect d) { return d == Dialect::ELI || d == Dialect::ELIbot; }
bool allows_bottom(Dialect d) { return d == Dialect::ELbot || d == Dialect::ELIbot; }

std::string dialect_name(Dialect d) {
  switch (d) {
    case Dialect::EL:
      return "EL";
    case Dialect::ELI:
      return "ELI";
    case Dialect::ELbot:
      return "ELbot";
    case Dialect::ELIbot:
      return "ELIbot";
  }
  return {};
}

Dialect parse_dialect(std::string_view name) {
  if (name == "EL") return Dialect::EL;
  if (name == "ELI") return Dialect::ELI;
  if (name == "ELbot") return Dialect::ELbot;
  if (name == "ELIbot") return Dialect::ELIbot;
  throw UsageError("unknown dialect " + std::string(name));
}

Concept Concept::top() { return Concept(0); }
Concept Concept::bottom() { return Concept(1); }

Concept Concept::name(Symbol concept_name) {
  if (symbol_arity(concept_name) != 1) throw DialectError("concept names must be unary");
  return Concept(intern(Node{Kind::Name, concept_name, false, {}}));
}

Concept Concept::conj(std::vector<Concept> children) {
  std::vector<Concept> flat;
  for (Concept c : children) {
    if (c.kind() == Kind::And) {
      const auto& sub = c.children();
      flat.insert(flat.end(), sub.begin(), sub.end());
    } else {
      flat.push_back(c);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat[0];
  return Concept(intern(Node{Kind::And, 0, false, std::move(flat)}));
}

Concept Concept::exists(Role role, Concept child) {
  if (symbol_arity(role.name) != 2) throw DialectError("role names must be binary");
  return Concept(intern(Node{Kind::Exists, role.name, role.inverse, {child}}));
}

Concept::Kind Concept::kind() const { return node(*this).kind; }
Symbol Concept::symbol() const { return node(*this).symbol; }
Role Concept::role() const {
  const Node& n = node(*this);
  return Role{n.symbol, n.inverse};
}
Concept Concept::child() const { return node(*this).children.at(0); }
const std::vector<Concept>& Concept::children() const { return node(*this).children; }

std::string Concept::to_string() const {
  const Node& n = node(*this);
  switch (n.kind) {
    case Kind::Top:
      return "TOP";
    case Kind::Bottom:
      return "BOT";
    case Kind::Name:
      return symbol_name(n.symbol);
    case Kind::And: {
      std::string out = "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += " AND ";
        out += n.children[i].to_string();
      }
      return out + ")";
    }
    case Kind::Exists:
      return "EX " + symbol_name(n.symbol) + (n.inverse ? "-" : "") + ". " + n.children[0].to_string();
  }
  return {};
}

namespace {

// Post-order over the DAG, each node once.
template <class Visit>
void post_order(Concept root, Visit visit) {
  std::unordered_set<std::uint32_t> done;
  std::vector<std::pair<Concept, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [c, expanded] = stack.back();
    stack.pop_back();
    if (done.count(c.id())) continue;
    if (expanded) {
      done.insert(c.id());
      visit(c);
      continue;
    }
    stack.push_back({c, true});
    const Node& n = node(c);
    for (Concept ch : n.children) {
      if (!done.count(ch.id())) stack.push_back({ch, false});
    }
  }
}

}  // namespace

std::uint64_t tree_size(Concept c) {
  std::unordered_map<std::uint32_t, std::uint64_t> size;
  const std::uint64_t cap = UINT64_MAX;
  post_order(c, [&](Concept x) {
    std::uint64_t s = 1;
    for (Concept ch : node(x).children) {
      const std::uint64_t t = size.at(ch.id());
      s = (cap - s < t) ? cap : s + t;
    }
    size[x.id()] = s;
  });
  return size.at(c.id());
}

std::uint64_t succinct_size(Concept c) {
  std::uint64_t n = 0;
  post_order(c, [&](Concept) { ++n; });
  return n;
}

int role_depth(Concept c) {
  std::unordered_map<std::uint32_t, int> depth;
  post_order(c, [&](Concept x) {
    const Node& n = node(x);
    int d = 0;
    for (Concept ch : n.children) d = std::max(d, depth.at(ch.id()));
    depth[x.id()] = d + (n.kind == Concept::Kind::Exists ? 1 : 0);
  });
  return depth.at(c.id());
}

int outdegree(Concept c) {
  int best = 0;
  post_order(c, [&](Concept x) {
    const Node& n = node(x);
    if (n.kind == Concept::Kind::Exists) best = std::max(best, 1);
    if (n.kind == Concept::Kind::And) {
      int k = 0;
      for (Concept ch : n.children) k += ch.kind() == Concept::Kind::Exists ? 1 : 0;
      best = std::max(best, k);
    }
  });
  return best;
}

bool uses_inverse(Concept c) {
  bool found = false;
  post_order(c, [&](Concept x) { found = found || (x.kind() == Concept::Kind::Exists && x.role().inverse); });
  return found;
}

bool uses_bottom(Concept c) {
  bool found = false;
  post_order(c, [&](Concept x) { found = found || x.kind() == Concept::Kind::Bottom; });
  return found;
}

namespace {

class ConceptParser {
 public:
  explicit ConceptParser(std::string_view text) : s_(text) {}

  Concept parse_all() {
    Concept c = parse();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Concept parse() {
    skip();
    if (eat('(')) {
      std::vector<Concept> parts{parse()};
      while (true) {
        skip();
        if (eat(')')) break;
        if (ident() != "AND") fail("expected AND or ')'");
        parts.push_back(parse());
      }
      return Concept::conj(parts);
    }
    const std::string word = ident();
    if (word == "TOP") return Concept::top();
    if (word == "BOT") return Concept::bottom();
    if (word == "AND") fail("unexpected AND");
    if (word == "EX") {
      const std::string role = ident();
      const bool inverse = eat('-');
      if (!eat('.')) fail("expected '.' after the role");
      return Concept::exists(Role{intern_symbol(role, 2), inverse}, parse());
    }
    return Concept::name(intern_symbol(word, 1));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Concept parse_concept(std::string_view text) { return ConceptParser(text).parse_all(); }

}  // namespace ontofit
