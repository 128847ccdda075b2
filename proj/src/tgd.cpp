#include "ontofit/tgd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ontofit/errors.hpp"

namespace ontofit {

namespace {

std::vector<bool> used_in(const std::vector<Atom>& atoms, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const Atom& a : atoms) {
    for (auto v : a.args) used[v] = true;
  }
  return used;
}

}  // namespace

std::vector<std::uint32_t> Tgd::frontier() const {
  const auto b = used_in(body, variables.size());
  const auto h = used_in(head, variables.size());
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < variables.size(); ++v) {
    if (b[v] && h[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> Tgd::existentials() const {
  const auto b = used_in(body, variables.size());
  const auto h = used_in(head, variables.size());
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < variables.size(); ++v) {
    if (!b[v] && h[v]) out.push_back(v);
  }
  return out;
}

ConjunctiveQuery Tgd::body_query() const { return {variables, frontier(), body}; }
ConjunctiveQuery Tgd::head_query() const { return {variables, frontier(), head}; }

Schema Tgd::schema() const {
  Schema s;
  for (const Atom& a : body) s.add(a.symbol);
  for (const Atom& a : head) s.add(a.symbol);
  return s;
}

std::string Tgd::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += ", ";
    out += format_atom(body[i], variables);
  }
  out += body.empty() ? "-> " : " -> ";
  const auto ex = existentials();
  if (!ex.empty()) {
    out += "exists";
    for (auto v : ex) out += " " + variables[v];
    out += ". ";
  }
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i) out += ", ";
    out += format_atom(head[i], variables);
  }
  return out;
}

Tgd Tgd::from_queries(const ConjunctiveQuery& body, const ConjunctiveQuery& head) {
  if (body.answer.size() != head.answer.size()) throw UsageError("body and head answer tuples differ in length");
  Tgd t;
  t.variables = body.variables;
  t.body = body.atoms;
  std::set<std::string> taken(body.variables.begin(), body.variables.end());
  std::vector<std::int64_t> map(head.variables.size(), -1);
  for (std::size_t i = 0; i < head.answer.size(); ++i) {
    auto& slot = map[head.answer[i]];
    if (slot >= 0 && slot != body.answer[i]) throw UsageError("head answer tuple identifies distinct body variables");
    slot = body.answer[i];
  }
  std::size_t next = 1;
  for (const Atom& a : head.atoms) {
    Atom b{a.symbol, {}};
    for (auto v : a.args) {
      if (map[v] < 0) {
        std::string name;
        do {
          name = "z" + std::to_string(next++);
        } while (taken.count(name));
        taken.insert(name);
        map[v] = static_cast<std::int64_t>(t.variables.size());
        t.variables.push_back(name);
      }
      b.args.push_back(static_cast<std::uint32_t>(map[v]));
    }
    if (std::find(t.head.begin(), t.head.end(), b) == t.head.end()) t.head.push_back(b);
  }
  return t;
}

TgdFlags classify(const Tgd& t) {
  TgdFlags f;
  const auto fr = t.frontier();
  f.full = t.existentials().empty();
  f.guarded = t.body_query().is_guarded();
  f.frontier_guarded = fr.empty();
  for (const Atom& a : t.body) {
    bool covers = true;
    for (auto v : fr) covers = covers && std::count(a.args.begin(), a.args.end(), v) > 0;
    f.frontier_guarded = f.frontier_guarded || covers;
  }
  f.frontier_one = fr.size() <= 1;
  f.ind = t.body.size() == 1 && t.head.size() == 1;
  return f;
}

bool in_class(const Tgd& t, TgdClass c) {
  const TgdFlags f = classify(t);
  switch (c) {
    case TgdClass::GTGD:
      return f.guarded;
    case TgdClass::FGTGD:
      return f.frontier_guarded;
    case TgdClass::F1TGD:
      return f.frontier_one;
    case TgdClass::FullTGD:
      return f.full;
    case TgdClass::IND:
      return f.ind;
    case TgdClass::TGD:
      return true;
  }
  return false;
}

std::string class_name(TgdClass c) {
  switch (c) {
    case TgdClass::GTGD:
      return "GTGD";
    case TgdClass::FGTGD:
      return "FGTGD";
    case TgdClass::F1TGD:
      return "F1TGD";
    case TgdClass::FullTGD:
      return "FULL";
    case TgdClass::IND:
      return "IND";
    case TgdClass::TGD:
      return "TGD";
  }
  return {};
}

TgdClass parse_class(std::string_view name) {
  std::string u(name);
  for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "GTGD") return TgdClass::GTGD;
  if (u == "FGTGD") return TgdClass::FGTGD;
  if (u == "F1TGD") return TgdClass::F1TGD;
  if (u == "FULL" || u == "FULLTGD") return TgdClass::FullTGD;
  if (u == "IND") return TgdClass::IND;
  if (u == "TGD") return TgdClass::TGD;
  throw UsageError("unknown TGD class " + std::string(name));
}

bool model_check(const HomTarget& target, const Tgd& t, const Limits& limits) {
  const PointedInstance body = canonical_instance(t.body_query());
  const PointedInstance head = canonical_instance(t.head_query());
  if (t.head.empty()) return true;
  bool ok = true;
  auto check = [&](const std::vector<Value>& image) {
    ok = has_homomorphism(head, target, image, limits);
    return ok;
  };
  if (t.body.empty()) {
    check({});
  } else {
    for_each_image(PointedInstance{body.instance, {}}, target, {}, body.point, check, limits);
  }
  return ok;
}

bool model_check(const Instance& instance, const Tgd& t, const Limits& limits) {
  const HomTarget target(instance);
  return model_check(target, t, limits);
}

bool satisfies(const Instance& instance, const TgdOntology& o, const Limits& limits) {
  const HomTarget target(instance);
  return std::all_of(o.begin(), o.end(), [&](const Tgd& t) { return model_check(target, t, limits); });
}

bool tgd_isomorphic(const Tgd& a, const Tgd& b) {
  if (a.body.size() != b.body.size() || a.head.size() != b.head.size()) return false;
  auto combined = [](const Tgd& t) {
    ConjunctiveQuery q{t.variables, {}, {}};
    for (const Atom& x : t.body) {
      q.atoms.push_back({intern_symbol("body:" + symbol_name(x.symbol), symbol_arity(x.symbol)), x.args});
    }
    for (const Atom& x : t.head) {
      q.atoms.push_back({intern_symbol("head:" + symbol_name(x.symbol), symbol_arity(x.symbol)), x.args});
    }
    return q;
  };
  return isomorphic(combined(a), combined(b));
}

Tgd frontier_one_rewrite(const Tgd& t) {
  if (!t.frontier().empty()) throw UsageError("frontier_one_rewrite needs a TGD without frontier variables");
  if (t.body.empty()) throw UsageError("frontier_one_rewrite needs a non-empty body");
  Tgd out = t;
  const Atom& first = t.body.front();
  const std::uint32_t keep = first.args.front();
  std::set<std::string> taken(t.variables.begin(), t.variables.end());
  std::map<std::uint32_t, std::uint32_t> fresh;
  std::size_t next = 1;
  Atom copy{first.symbol, {}};
  for (auto v : first.args) {
    if (v == keep) {
      copy.args.push_back(v);
      continue;
    }
    auto it = fresh.find(v);
    if (it == fresh.end()) {
      std::string name;
      do {
        name = "v" + std::to_string(next++);
      } while (taken.count(name));
      taken.insert(name);
      it = fresh.emplace(v, static_cast<std::uint32_t>(out.variables.size())).first;
      out.variables.push_back(name);
    }
    copy.args.push_back(it->second);
  }
  out.head.push_back(copy);
  return out;
}

namespace {

class TgdParser {
 public:
  explicit TgdParser(std::string_view s) : s_(s) {}

  Tgd parse() {
    skip();
    if (!starts_with("->")) parse_atoms(body_);
    skip();
    if (!starts_with("->")) fail("expected '->'");
    pos_ += 2;
    skip();
    std::set<std::string> declared;
    if (keyword("exists")) {
      while (true) {
        skip();
        if (peek() == '.') {
          ++pos_;
          break;
        }
        declared.insert(identifier());
      }
    }
    parse_atoms(head_);
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    if (head_.empty()) fail("empty head");
    Tgd t;
    std::map<std::string, std::uint32_t> index;
    auto var = [&](const std::string& name) {
      auto [it, fresh] = index.emplace(name, static_cast<std::uint32_t>(t.variables.size()));
      if (fresh) t.variables.push_back(name);
      return it->second;
    };
    std::set<std::string> body_vars;
    for (auto& [sym, args] : body_) {
      Atom a{sym, {}};
      for (auto& x : args) {
        a.args.push_back(var(x));
        body_vars.insert(x);
      }
      if (std::find(t.body.begin(), t.body.end(), a) == t.body.end()) t.body.push_back(a);
    }
    for (const auto& d : declared) {
      if (body_vars.count(d)) fail("existential variable " + d + " also occurs in the body");
    }
    for (auto& [sym, args] : head_) {
      Atom a{sym, {}};
      for (auto& x : args) a.args.push_back(var(x));
      if (std::find(t.head.begin(), t.head.end(), a) == t.head.end()) t.head.push_back(a);
    }
    return t;
  }

 private:
  using RawAtom = std::pair<Symbol, std::vector<std::string>>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool starts_with(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }
  bool keyword(std::string_view k) {
    if (!starts_with(k)) return false;
    const std::size_t end = pos_ + k.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }
  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void parse_atoms(std::vector<RawAtom>& out) {
    while (true) {
      const std::string name = identifier();
      expect('(');
      std::vector<std::string> args;
      args.push_back(identifier());
      skip();
      while (peek() == ',') {
        ++pos_;
        args.push_back(identifier());
        skip();
      }
      expect(')');
      const int arity = static_cast<int>(args.size());
      auto [it, fresh] = arity_.emplace(name, arity);
      if (!fresh && it->second != arity) fail("symbol " + name + " used with two arities");
      out.emplace_back(intern_symbol(name, arity), std::move(args));
      skip();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<RawAtom> body_, head_;
  std::map<std::string, int> arity_;
};

}  // namespace

Tgd parse_tgd(std::string_view text) { return TgdParser(text).parse(); }

TgdOntology parse_tgd_ontology(std::string_view text) {
  TgdOntology out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_tgd(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::string format_tgd_ontology(const TgdOntology& o) {
  std::string out;
  for (const auto& t : o) out += t.to_string() + "\n";
  return out;
}

}  // namespace ontofit
