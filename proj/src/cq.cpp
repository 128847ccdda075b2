#include "ontofit/cq.hpp"

#include <algorithm>
#include <unordered_map>

#include "ontofit/errors.hpp"
#include "ontofit/homomorphism.hpp"

namespace ontofit {

bool ConjunctiveQuery::is_safe() const {
  for (std::uint32_t x : answer) {
    bool found = false;
    for (const Atom& a : atoms) found = found || std::count(a.args.begin(), a.args.end(), x) > 0;
    if (!found) return false;
  }
  return true;
}

bool ConjunctiveQuery::is_guarded() const {
  std::vector<bool> used(variables.size(), false);
  for (const Atom& a : atoms) {
    for (auto v : a.args) used[v] = true;
  }
  for (const Atom& a : atoms) {
    std::vector<bool> cover(variables.size(), false);
    for (auto v : a.args) cover[v] = true;
    bool all = true;
    for (std::size_t v = 0; v < variables.size(); ++v) all = all && (!used[v] || cover[v]);
    if (all) return true;
  }
  return atoms.empty();
}

Schema ConjunctiveQuery::schema() const {
  Schema s;
  for (const Atom& a : atoms) s.add(a.symbol);
  return s;
}

std::string format_atom(const Atom& a, const std::vector<std::string>& names) {
  std::string out = symbol_name(a.symbol) + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += names[a.args[i]];
  }
  return out + ")";
}

std::string ConjunctiveQuery::to_string() const {
  std::string out = "q(";
  for (std::size_t i = 0; i < answer.size(); ++i) {
    if (i) out += ",";
    out += variables[answer[i]];
  }
  out += ") :- ";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += format_atom(atoms[i], variables);
  }
  return out;
}

PointedInstance canonical_instance(const ConjunctiveQuery& q) {
  PointedInstance p;
  std::vector<Value> vals;
  for (const auto& name : q.variables) vals.push_back(Value::atom(name));
  for (const Atom& a : q.atoms) {
    Fact f{a.symbol, {}};
    for (auto v : a.args) f.args.push_back(vals[v]);
    p.instance.add(f);
  }
  for (auto x : q.answer) p.point.push_back(vals[x]);
  return p;
}

ConjunctiveQuery canonical_cq(const PointedInstance& p, const std::string& answer_prefix,
                              const std::string& other_prefix) {
  const Instance& I = p.instance;
  std::unordered_map<Value, std::uint32_t> var;
  ConjunctiveQuery q;
  for (std::size_t i = 0; i < p.point.size(); ++i) {
    const Value a = p.point[i];
    if (!I.in_adom(a)) throw PreconditionError("point value " + a.to_string() + " is outside the active domain");
    if (!var.emplace(a, static_cast<std::uint32_t>(q.variables.size())).second) {
      throw PreconditionError("point tuple has repeated value " + a.to_string());
    }
    q.variables.push_back(answer_prefix + std::to_string(i + 1));
    q.answer.push_back(static_cast<std::uint32_t>(i));
  }
  std::size_t others = 0;
  for (Value v : I.adom()) {
    if (var.count(v)) continue;
    var.emplace(v, static_cast<std::uint32_t>(q.variables.size()));
    q.variables.push_back(other_prefix + std::to_string(++others));
  }
  for (const Fact& f : I.facts()) {
    Atom a{f.symbol, {}};
    for (Value v : f.args) a.args.push_back(var.at(v));
    q.atoms.push_back(std::move(a));
  }
  return q;
}

std::vector<std::vector<Value>> evaluate_cq(const ConjunctiveQuery& q, const Instance& instance,
                                            const Limits& limits) {
  const PointedInstance c = canonical_instance(q);
  std::vector<std::vector<Value>> out;
  for_each_image(
      PointedInstance{c.instance, {}}, PointedInstance{instance, {}}, c.point,
      [&](const std::vector<Value>& img) {
        out.push_back(img);
        return true;
      },
      limits);
  return out;
}

bool isomorphic(const ConjunctiveQuery& a, const ConjunctiveQuery& b) {
  if (a.atoms.size() != b.atoms.size() || a.answer.size() != b.answer.size()) return false;
  const PointedInstance ca = canonical_instance(a);
  const PointedInstance cb = canonical_instance(b);
  if (ca.instance.size() != cb.instance.size() || ca.instance.adom().size() != cb.instance.adom().size()) {
    return false;
  }
  // A bijective homomorphism between equal-size instances is an isomorphism.
  bool found = false;
  const auto& dom = ca.instance.adom();
  std::vector<Value> project(dom.begin(), dom.end());
  for_each_image(ca, cb, project, [&](const std::vector<Value>& img) {
    std::vector<Value> sorted = img;
    std::sort(sorted.begin(), sorted.end(), [](Value x, Value y) { return x.id() < y.id(); });
    found = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return !found;
  });
  return found;
}

}  // namespace ontofit
