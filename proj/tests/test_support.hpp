#pragma once

// Independent reference implementations used by the unit tests and the
// acceptance binary. Everything here is brute force over explicit maps and
// assignments and shares no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/cq.hpp"
#include "ontofit/instance.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit::testing {

inline Instance make(std::initializer_list<Fact> facts) { return Instance(facts); }

inline Symbol R2() { return intern_symbol("R", 2); }
inline Symbol S2() { return intern_symbol("S", 2); }
inline Symbol A1() { return intern_symbol("A", 1); }

// Every total map from `vars` values into `targets`, as index vectors.
inline bool for_each_map(std::size_t vars, std::size_t targets,
                         const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> m(vars, 0);
  if (vars == 0) return visit(m);
  if (targets == 0) return true;
  while (true) {
    if (!visit(m)) return false;
    std::size_t i = 0;
    while (i < vars && ++m[i] == targets) m[i++] = 0;
    if (i == vars) return true;
  }
}

inline std::size_t index_of(const std::vector<Value>& xs, Value v) {
  return static_cast<std::size_t>(std::find(xs.begin(), xs.end(), v) - xs.begin());
}

// Exhaustive homomorphism test between pointed instances; point values
// outside adom(src) are added to the map domain.
inline bool brute_hom(const PointedInstance& src, const PointedInstance& dst) {
  std::vector<Value> dom = src.instance.adom();
  for (Value v : src.point)
    if (std::find(dom.begin(), dom.end(), v) == dom.end()) dom.push_back(v);
  std::vector<Value> cod = dst.instance.adom();
  for (Value v : dst.point)
    if (std::find(cod.begin(), cod.end(), v) == cod.end()) cod.push_back(v);
  bool found = false;
  for_each_map(dom.size(), cod.size(), [&](const std::vector<std::size_t>& m) {
    for (std::size_t i = 0; i < src.point.size(); ++i)
      if (cod[m[index_of(dom, src.point[i])]] != dst.point[i]) return true;
    for (const Fact& f : src.instance.facts()) {
      std::vector<Value> args;
      for (Value v : f.args) args.push_back(cod[m[index_of(dom, v)]]);
      if (!dst.instance.contains(Fact{f.symbol, args})) return true;
    }
    found = true;
    return false;
  });
  return found;
}

inline bool brute_hom(const Instance& src, const Instance& dst) {
  return brute_hom(PointedInstance{src, {}}, PointedInstance{dst, {}});
}

// Assignments of the query variables into adom(I) satisfying every atom,
// extending `fixed` (unset entries are Value()). Variables are assigned in
// index order and each atom is checked once its variables are all set.
inline bool for_each_extension(const std::vector<Atom>& atoms, std::vector<Value> a, const std::vector<bool>& set,
                               const Instance& I, const std::function<bool(const std::vector<Value>&)>& visit) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> order;
  for (std::uint32_t i = 0; i < n; ++i)
    if (!set[i]) order.push_back(i);
  // atoms become checkable after the k-th free variable is assigned
  std::vector<std::vector<const Atom*>> ready(order.size() + 1);
  for (const Atom& at : atoms) {
    std::size_t last = 0;
    for (auto x : at.args)
      for (std::size_t k = 0; k < order.size(); ++k)
        if (order[k] == x) last = std::max(last, k + 1);
    ready[last].push_back(&at);
  }
  auto holds = [&](const Atom* at) {
    std::vector<Value> args;
    for (auto x : at->args) args.push_back(a[x]);
    return I.contains(Fact{at->symbol, args});
  };
  for (const Atom* at : ready[0])
    if (!holds(at)) return true;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == order.size()) return visit(a);
    for (Value d : I.adom()) {
      a[order[k]] = d;
      bool ok = true;
      for (const Atom* at : ready[k + 1]) ok = ok && holds(at);
      if (ok && !go(k + 1)) return false;
    }
    return true;
  };
  return go(0);
}

inline void for_each_assignment(const std::vector<Atom>& atoms, std::size_t vars, const Instance& I,
                                 const std::function<bool(const std::vector<Value>&)>& visit) {
  for_each_extension(atoms, std::vector<Value>(vars), std::vector<bool>(vars, false), I, visit);
}

inline std::set<std::vector<std::uint32_t>> brute_answers(const ConjunctiveQuery& q, const Instance& I) {
  std::set<std::vector<std::uint32_t>> out;
  for_each_assignment(q.atoms, q.variables.size(), I, [&](const std::vector<Value>& a) {
    std::vector<std::uint32_t> t;
    for (auto x : q.answer) t.push_back(a[x].id());
    out.insert(t);
    return true;
  });
  return out;
}

// Direct reading of TGD satisfaction: every body assignment extends to the head.
inline bool brute_satisfies(const Instance& I, const Tgd& t) {
  const std::size_t n = t.variables.size();
  std::vector<bool> in_body(n, false);
  for (const Atom& a : t.body)
    for (auto x : a.args) in_body[x] = true;
  // head-only variables are existential; body-only variables are left unset
  std::vector<bool> body_free(n, true);
  for (std::size_t i = 0; i < n; ++i) body_free[i] = !in_body[i];
  bool ok = true;
  for_each_extension(t.body, std::vector<Value>(n), body_free, I, [&](const std::vector<Value>& a) {
    bool extended = false;
    for_each_extension(t.head, a, in_body, I, [&](const std::vector<Value>&) {
      extended = true;
      return false;
    });
    ok = extended;
    return ok;
  });
  if (t.body.empty() && I.adom().empty()) return t.head.empty();
  return ok;
}

// Direct reading of the concept semantics, memoized per (node, value) so
// that shared subconcepts are evaluated once.
using MemberMemo = std::map<std::pair<std::uint32_t, std::uint32_t>, bool>;

inline bool brute_member(Concept c, const Instance& I, Value d, MemberMemo& memo) {
  const auto key = std::make_pair(c.id(), d.id());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool out = false;
  switch (c.kind()) {
    case Concept::Kind::Top:
      out = true;
      break;
    case Concept::Kind::Bottom:
      out = false;
      break;
    case Concept::Kind::Name:
      out = I.contains(Fact{c.symbol(), {d}});
      break;
    case Concept::Kind::And:
      out = true;
      for (Concept k : c.children()) out = out && brute_member(k, I, d, memo);
      break;
    case Concept::Kind::Exists: {
      const Role r = c.role();
      for (const Fact& f : I.facts()) {
        if (f.symbol != r.name) continue;
        const Value from = r.inverse ? f.args[1] : f.args[0];
        const Value to = r.inverse ? f.args[0] : f.args[1];
        if (from == d && brute_member(c.child(), I, to, memo)) {
          out = true;
          break;
        }
      }
      break;
    }
  }
  memo[key] = out;
  return out;
}

inline bool brute_member(Concept c, const Instance& I, Value d) {
  MemberMemo memo;
  return brute_member(c, I, d, memo);
}

inline std::set<std::uint32_t> brute_extension(Concept c, const Instance& I) {
  MemberMemo memo;
  std::set<std::uint32_t> out;
  for (Value d : I.adom())
    if (brute_member(c, I, d, memo)) out.insert(d.id());
  return out;
}

inline std::set<std::uint32_t> ids(const std::vector<Value>& vs) {
  std::set<std::uint32_t> out;
  for (Value v : vs) out.insert(v.id());
  return out;
}

// Extensions of all concepts of a dialect in I, by closing the concept-name
// extensions and the full domain under intersection and role restrictions.
inline std::set<std::set<std::uint32_t>> definable_extensions(const Instance& I, bool inverse, bool bottom) {
  using Set = std::set<std::uint32_t>;
  std::set<Set> out{ids(I.adom())};
  if (bottom) out.insert(Set{});
  for (Symbol s : I.schema().symbols())
    if (symbol_arity(s) == 1) out.insert(brute_extension(Concept::name(s), I));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(out.begin(), out.end());
    auto add = [&](Set x) { grew = out.insert(std::move(x)).second || grew; };
    for (const Set& x : cur) {
      for (const Set& y : cur) {
        Set z;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(z, z.begin()));
        add(z);
      }
      for (Symbol s : I.schema().symbols()) {
        if (symbol_arity(s) != 2) continue;
        for (int dir = 0; dir < (inverse ? 2 : 1); ++dir) {
          Set z;
          for (const Fact& f : I.facts())
            if (f.symbol == s && x.count(f.args[1 - dir].id())) z.insert(f.args[dir].id());
          add(z);
        }
      }
    }
  }
  return out;
}

inline Concept random_concept(std::mt19937_64& rng, const std::vector<Symbol>& names,
                              const std::vector<Symbol>& roles, int depth, bool inverse, bool bottom) {
  std::uniform_int_distribution<int> pick(0, 5);
  const int k = pick(rng);
  if (k == 0 || (depth == 0 && k >= 3)) return Concept::top();
  if (k == 1 && bottom) return Concept::bottom();
  if ((k == 1 || k == 2) && !names.empty()) return Concept::name(names[rng() % names.size()]);
  if (k == 3) {
    return Concept::conj({random_concept(rng, names, roles, depth, inverse, bottom),
                          random_concept(rng, names, roles, depth, inverse, bottom)});
  }
  if (roles.empty() || depth == 0) return Concept::top();
  const Role r{roles[rng() % roles.size()], inverse && rng() % 2 == 0};
  return Concept::exists(r, random_concept(rng, names, roles, depth - 1, inverse, bottom));
}

inline Instance random_graph(std::mt19937_64& rng, std::size_t values, double p, bool with_names) {
  std::bernoulli_distribution coin(p);
  Instance I;
  auto v = [](std::size_t i) { return Value::atom("v" + std::to_string(i)); };
  for (std::size_t i = 0; i < values; ++i)
    for (std::size_t j = 0; j < values; ++j)
      if (coin(rng)) I.add(R2(), {v(i), v(j)});
  if (with_names)
    for (std::size_t i = 0; i < values; ++i)
      if (coin(rng)) I.add(A1(), {v(i)});
  return I;
}

}  // namespace ontofit::testing
