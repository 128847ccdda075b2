#include "ontofit/operations.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "ontofit/errors.hpp"

namespace ontofit {

Instance disjoint_union(const std::vector<Instance>& instances) {
  if (instances.empty()) throw UsageError("disjoint union of an empty list");
  Instance out;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    out.extend_schema(instances[i].schema());
    for (const Fact& f : instances[i].facts()) {
      Fact g{f.symbol, {}};
      for (Value v : f.args) g.args.push_back(Value::tagged(v, static_cast<std::uint32_t>(i)));
      out.add(g);
    }
  }
  return out;
}

PointedInstance direct_product(const std::vector<PointedInstance>& operands, const Limits& limits) {
  if (operands.empty()) throw UsageError("direct product of an empty list");
  const std::size_t k = operands.size();
  const std::size_t arity = operands[0].point.size();
  Schema schema;
  for (const auto& op : operands) {
    if (op.point.size() != arity) throw UsageError("direct product operands have different point arities");
    schema = Schema::merge(schema, op.instance.schema());
  }
  double bound = 0;
  for (Symbol s : schema.symbols()) {
    double n = 1;
    for (const auto& op : operands) n *= static_cast<double>(op.instance.facts_of(s).size());
    bound += n;
  }
  if (bound > static_cast<double>(limits.max_product_size)) {
    throw ResourceLimit("direct product would have " + std::to_string(static_cast<long double>(bound)) + " facts");
  }
  PointedInstance out;
  out.instance = Instance(schema);
  std::vector<Value> parts(k);
  for (Symbol s : schema.symbols()) {
    const int a = symbol_arity(s);
    std::vector<const std::vector<std::size_t>*> lists;
    bool any_empty = false;
    for (const auto& op : operands) {
      lists.push_back(&op.instance.facts_of(s));
      any_empty = any_empty || lists.back()->empty();
    }
    if (any_empty) continue;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      Fact f{s, std::vector<Value>(a)};
      for (int p = 0; p < a; ++p) {
        for (std::size_t j = 0; j < k; ++j) parts[j] = operands[j].instance.facts()[(*lists[j])[idx[j]]].args[p];
        f.args[p] = Value::tuple(parts);
      }
      out.instance.add(f);
      std::size_t j = 0;
      while (j < k && ++idx[j] == lists[j]->size()) idx[j++] = 0;
      if (j == k) break;
    }
  }
  if (out.instance.adom().size() > limits.max_product_size) throw ResourceLimit("direct product too large");
  for (std::size_t i = 0; i < arity; ++i) {
    for (std::size_t j = 0; j < k; ++j) parts[j] = operands[j].point[i];
    out.point.push_back(Value::tuple(parts));
  }
  return out;
}

Instance direct_product(const std::vector<Instance>& operands, const Limits& limits) {
  std::vector<PointedInstance> ops;
  for (const auto& I : operands) ops.push_back({I, {}});
  return direct_product(ops, limits).instance;
}

PointedInstance diversify(const PointedInstance& p) {
  if (p.point.empty()) return p;
  std::unordered_map<Value, std::vector<Value>> options;
  PointedInstance out;
  out.instance = Instance(p.instance.schema());
  for (Value a : p.point) {
    if (!p.instance.in_adom(a)) throw PreconditionError("cannot diversify a point outside the active domain");
    auto& opts = options[a];
    if (opts.empty()) opts.push_back(a);
    const Value c = Value::clone(a, static_cast<std::uint32_t>(opts.size() - 1));
    opts.push_back(c);
    out.point.push_back(c);
  }
  for (const Fact& f : p.instance.facts()) {
    const std::size_t a = f.args.size();
    std::vector<const std::vector<Value>*> choice(a);
    std::vector<Value> single;
    for (std::size_t i = 0; i < a; ++i) {
      auto it = options.find(f.args[i]);
      choice[i] = it == options.end() ? nullptr : &it->second;
    }
    std::vector<std::size_t> idx(a, 0);
    while (true) {
      Fact g{f.symbol, std::vector<Value>(a)};
      for (std::size_t i = 0; i < a; ++i) g.args[i] = choice[i] ? (*choice[i])[idx[i]] : f.args[i];
      out.instance.add(g);
      std::size_t i = 0;
      while (i < a && (!choice[i] || ++idx[i] == choice[i]->size())) {
        idx[i] = 0;
        ++i;
      }
      if (i == a) break;
    }
  }
  return out;
}

Instance restrict_to(const Instance& instance, const std::vector<Value>& values) {
  std::unordered_set<Value> keep(values.begin(), values.end());
  Instance out(instance.schema());
  for (const Fact& f : instance.facts()) {
    if (std::all_of(f.args.begin(), f.args.end(), [&](Value v) { return keep.count(v) != 0; })) out.add(f);
  }
  return out;
}

std::vector<std::vector<Value>> maximally_guarded_sets(const Instance& instance) {
  std::vector<std::vector<std::size_t>> sets;
  for (const Fact& f : instance.facts()) {
    std::vector<std::size_t> s;
    for (Value v : f.args) s.push_back(*instance.position(v));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
  }
  std::vector<std::vector<Value>> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j) {
      if (i != j && sets[j].size() > sets[i].size() &&
          std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        maximal = false;
      }
    }
    if (!maximal) continue;
    std::vector<Value> m;
    for (auto p : sets[i]) m.push_back(instance.adom()[p]);
    out.push_back(std::move(m));
  }
  return out;
}

bool is_total_tuple(const Instance& instance, const std::vector<Value>& tuple) {
  std::unordered_set<Value> vals(tuple.begin(), tuple.end());
  for (Value v : vals) {
    if (!instance.in_adom(v)) return false;
  }
  for (Symbol s : instance.schema().symbols()) {
    std::size_t needed = 1;
    for (int i = 0; i < symbol_arity(s); ++i) needed *= vals.size();
    std::size_t have = 0;
    for (auto id : instance.facts_of(s)) {
      const Fact& f = instance.facts()[id];
      if (std::all_of(f.args.begin(), f.args.end(), [&](Value v) { return vals.count(v) != 0; })) ++have;
    }
    if (have != needed) return false;
  }
  return true;
}

Instance image(const Instance& instance, const ValueMap& h) {
  Instance out(instance.schema());
  for (const Fact& f : instance.facts()) {
    Fact g{f.symbol, {}};
    for (Value v : f.args) g.args.push_back(h.at(v));
    out.add(g);
  }
  return out;
}

namespace {

// Replaces values u by w whenever renaming u to w maps k into itself.
// Such folds are retractions and cost far less than a full search.
void fold(PointedInstance& k, const std::unordered_set<Value>& fixed) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<Value, std::vector<std::size_t>> occ;
    const auto& facts = k.instance.facts();
    for (std::size_t i = 0; i < facts.size(); ++i)
      for (Value v : facts[i].args) {
        auto& list = occ[v];
        if (list.empty() || list.back() != i) list.push_back(i);
      }
    for (Value u : k.instance.adom()) {
      if (fixed.count(u)) continue;
      const auto& mine = occ[u];
      // candidates for w come from facts matching the first fact of u elsewhere
      const Fact& f0 = facts[mine[0]];
      std::vector<Value> candidates;
      for (std::size_t j : k.instance.facts_of(f0.symbol)) {
        const Fact& g = facts[j];
        Value w = u;
        bool match = true;
        for (std::size_t p = 0; p < g.args.size() && match; ++p) {
          if (f0.args[p] != u) {
            match = g.args[p] == f0.args[p];
          } else if (w == u) {
            w = g.args[p];
          } else {
            match = g.args[p] == w;
          }
        }
        if (match && w != u) candidates.push_back(w);
      }
      for (Value w : candidates) {
        bool ok = true;
        for (std::size_t i : mine) {
          Fact g = facts[i];
          for (Value& x : g.args)
            if (x == u) x = w;
          if (!k.instance.contains(g)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          Instance next(k.instance.schema());
          for (const Fact& f : facts) {
            Fact g = f;
            for (Value& x : g.args)
              if (x == u) x = w;
            next.add(g);
          }
          k.instance = std::move(next);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
}

PointedInstance core_from(const PointedInstance& p, std::unordered_set<Value> stuck, const Limits& limits) {
  PointedInstance k = p;
  stuck.insert(p.point.begin(), p.point.end());
  fold(k, std::unordered_set<Value>(p.point.begin(), p.point.end()));
  // A value that cannot be dropped from k cannot be dropped from any retract of k either.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Value> adom = k.instance.adom();
    for (Value u : adom) {
      if (stuck.count(u) || !k.instance.in_adom(u)) continue;
      std::vector<Value> rest;
      for (Value v : k.instance.adom()) {
        if (v != u) rest.push_back(v);
      }
      const Instance smaller = restrict_to(k.instance, rest);
      HomTarget target(smaller);
      if (auto h = find_homomorphism(k, target, k.point, limits)) {
        k.instance = image(k.instance, *h);
        changed = true;
      } else {
        stuck.insert(u);
      }
    }
  }
  return k;
}

}  // namespace

PointedInstance core(const PointedInstance& p, const Limits& limits) { return core_from(p, {}, limits); }

namespace {

Value join(Value l, Value r) {
  std::vector<Value> parts = l.parts();
  parts.push_back(r);
  return Value::tuple(parts);
}

// (fact index, position) pairs per value
std::unordered_map<Value, std::vector<std::pair<std::size_t, std::size_t>>> occurrences(const Instance& I) {
  std::unordered_map<Value, std::vector<std::pair<std::size_t, std::size_t>>> out;
  for (std::size_t i = 0; i < I.facts().size(); ++i) {
    const Fact& f = I.facts()[i];
    for (std::size_t p = 0; p < f.args.size(); ++p) out[f.args[p]].emplace_back(i, p);
  }
  return out;
}

// Part of left x right connected to the point. Values of `left` are tuples;
// right values are appended.
PointedInstance reachable_step(const PointedInstance& left, const PointedInstance& right, const Limits& limits) {
  const auto occ_l = occurrences(left.instance);
  const auto occ_r = occurrences(right.instance);
  PointedInstance out;
  out.instance = Instance(Schema::merge(left.instance.schema(), right.instance.schema()));
  std::unordered_set<Value> seen;
  std::vector<std::pair<Value, Value>> queue;
  for (std::size_t i = 0; i < left.point.size(); ++i) {
    const Value v = join(left.point[i], right.point[i]);
    out.point.push_back(v);
    if (seen.insert(v).second) queue.emplace_back(left.point[i], right.point[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [l, r] = queue[head];
    auto il = occ_l.find(l);
    auto ir = occ_r.find(r);
    if (il == occ_l.end() || ir == occ_r.end()) continue;
    for (auto [fi, p] : il->second) {
      const Fact& f = left.instance.facts()[fi];
      for (auto [gi, q] : ir->second) {
        const Fact& g = right.instance.facts()[gi];
        if (q != p || g.symbol != f.symbol) continue;
        Fact h{f.symbol, {}};
        for (std::size_t k = 0; k < f.args.size(); ++k) {
          const Value v = join(f.args[k], g.args[k]);
          h.args.push_back(v);
          if (seen.insert(v).second) queue.emplace_back(f.args[k], g.args[k]);
        }
        out.instance.add(h);
        if (out.instance.size() > limits.max_product_size) throw ResourceLimit("product too large");
      }
    }
  }
  return out;
}

PointedInstance chain_product(const std::vector<const PointedInstance*>& operands, bool reachable,
                              const Limits& limits) {
  PointedInstance acc = core(direct_product(std::vector<PointedInstance>{*operands[0]}, limits), limits);
  for (std::size_t i = 1; i < operands.size(); ++i) {
    PointedInstance next;
    // acc already maps into the next operand, so the product is equivalent to acc
    if (has_homomorphism(acc, *operands[i], limits)) continue;
    if (reachable) {
      next = reachable_step(acc, *operands[i], limits);
    } else {
      next = direct_product(std::vector<PointedInstance>{acc, *operands[i]}, limits);
      // flatten the nested tuple values
      ValueMap flat;
      for (Value v : next.instance.adom()) flat.emplace(v, join(v.parts()[0], v.parts()[1]));
      next.instance = image(next.instance, flat);
    }
    acc = core(next, limits);
  }
  return acc;
}

}  // namespace

PointedInstance reduced_product(const std::vector<PointedInstance>& operands, const Limits& limits) {
  if (operands.empty()) throw UsageError("product of an empty list");
  const std::size_t n = operands.size();
  std::vector<HomTarget> targets;
  targets.reserve(n);
  for (const auto& op : operands) targets.emplace_back(op.instance);
  std::vector<bool> keep(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (!has_homomorphism(operands[j], targets[i], operands[i].point, limits)) continue;
      // j below i: drop i unless they are equivalent and i comes first
      if (j < i || !has_homomorphism(operands[i], targets[j], operands[j].point, limits)) keep[i] = false;
    }
  }
  std::vector<const PointedInstance*> kept;
  std::vector<PointedInstance> bare;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    kept.push_back(&operands[i]);
    const bool dup = std::any_of(bare.begin(), bare.end(),
                                 [&](const PointedInstance& b) { return b.instance.facts() == operands[i].instance.facts(); });
    if (!dup) bare.push_back(PointedInstance{operands[i].instance, {}});
  }
  // The product is the union of its point-connected part and its other
  // components; the latter are hom-equivalent to the product of the distinct
  // operand instances (diagonal one way, projection the other).
  const PointedInstance connected = chain_product(kept, true, limits);
  std::vector<const PointedInstance*> bare_ptrs;
  for (const auto& b : bare) bare_ptrs.push_back(&b);
  const PointedInstance rest = chain_product(bare_ptrs, false, limits);
  PointedInstance out = connected;
  for (const Fact& f : rest.instance.facts()) {
    Fact g{f.symbol, {}};
    for (Value v : f.args) g.args.push_back(Value::tagged(v, 1));
    out.instance.add(g);
  }
  // every endomorphism fixes the point, so it maps the connected part into itself
  const std::vector<Value>& fixed = connected.instance.adom();
  return core_from(out, std::unordered_set<Value>(fixed.begin(), fixed.end()), limits);
}

}  // namespace ontofit
