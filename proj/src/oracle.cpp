#include "ontofit/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "ontofit/dl_concepts.hpp"
#include "ontofit/errors.hpp"
#include "ontofit/interpretation.hpp"
#include "ontofit/operations.hpp"
#include "rgs.hpp"

namespace ontofit {

namespace {

using Key = std::vector<std::uint32_t>;

// Non-decreasing sequences of length n over 0..m-1.
void for_each_multiset(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) {
    if (i == n) {
      f(s);
      return;
    }
    for (std::size_t v = from; v < m; ++v) {
      s[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
}

struct RawTgd {
  std::vector<Symbol> syms;  // body then head
  std::size_t nb;
  std::vector<std::uint32_t> args;  // flattened, normalized
};

std::vector<std::vector<std::uint32_t>> split_args(const std::vector<Symbol>& syms, const std::vector<std::uint32_t>& s) {
  std::vector<std::vector<std::uint32_t>> out;
  std::size_t pos = 0;
  for (Symbol sym : syms) {
    const auto ar = static_cast<std::size_t>(symbol_arity(sym));
    out.emplace_back(s.begin() + pos, s.begin() + pos + ar);
    pos += ar;
  }
  return out;
}

Key canonical_raw(const std::vector<Symbol>& syms, std::size_t nb, const std::vector<std::uint32_t>& s) {
  const auto atoms = split_args(syms, s);
  std::vector<std::size_t> bo(nb), ho(syms.size() - nb);
  std::iota(bo.begin(), bo.end(), 0);
  std::iota(ho.begin(), ho.end(), nb);
  Key best;
  do {
    do {
      Key key;
      std::vector<std::uint32_t> flat;
      for (auto i : bo) {
        key.push_back(syms[i]);
        flat.insert(flat.end(), atoms[i].begin(), atoms[i].end());
      }
      for (auto i : ho) {
        key.push_back(syms[i]);
        flat.insert(flat.end(), atoms[i].begin(), atoms[i].end());
      }
      const auto norm = detail::normalize_rgs(flat);
      key.insert(key.end(), norm.begin(), norm.end());
      if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(ho.begin(), ho.end()));
  } while (std::next_permutation(bo.begin(), bo.end()));
  return best;
}

Tgd build_tgd(const std::vector<Symbol>& syms, std::size_t nb, const std::vector<std::uint32_t>& s) {
  const auto atoms = split_args(syms, s);
  Tgd t;
  std::uint32_t body_vars = 0, vars = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (auto v : atoms[i]) {
      vars = std::max(vars, v + 1);
      if (i < nb) body_vars = std::max(body_vars, v + 1);
    }
  }
  for (std::uint32_t v = 0; v < vars; ++v) {
    t.variables.push_back(v < body_vars ? "x" + std::to_string(v + 1) : "z" + std::to_string(v - body_vars + 1));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) (i < nb ? t.body : t.head).push_back({syms[i], atoms[i]});
  return t;
}

bool distinct_atoms(const std::vector<Symbol>& syms, std::size_t from, std::size_t to,
                    const std::vector<std::vector<std::uint32_t>>& atoms) {
  for (std::size_t i = from; i < to; ++i) {
    for (std::size_t j = i + 1; j < to; ++j) {
      if (syms[i] == syms[j] && atoms[i] == atoms[j]) return false;
    }
  }
  return true;
}

}  // namespace

void enumerate_tgds(const Schema& schema, TgdClass cls, const TgdBudget& budget,
                    const std::function<bool(const Tgd&)>& visit) {
  const auto& symbols = schema.symbols();
  if (symbols.empty() || budget.max_vars == 0) return;
  for (std::size_t nb = 1; nb <= budget.max_body_atoms; ++nb) {
    for (std::size_t nh = 1; nh <= budget.max_head_atoms; ++nh) {
      std::set<Key> seen;
      std::vector<std::pair<std::pair<std::uint32_t, Key>, Tgd>> found;
      for_each_multiset(nb, symbols.size(), [&](const std::vector<std::size_t>& bs) {
        for_each_multiset(nh, symbols.size(), [&](const std::vector<std::size_t>& hs) {
          std::vector<Symbol> syms;
          std::size_t positions = 0;
          for (auto i : bs) syms.push_back(symbols[i]);
          for (auto i : hs) syms.push_back(symbols[i]);
          for (Symbol s : syms) positions += static_cast<std::size_t>(symbol_arity(s));
          detail::for_each_rgs(positions, budget.max_vars, [&](const std::vector<std::uint32_t>& s) {
            const auto atoms = split_args(syms, s);
            if (!distinct_atoms(syms, 0, nb, atoms) || !distinct_atoms(syms, nb, syms.size(), atoms)) return true;
            Key key = canonical_raw(syms, nb, s);
            if (!seen.insert(key).second) return true;
            Tgd t = build_tgd(syms, nb, s);
            if (!in_class(t, cls)) return true;
            const auto nvars = static_cast<std::uint32_t>(t.variables.size());
            found.push_back({{nvars, std::move(key)}, std::move(t)});
            return true;
          });
        });
      });
      std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& f : found) {
        if (!visit(f.second)) return;
      }
    }
  }
}

std::vector<Tgd> enumerate_tgds(const Schema& schema, TgdClass cls, const TgdBudget& budget) {
  std::vector<Tgd> out;
  enumerate_tgds(schema, cls, budget, [&](const Tgd& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<Tgd> brute_force_fit(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                                   const TgdBudget& budget) {
  Schema schema;
  for (const auto& I : P) schema = Schema::merge(schema, I.schema());
  for (const auto& I : N) schema = Schema::merge(schema, I.schema());
  std::vector<HomTarget> pos, neg;
  for (const auto& I : P) pos.emplace_back(I);
  for (const auto& I : N) neg.emplace_back(I);
  std::optional<Tgd> result;
  enumerate_tgds(schema, cls, budget, [&](const Tgd& t) {
    for (const auto& target : neg) {
      if (model_check(target, t)) return true;
    }
    for (const auto& target : pos) {
      if (!model_check(target, t)) return true;
    }
    result = t;
    return false;
  });
  return result;
}

namespace {

constexpr std::size_t kBits = 256;
using Bits = std::bitset<kBits>;

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

struct SmallCq {
  std::vector<Atom> atoms;
  std::uint32_t vars = 0;
  std::uint32_t k = 0;  // answer variables are 0..k-1
};

struct Example {
  const Instance* instance;
  std::size_t n;
  std::unordered_map<Value, std::uint32_t> index;
};

// Assignment bitset of an atom over `vars` variables in one example.
Bits atom_bits(const Example& e, const Atom& a, std::uint32_t vars) {
  Bits out;
  const std::size_t total = ipow(e.n, vars);
  for (std::size_t fi : e.instance->facts_of(a.symbol)) {
    const Fact& f = e.instance->facts()[fi];
    // Assignments consistent with this fact: fixed variables from the fact, others free.
    std::vector<std::int64_t> fixed(vars, -1);
    bool ok = true;
    for (std::size_t i = 0; i < a.args.size() && ok; ++i) {
      const std::int64_t v = e.index.at(f.args[i]);
      if (fixed[a.args[i]] >= 0 && fixed[a.args[i]] != v) ok = false;
      fixed[a.args[i]] = v;
    }
    if (!ok) continue;
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t rest = x;
      bool match = true;
      for (std::uint32_t v = 0; v < vars && match; ++v) {
        const std::size_t val = rest % e.n;
        rest /= e.n;
        match = fixed[v] < 0 || static_cast<std::size_t>(fixed[v]) == val;
      }
      if (match) out.set(x);
    }
  }
  return out;
}

Bits project(const Bits& assign, std::size_t n, std::uint32_t vars, std::uint32_t k) {
  Bits out;
  const std::size_t total = ipow(n, vars);
  const std::size_t mod = ipow(n, k);
  for (std::size_t x = 0; x < total; ++x) {
    if (assign.test(x)) out.set(x % mod);  // factor 0 fastest, answer variables come first
  }
  if (vars == 0) out.set(0);
  return out;
}

std::vector<Atom> atoms_over_vars(const Schema& s, std::uint32_t v) {
  std::vector<Atom> out;
  for (Symbol sym : s.symbols()) {
    const auto ar = static_cast<std::size_t>(symbol_arity(sym));
    const std::size_t count = ipow(v, ar);
    for (std::size_t x = 0; x < count; ++x) {
      Atom a{sym, {}};
      std::size_t rest = x;
      for (std::size_t i = 0; i < ar; ++i) {
        a.args.push_back(static_cast<std::uint32_t>(rest % v));
        rest /= v;
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

// CQs over exactly `vars` variables, all used, with the given atom bound.
void for_each_small_cq(const Schema& schema, std::uint32_t vars, std::size_t max_atoms,
                       const std::function<void(const std::vector<Atom>&)>& f) {
  const auto all = atoms_over_vars(schema, vars);
  std::vector<Atom> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!chosen.empty()) {
      std::vector<bool> used(vars, false);
      for (const Atom& a : chosen) {
        for (auto v : a.args) used[v] = true;
      }
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) f(chosen);
    }
    if (chosen.size() == max_atoms) return;
    for (std::size_t i = from; i < all.size(); ++i) {
      chosen.push_back(all[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

struct GroupKey {
  std::uint32_t k, extra;
  bool guarded, frontier_guarded, single;
  auto operator<=>(const GroupKey&) const = default;
};

struct Group {
  std::map<std::string, std::vector<Atom>> by_signature;
};

std::string encode(const std::vector<Bits>& sig) {
  std::string out;
  for (const Bits& b : sig) out += b.to_string();
  return out;
}

}  // namespace

std::optional<Tgd> signature_fit(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                                 const OracleBudget& budget) {
  Schema schema;
  for (const auto& I : P) schema = Schema::merge(schema, I.schema());
  for (const auto& I : N) schema = Schema::merge(schema, I.schema());
  std::vector<Example> ex;
  for (const auto* list : {&P, &N}) {
    for (const auto& I : *list) {
      Example e{&I, I.adom().size(), {}};
      for (std::uint32_t i = 0; i < I.adom().size(); ++i) e.index.emplace(I.adom()[i], i);
      if (ipow(std::max<std::size_t>(e.n, 1), budget.max_vars) > kBits) {
        throw UsageError("signature oracle supports at most 256 assignments per example");
      }
      ex.push_back(std::move(e));
    }
  }
  const std::uint32_t V = static_cast<std::uint32_t>(budget.max_vars);
  std::map<GroupKey, Group> bodies, heads;
  for (std::uint32_t v = 1; v <= V; ++v) {
    const auto all = atoms_over_vars(schema, v);
    std::vector<std::vector<Bits>> atom_sets(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (const auto& e : ex) atom_sets[i].push_back(atom_bits(e, all[i], v));
    }
    auto atom_id = [&](const Atom& a) {
      return static_cast<std::size_t>(std::find(all.begin(), all.end(), a) - all.begin());
    };
    const std::size_t body_cap = v <= budget.dense_vars ? all.size() : budget.max_body_atoms;
    const std::size_t head_cap = v <= budget.dense_vars ? all.size() : budget.max_head_atoms;
    for_each_small_cq(schema, v, std::max(body_cap, head_cap), [&](const std::vector<Atom>& atoms) {
      std::vector<Bits> assign;
      for (std::size_t e = 0; e < ex.size(); ++e) {
        Bits b;
        b.set();
        for (const Atom& a : atoms) b &= atom_sets[atom_id(a)][e];
        assign.push_back(b);
      }
      for (std::uint32_t k = 0; k <= v; ++k) {
        std::vector<Bits> sig;
        for (std::size_t e = 0; e < ex.size(); ++e) sig.push_back(project(assign[e], ex[e].n, v, k));
        const std::string code = encode(sig);
        bool guarded = false, fguarded = k == 0;
        for (const Atom& a : atoms) {
          std::vector<bool> cov(v, false);
          for (auto x : a.args) cov[x] = true;
          guarded = guarded || std::all_of(cov.begin(), cov.end(), [](bool b) { return b; });
          fguarded = fguarded || std::all_of(cov.begin(), cov.begin() + k, [](bool b) { return b; });
        }
        const bool single = atoms.size() == 1;
        if (atoms.size() <= body_cap) {
          bodies[{k, v - k, guarded, fguarded, single}].by_signature.emplace(code, atoms);
        }
        if (atoms.size() <= head_cap) heads[{k, v - k, false, false, single}].by_signature.emplace(code, atoms);
      }
    });
  }

  const std::size_t np = P.size();
  auto fits = [&](const std::string& b, const std::string& h) {
    for (std::size_t e = 0; e < ex.size(); ++e) {
      const Bits bb(b.substr(e * kBits, kBits));
      const Bits hb(h.substr(e * kBits, kBits));
      const bool inc = (bb & ~hb).none();
      if (e < np ? !inc : inc) return false;
    }
    return true;
  };
  for (const auto& [bk, bg] : bodies) {
    if (cls == TgdClass::GTGD && !bk.guarded) continue;
    if (cls == TgdClass::FGTGD && !bk.frontier_guarded) continue;
    if (cls == TgdClass::F1TGD && bk.k > 1) continue;
    if (cls == TgdClass::IND && !bk.single) continue;
    for (const auto& [hk, hg] : heads) {
      if (hk.k != bk.k || bk.k + bk.extra + hk.extra > V) continue;
      if (cls == TgdClass::FullTGD && hk.extra != 0) continue;
      if (cls == TgdClass::IND && !hk.single) continue;
      for (const auto& [bsig, batoms] : bg.by_signature) {
        for (const auto& [hsig, hatoms] : hg.by_signature) {
          if (!fits(bsig, hsig)) continue;
          Tgd t;
          const std::uint32_t k = bk.k;
          for (std::uint32_t i = 0; i < k; ++i) t.variables.push_back("x" + std::to_string(i + 1));
          for (std::uint32_t i = 0; i < bk.extra; ++i) t.variables.push_back("y" + std::to_string(i + 1));
          for (std::uint32_t i = 0; i < hk.extra; ++i) t.variables.push_back("z" + std::to_string(i + 1));
          t.body = batoms;
          for (Atom a : hatoms) {
            for (auto& x : a.args) {
              if (x >= k) x += bk.extra;
            }
            t.head.push_back(a);
          }
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ConceptInclusion> dl_oracle_fit(const std::vector<Instance>& P, const std::vector<Instance>& N,
                                              Dialect dialect) {
  std::vector<Instance> all(P);
  all.insert(all.end(), N.begin(), N.end());
  std::vector<const Instance*> ptrs;
  for (const auto& I : all) ptrs.push_back(&I);
  const auto sig = signature_of(ptrs);
  const Instance U = disjoint_union(all);
  const Interpretation I = Interpretation::from_instance(U, sig);
  const std::size_t n = I.size();

  std::vector<Bitset> segment(all.size(), Bitset(n));
  for (std::uint32_t d = 0; d < n; ++d) segment[U.adom()[d].index()].set(d);

  std::vector<Bitset> sets;
  std::vector<Concept> concepts;
  std::map<Bitset, std::size_t> known;
  auto add = [&](Bitset b, Concept c) {
    if (known.emplace(b, sets.size()).second) {
      sets.push_back(std::move(b));
      concepts.push_back(c);
    }
  };
  add(Bitset(n).set(), Concept::top());
  if (allows_bottom(dialect)) add(Bitset(n), Concept::bottom());
  for (std::size_t a = 0; a < sig->names.size(); ++a) {
    Bitset b(n);
    for (std::uint32_t d = 0; d < n; ++d) {
      if (I.label(d).test(a)) b.set(d);
    }
    add(b, Concept::name(sig->names[a]));
  }
  const bool inverse = allows_inverse(dialect);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t r = 0; r < sig->roles.size(); ++r) {
      for (bool inv : {false, true}) {
        if (inv && !inverse) continue;
        Bitset b(n);
        for (auto x = sets[i].find_first(); x != Bitset::npos; x = sets[i].find_next(x)) {
          for (auto d : I.neighbours(static_cast<int>(r), !inv, static_cast<std::uint32_t>(x))) b.set(d);
        }
        add(b, Concept::exists(Role{sig->roles[r], inv}, concepts[i]));
      }
    }
    for (std::size_t j = 0; j < i; ++j) add(sets[i] & sets[j], Concept::conj({concepts[i], concepts[j]}));
  }

  Bitset pos_mask(n);
  for (std::size_t e = 0; e < P.size(); ++e) pos_mask |= segment[e];
  for (std::size_t c = 0; c < sets.size(); ++c) {
    for (std::size_t d = 0; d < sets.size(); ++d) {
      const Bitset diff = sets[c] - sets[d];
      if (diff.intersects(pos_mask)) continue;
      bool all_neg = true;
      for (std::size_t e = P.size(); e < all.size() && all_neg; ++e) all_neg = diff.intersects(segment[e]);
      if (all_neg) return ConceptInclusion{concepts[c], concepts[d]};
    }
  }
  return std::nullopt;
}

Instance random_instance(std::mt19937_64& rng, const Schema& schema, std::size_t values, double p) {
  std::bernoulli_distribution coin(p);
  Instance I(schema);
  std::vector<Value> vals;
  for (std::size_t i = 0; i < values; ++i) vals.push_back(Value::atom(std::string(1, static_cast<char>('a' + i))));
  for (Symbol s : schema.symbols()) {
    const auto ar = static_cast<std::size_t>(symbol_arity(s));
    const std::size_t count = ipow(values, ar);
    for (std::size_t x = 0; x < count; ++x) {
      std::vector<Value> args;
      std::size_t rest = x;
      for (std::size_t i = 0; i < ar; ++i) {
        args.push_back(vals[rest % values]);
        rest /= values;
      }
      if (coin(rng)) I.add(s, std::move(args));
    }
  }
  return I;
}

FittingInstance random_fitting_instance(std::mt19937_64& rng, const CorpusOptions& options) {
  const Symbol R = intern_symbol("R", 2), S = intern_symbol("S", 2), A = intern_symbol("A", 1);
  const Schema schemas[] = {Schema{R}, Schema{R, S}, Schema{A, R}};
  const Schema& schema = schemas[std::uniform_int_distribution<int>(0, 2)(rng)];
  auto count = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(1, hi)(rng); };
  auto example = [&] {
    while (true) {
      Instance I = random_instance(rng, schema, count(options.max_values), options.fact_probability);
      if (!I.empty()) return I;
    }
  };
  FittingInstance out;
  const std::size_t np = count(options.max_positives), nn = count(options.max_negatives);
  for (std::size_t i = 0; i < np; ++i) out.positives.push_back(example());
  for (std::size_t i = 0; i < nn; ++i) out.negatives.push_back(example());
  return out;
}

std::vector<FittingInstance> random_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<FittingInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_fitting_instance(rng, options));
  return out;
}

}  // namespace ontofit
