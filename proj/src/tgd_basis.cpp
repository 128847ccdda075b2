#include "ontofit/tgd_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ontofit/errors.hpp"
#include "ontofit/oracle.hpp"
#include "ontofit/operations.hpp"
#include "rgs.hpp"

namespace ontofit {

std::size_t instance_norm(const std::vector<Instance>& H) {
  std::size_t n = 0;
  for (const auto& I : H) n += I.size();
  return n;
}

namespace {

Schema merged_schema(const std::vector<Instance>& H) {
  Schema s;
  for (const auto& I : H) s = Schema::merge(s, I.schema());
  return s;
}

// All atoms over variables 0..k-1, by symbol then argument tuple.
std::vector<Atom> atoms_over(const Schema& s, std::uint32_t k) {
  std::vector<Atom> out;
  for (Symbol sym : s.symbols()) {
    const int ar = symbol_arity(sym);
    std::vector<std::uint32_t> args(ar, 0);
    while (true) {
      out.push_back({sym, args});
      int i = ar - 1;
      while (i >= 0 && args[i] + 1 == k) args[i--] = 0;
      if (i < 0) break;
      ++args[i];
    }
  }
  return out;
}

using Key = std::vector<std::uint32_t>;

Key canonical_key(const std::vector<Atom>& atoms, std::uint32_t mask, std::uint32_t k) {
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  Key best;
  do {
    std::vector<Key> enc;
    for (const Atom& a : atoms) {
      Key e{a.symbol};
      for (auto v : a.args) e.push_back(perm[v]);
      enc.push_back(std::move(e));
    }
    std::sort(enc.begin(), enc.end());
    Key key;
    std::uint32_t m = 0;
    for (std::uint32_t v = 0; v < k; ++v) {
      if (mask >> v & 1u) m |= 1u << perm[v];
    }
    key.push_back(m);
    for (const auto& e : enc) key.insert(key.end(), e.begin(), e.end());
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Tgd basis_member(const std::vector<Atom>& atoms, std::uint32_t mask, std::uint32_t k, const Schema& schema,
                 const std::vector<Instance>& H, const Limits& limits) {
  ConjunctiveQuery q;
  std::vector<std::uint32_t> rename(k);
  std::size_t xs = 0, ys = 0;
  for (std::uint32_t v = 0; v < k; ++v) {
    if (mask >> v & 1u) {
      rename[v] = static_cast<std::uint32_t>(q.variables.size());
      q.variables.push_back("x" + std::to_string(++xs));
      q.answer.push_back(rename[v]);
    }
  }
  for (std::uint32_t v = 0; v < k; ++v) {
    if (!(mask >> v & 1u)) {
      rename[v] = static_cast<std::uint32_t>(q.variables.size());
      q.variables.push_back("y" + std::to_string(++ys));
    }
  }
  for (const Atom& a : atoms) {
    Atom b{a.symbol, {}};
    for (auto v : a.args) b.args.push_back(rename[v]);
    q.atoms.push_back(b);
  }
  std::vector<PointedInstance> S;
  for (const auto& I : H) {
    for (auto& tuple : evaluate_cq(q, I, limits)) S.push_back({I, std::move(tuple)});
  }
  if (S.empty()) {
    Tgd t{q.variables, q.atoms, {}};
    const auto all = atoms_over(schema, static_cast<std::uint32_t>(xs));
    for (const Atom& a : all) t.head.push_back(a);  // answer variables are 0..xs-1
    return t;
  }
  const PointedInstance product = reduced_product(S, limits);
  const ConjunctiveQuery head = canonical_cq(diversify(product));
  return Tgd::from_queries(q, head);
}

}  // namespace

TgdOntology gtgd_basis(const std::vector<Instance>& H, bool pruned, const Limits& limits) {
  if (H.empty()) throw UsageError("basis needs at least one instance");
  const Schema schema = merged_schema(H);
  const std::size_t max_atoms = pruned ? instance_norm(H) + 1 : static_cast<std::size_t>(-1);
  TgdOntology out;
  std::set<Key> seen;
  std::size_t bodies = 0;
  for (Symbol g : schema.symbols()) {
    const int ar = symbol_arity(g);
    detail::for_each_rgs(ar, ar, [&](const std::vector<std::uint32_t>& pattern) {
      const std::uint32_t k = *std::max_element(pattern.begin(), pattern.end()) + 1;
      const Atom guard{g, pattern};
      std::vector<Atom> others;
      for (Atom& a : atoms_over(schema, k)) {
        if (!(a == guard)) others.push_back(std::move(a));
      }
      const std::size_t max_others = std::min(others.size(), max_atoms - 1);
      std::vector<Atom> body{guard};
      std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (++bodies > limits.max_enumerated_bodies) {
          throw ResourceLimit("guarded body enumeration exceeds " + std::to_string(limits.max_enumerated_bodies));
        }
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
          if (!seen.insert(canonical_key(body, mask, k)).second) continue;
          out.push_back(basis_member(body, mask, k, schema, H, limits));
        }
        if (body.size() - 1 == max_others) return;
        for (std::size_t i = from; i < others.size(); ++i) {
          body.push_back(others[i]);
          extend(i + 1);
          body.pop_back();
        }
      };
      extend(0);
      return true;
    });
  }
  return out;
}

namespace {

bool ind_holds(const Instance& I, Symbol r, const std::vector<std::uint32_t>& bp, Symbol t,
               const std::vector<std::uint32_t>& hp, std::uint32_t k) {
  std::vector<Value> val(k);
  for (std::size_t fi : I.facts_of(r)) {
    const Fact& f = I.facts()[fi];
    std::vector<bool> set(k, false);
    bool match = true;
    for (std::size_t i = 0; i < bp.size() && match; ++i) {
      if (set[bp[i]]) {
        match = val[bp[i]] == f.args[i];
      } else {
        set[bp[i]] = true;
        val[bp[i]] = f.args[i];
      }
    }
    if (!match) continue;
    bool found = false;
    for (std::size_t gi : I.facts_of(t)) {
      const Fact& g = I.facts()[gi];
      std::vector<Value> ex(hp.size());
      std::vector<bool> ex_set(hp.size(), false);
      bool ok = true;
      for (std::size_t j = 0; j < hp.size() && ok; ++j) {
        if (hp[j] < k) {
          ok = g.args[j] == val[hp[j]];
        } else if (ex_set[hp[j] - k]) {
          ok = g.args[j] == ex[hp[j] - k];
        } else {
          ex_set[hp[j] - k] = true;
          ex[hp[j] - k] = g.args[j];
        }
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Tgd make_ind(Symbol r, const std::vector<std::uint32_t>& bp, Symbol t, const std::vector<std::uint32_t>& hp,
             std::uint32_t k) {
  Tgd out;
  for (std::uint32_t v = 0; v < k; ++v) out.variables.push_back("x" + std::to_string(v + 1));
  const std::uint32_t top = *std::max_element(hp.begin(), hp.end());
  for (std::uint32_t v = k; v <= top; ++v) out.variables.push_back("z" + std::to_string(v - k + 1));
  out.body.push_back({r, bp});
  out.head.push_back({t, hp});
  return out;
}

}  // namespace

TgdOntology ind_basis(const std::vector<Instance>& H, const Limits& limits) {
  if (H.empty()) throw UsageError("basis needs at least one instance");
  const Schema schema = merged_schema(H);
  const std::size_t k_max = static_cast<std::size_t>(schema.max_arity());
  if (k_max > limits.max_ind_arity) {
    throw ResourceLimit("arity " + std::to_string(k_max) + " exceeds the IND arity cap " +
                        std::to_string(limits.max_ind_arity));
  }
  TgdOntology out;
  for (Symbol r : schema.symbols()) {
    const int a = symbol_arity(r);
    detail::for_each_rgs(a, a, [&](const std::vector<std::uint32_t>& bp) {
      const std::uint32_t k = *std::max_element(bp.begin(), bp.end()) + 1;
      for (Symbol t : schema.symbols()) {
        const int b = symbol_arity(t);
        detail::for_each_rgs(
            b, k + b,
            [&](const std::vector<std::uint32_t>& hp) {
              const bool holds = std::all_of(H.begin(), H.end(),
                                             [&](const Instance& I) { return ind_holds(I, r, bp, t, hp, k); });
              if (holds) out.push_back(make_ind(r, bp, t, hp, k));
              return true;
            },
            k);
      }
      return true;
    });
  }
  const double s = static_cast<double>(schema.symbols().size());
  const double k = static_cast<double>(k_max);
  const double bound = s * s * std::pow(2.0 * k, 2.0 * k);
  if (static_cast<double>(out.size()) > bound) throw InvariantViolation("IND basis exceeds its size bound");
  return out;
}

BasisReport verify_basis(const TgdOntology& o, const std::vector<Instance>& H, TgdClass cls,
                         const TgdBudget& budget, const ChaseLimits& chase_limits) {
  BasisReport report;
  std::vector<HomTarget> targets;
  for (const auto& I : H) targets.emplace_back(I);
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (const auto& target : targets) {
      if (!model_check(target, o[i])) {
        report.sound = false;
        report.unsound_members.push_back(i);
        break;
      }
    }
  }
  enumerate_tgds(merged_schema(H), cls, budget, [&](const Tgd& t) {
    for (const auto& target : targets) {
      if (!model_check(target, t)) return true;
    }
    ++report.sampled;
    switch (entails(o, t, chase_limits)) {
      case Entailment::Yes:
        ++report.yes;
        break;
      case Entailment::Unknown:
        ++report.unknown;
        break;
      case Entailment::No:
        ++report.no;
        report.not_entailed.push_back(t);
        break;
    }
    return true;
  });
  return report;
}

}  // namespace ontofit
