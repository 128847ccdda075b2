#include "ontofit/tgd_fitting.hpp"

#include <algorithm>
#include <map>

#include "ontofit/errors.hpp"
#include "ontofit/operations.hpp"
#include "rgs.hpp"

namespace ontofit {

bool check_fit(const Tgd& t, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  return std::all_of(P.begin(), P.end(), [&](const Instance& I) { return model_check(I, t); }) &&
         std::none_of(N.begin(), N.end(), [&](const Instance& I) { return model_check(I, t); });
}

bool check_fit(const TgdOntology& o, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  return std::all_of(P.begin(), P.end(), [&](const Instance& I) { return satisfies(I, o); }) &&
         std::none_of(N.begin(), N.end(), [&](const Instance& I) { return satisfies(I, o); });
}

namespace {

constexpr std::size_t kCoreValueCap = 200;

void check_inputs(const std::vector<Instance>& P, const std::vector<Instance>& N) {
  if (P.empty() || N.empty()) throw UsageError("fitting needs at least one positive and one negative example");
}

Schema merged(const std::vector<Instance>& P, const std::vector<Instance>& N) {
  Schema s;
  for (const auto& I : P) s = Schema::merge(s, I.schema());
  for (const auto& I : N) s = Schema::merge(s, I.schema());
  return s;
}

std::vector<Instance> with_schema(const std::vector<Instance>& list, const Schema& s) {
  std::vector<Instance> out = list;
  for (auto& I : out) I.extend_schema(s);
  return out;
}

std::string describe(const std::vector<Value>& M) {
  std::string out = "{";
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (i) out += ",";
    out += M[i].to_string();
  }
  return out + "}";
}

std::vector<Value> component(const std::vector<Value>& tuple, std::size_t i) {
  std::vector<Value> out;
  for (Value v : tuple) out.push_back(v.parts()[i]);
  return out;
}

// Canonical CQ of a product-based pointed instance, after a core pass when it is small.
ConjunctiveQuery body_of(const PointedInstance& p, const Limits& limits) {
  if (p.instance.adom().size() <= kCoreValueCap) {
    try {
      return canonical_cq(core(p, limits));
    } catch (const ResourceLimit&) {
    }
  }
  return canonical_cq(p);
}

// First fact over the values of `tuple` missing from I, as an atom over answer positions.
Atom missing_fact_atom(const Instance& I, const std::vector<Value>& tuple, const ConjunctiveQuery& body) {
  std::vector<Value> vals;
  for (Value v : tuple) {
    if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
  }
  auto answer_var = [&](Value v) {
    const auto pos = static_cast<std::size_t>(std::find(tuple.begin(), tuple.end(), v) - tuple.begin());
    return body.answer[pos];
  };
  for (Symbol s : I.schema().symbols()) {
    const auto ar = static_cast<std::size_t>(symbol_arity(s));
    std::vector<std::size_t> idx(ar, 0);
    while (true) {
      std::vector<Value> args;
      for (auto i : idx) args.push_back(vals[i]);
      if (!I.contains(s, args)) {
        Atom a{s, {}};
        for (Value v : args) a.args.push_back(answer_var(v));
        return a;
      }
      std::size_t i = ar;
      while (i > 0 && idx[i - 1] + 1 == vals.size()) idx[--i] = 0;
      if (i == 0) break;
      ++idx[i - 1];
    }
  }
  throw InvariantViolation("tuple " + describe(tuple) + " is total");
}

void verify(const Tgd& t, TgdClass cls, const std::vector<Instance>& P, const std::vector<Instance>& N) {
  if (!in_class(t, cls)) throw InvariantViolation("witness " + t.to_string() + " is outside class " + class_name(cls));
  if (!check_fit(t, P, N)) throw InvariantViolation("witness " + t.to_string() + " does not fit");
}

std::vector<std::vector<Value>> candidate_sets(const Instance& prod, TgdClass cls, const Limits& limits) {
  std::vector<std::vector<Value>> out;
  const auto& dom = prod.adom();
  switch (cls) {
    case TgdClass::GTGD:
    case TgdClass::FGTGD:
      return maximally_guarded_sets(prod);
    case TgdClass::F1TGD:
      for (Value v : dom) out.push_back({v});
      return out;
    case TgdClass::TGD: {
      if (dom.size() > limits.max_subset_domain) {
        throw ResourceLimit("product has " + std::to_string(dom.size()) + " values; subset enumeration is capped at " +
                            std::to_string(limits.max_subset_domain));
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dom.size()); ++mask) {
        std::vector<Value> M;
        for (std::size_t i = 0; i < dom.size(); ++i) {
          if (mask >> i & 1u) M.push_back(dom[i]);
        }
        out.push_back(std::move(M));
      }
      return out;
    }
    default:
      throw UsageError("no frontier candidates for class " + class_name(cls));
  }
}

TgdFitVerdict fit_frontier_classes(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                                   const Limits& limits) {
  TgdFitVerdict verdict;
  const Instance prod = direct_product(N, limits);
  std::vector<HomTarget> pos;
  for (const auto& J : P) pos.emplace_back(J);
  for (const auto& M : candidate_sets(prod, cls, limits)) {
    bool total = false;
    for (std::size_t i = 0; i < N.size() && !total; ++i) total = is_total_tuple(N[i], component(M, i));
    if (total) continue;
    CandidateOutcome outcome{describe(M), true, true};
    const PointedInstance src{cls == TgdClass::GTGD ? restrict_to(prod, M) : prod, M};
    std::vector<PointedInstance> S;
    for (std::size_t j = 0; j < P.size(); ++j) {
      for_each_image(
          PointedInstance{src.instance, {}}, pos[j], {}, M,
          [&](const std::vector<Value>& img) {
            S.push_back({P[j], img});
            return true;
          },
          limits);
    }
    if (S.empty()) {
      outcome.condition1 = false;
      outcome.condition2 = false;
      verdict.certificate.push_back(outcome);
      const ConjunctiveQuery body = body_of(src, limits);
      Tgd t{body.variables, body.atoms, {}};
      for (std::size_t i = 0; i < N.size(); ++i) {
        const Atom a = missing_fact_atom(N[i], component(M, i), body);
        if (std::find(t.head.begin(), t.head.end(), a) == t.head.end()) t.head.push_back(a);
      }
      verify(t, cls, P, N);
      verdict.verdict = Verdict::Exists;
      verdict.witness.push_back(t);
      return verdict;
    }
    const PointedInstance K = reduced_product(S, limits);
    const PointedInstance Kd = cls == TgdClass::F1TGD ? K : diversify(K);
    bool maps = false;
    for (std::size_t i = 0; i < N.size() && !maps; ++i) {
      maps = has_homomorphism(Kd, PointedInstance{N[i], component(M, i)}, limits);
    }
    outcome.condition2 = maps;
    verdict.certificate.push_back(outcome);
    if (!maps) {
      const Tgd t = Tgd::from_queries(body_of(src, limits), canonical_cq(Kd));
      verify(t, cls, P, N);
      verdict.verdict = Verdict::Exists;
      verdict.witness.push_back(t);
      return verdict;
    }
  }
  verdict.verdict = Verdict::No;
  return verdict;
}

TgdFitVerdict fit_full(const std::vector<Instance>& P, const std::vector<Instance>& N, const Limits& limits) {
  TgdFitVerdict verdict;
  const Instance prod = direct_product(N, limits);
  const auto& dom = prod.adom();
  const PointedInstance src{prod, {}};
  std::vector<HomTarget> pos;
  for (const auto& J : P) pos.emplace_back(J);
  std::map<std::pair<Symbol, std::vector<std::uint32_t>>, bool> forced_memo;
  auto forced = [&](Symbol s, const std::vector<Value>& a) {
    std::vector<std::uint32_t> ids;
    for (Value v : a) ids.push_back(v.id());
    auto [it, fresh] = forced_memo.emplace(std::make_pair(s, ids), true);
    if (!fresh) return it->second;
    bool ok = true;
    for (std::size_t j = 0; j < P.size() && ok; ++j) {
      for_each_image(
          src, pos[j], {}, a,
          [&](const std::vector<Value>& img) {
            ok = P[j].contains(s, img);
            return ok;
          },
          limits);
    }
    it->second = ok;
    return ok;
  };
  std::vector<std::pair<Symbol, std::vector<Value>>> chosen;
  for (std::size_t i = 0; i < N.size(); ++i) {
    bool found = false;
    for (Symbol s : prod.schema().symbols()) {
      const auto ar = static_cast<std::size_t>(symbol_arity(s));
      std::vector<std::size_t> idx(ar, 0);
      while (!found && !dom.empty()) {
        std::vector<Value> a;
        for (auto k : idx) a.push_back(dom[k]);
        if (!N[i].contains(s, component(a, i)) && forced(s, a)) {
          chosen.emplace_back(s, a);
          found = true;
          break;
        }
        std::size_t k = ar;
        while (k > 0 && idx[k - 1] + 1 == dom.size()) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
      }
      if (found) break;
    }
    verdict.certificate.push_back({"negative " + std::to_string(i + 1), !found, true});
    if (!found) {
      verdict.verdict = Verdict::No;
      return verdict;
    }
  }
  std::vector<Value> point;
  for (const auto& [s, a] : chosen) {
    for (Value v : a) {
      if (std::find(point.begin(), point.end(), v) == point.end()) point.push_back(v);
    }
  }
  const ConjunctiveQuery body = body_of(PointedInstance{prod, point}, limits);
  Tgd t{body.variables, body.atoms, {}};
  for (const auto& [s, a] : chosen) {
    Atom atom{s, {}};
    for (Value v : a) {
      atom.args.push_back(body.answer[static_cast<std::size_t>(std::find(point.begin(), point.end(), v) - point.begin())]);
    }
    if (std::find(t.head.begin(), t.head.end(), atom) == t.head.end()) t.head.push_back(atom);
  }
  verify(t, TgdClass::FullTGD, P, N);
  verdict.verdict = Verdict::Exists;
  verdict.witness.push_back(t);
  return verdict;
}

}  // namespace

TgdFitVerdict fit_ind(const std::vector<Instance>& P, const std::vector<Instance>& N, const Limits& limits) {
  check_inputs(P, N);
  const Schema schema = merged(P, N);
  TgdFitVerdict verdict;
  if (static_cast<std::size_t>(schema.max_arity()) > limits.max_ind_arity) {
    verdict.verdict = Verdict::ResourceLimit;
    verdict.note = "arity exceeds the IND arity cap " + std::to_string(limits.max_ind_arity);
    return verdict;
  }
  std::vector<HomTarget> pos, neg;
  for (const auto& I : P) pos.emplace_back(I);
  for (const auto& I : N) neg.emplace_back(I);
  std::size_t examined = 0;
  for (Symbol r : schema.symbols()) {
    const int a = symbol_arity(r);
    detail::for_each_rgs(a, a, [&](const std::vector<std::uint32_t>& bp) {
      const std::uint32_t k = *std::max_element(bp.begin(), bp.end()) + 1;
      for (Symbol s : schema.symbols()) {
        const int b = symbol_arity(s);
        const bool more = detail::for_each_rgs(
            b, k + b,
            [&](const std::vector<std::uint32_t>& hp) {
              ++examined;
              Tgd t;
              for (std::uint32_t v = 0; v < k; ++v) t.variables.push_back("x" + std::to_string(v + 1));
              const std::uint32_t top = *std::max_element(hp.begin(), hp.end());
              for (std::uint32_t v = k; v <= top; ++v) t.variables.push_back("z" + std::to_string(v - k + 1));
              t.body.push_back({r, bp});
              t.head.push_back({s, hp});
              for (const auto& target : neg) {
                if (model_check(target, t, limits)) return true;
              }
              for (const auto& target : pos) {
                if (!model_check(target, t, limits)) return true;
              }
              verify(t, TgdClass::IND, P, N);
              verdict.verdict = Verdict::Exists;
              verdict.witness.push_back(t);
              return false;
            },
            k);
        if (!more) return false;
      }
      return true;
    });
    if (verdict.exists()) break;
  }
  if (!verdict.exists()) {
    verdict.verdict = Verdict::No;
    verdict.note = std::to_string(examined) + " INDs examined";
  }
  return verdict;
}

TgdFitVerdict fit_tgd(const std::vector<Instance>& P0, const std::vector<Instance>& N0, TgdClass cls,
                      const Limits& limits) {
  check_inputs(P0, N0);
  if (cls == TgdClass::IND) return fit_ind(P0, N0, limits);
  const Schema schema = merged(P0, N0);
  const auto P = with_schema(P0, schema);
  const auto N = with_schema(N0, schema);
  try {
    return cls == TgdClass::FullTGD ? fit_full(P, N, limits) : fit_frontier_classes(P, N, cls, limits);
  } catch (const ResourceLimit& e) {
    TgdFitVerdict verdict;
    verdict.verdict = Verdict::ResourceLimit;
    verdict.note = e.what();
    return verdict;
  }
}

TgdFitVerdict fit_ontology(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                           const Limits& limits) {
  check_inputs(P, N);
  TgdFitVerdict verdict;
  for (std::size_t j = 0; j < N.size(); ++j) {
    TgdFitVerdict one = fit_tgd(P, {N[j]}, cls, limits);
    for (auto& c : one.certificate) {
      c.candidate = "negative " + std::to_string(j + 1) + " " + c.candidate;
      verdict.certificate.push_back(std::move(c));
    }
    if (!one.exists()) {
      verdict.verdict = one.verdict;
      verdict.note = one.note;
      verdict.witness.clear();
      return verdict;
    }
    const Tgd& t = one.witness.front();
    const bool dup = std::any_of(verdict.witness.begin(), verdict.witness.end(),
                                 [&](const Tgd& u) { return tgd_isomorphic(t, u); });
    if (!dup) verdict.witness.push_back(t);
  }
  if (!check_fit(verdict.witness, P, N)) throw InvariantViolation("ontology witness does not fit");
  verdict.verdict = Verdict::Exists;
  return verdict;
}

}  // namespace ontofit
