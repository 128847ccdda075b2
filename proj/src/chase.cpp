#include "ontofit/chase.hpp"

#include <set>

#include "ontofit/errors.hpp"

namespace ontofit {

namespace {

struct Trigger {
  std::size_t rule;
  std::vector<Value> frontier;
};

struct PreparedRule {
  PointedInstance body;              // point = frontier values
  std::vector<std::uint32_t> frontier;
  std::vector<std::uint32_t> existentials;
};

}  // namespace

ChaseResult chase(const Instance& instance, const TgdOntology& o, const ChaseLimits& limits,
                  const ChaseObserver& observer) {
  ChaseResult result;
  result.instance = instance;
  for (const Tgd& t : o) result.instance.extend_schema(t.schema());
  std::vector<PreparedRule> rules;
  for (const Tgd& t : o) rules.push_back({canonical_instance(t.body_query()), t.frontier(), t.existentials()});

  std::set<std::pair<std::size_t, std::vector<std::uint32_t>>> fired;
  std::size_t next_null = 0;
  auto fresh_null = [&] {
    while (true) {
      Value v = Value::atom("_n" + std::to_string(next_null++));
      if (!result.instance.in_adom(v)) return v;
    }
  };
  auto key = [](const Trigger& tr) {
    std::vector<std::uint32_t> ids;
    for (Value v : tr.frontier) ids.push_back(v.id());
    return std::make_pair(tr.rule, ids);
  };
  auto collect = [&] {
    std::vector<Trigger> out;
    const HomTarget target(result.instance);
    for (std::size_t r = 0; r < rules.size(); ++r) {
      auto visit = [&](const std::vector<Value>& image) {
        Trigger tr{r, image};
        if (!fired.count(key(tr))) out.push_back(std::move(tr));
        return true;
      };
      if (o[r].body.empty()) {
        visit({});
      } else {
        for_each_image(PointedInstance{rules[r].body.instance, {}}, target, {}, rules[r].body.point, visit);
      }
    }
    return out;
  };

  if (observer && observer(result.instance)) return result;
  while (true) {
    std::vector<Trigger> triggers = collect();
    if (triggers.empty()) {
      result.saturated = true;
      return result;
    }
    if (result.rounds >= limits.max_rounds) return result;
    ++result.rounds;
    for (const Trigger& tr : triggers) {
      fired.insert(key(tr));
      const Tgd& t = o[tr.rule];
      std::vector<Value> assignment(t.variables.size());
      for (std::size_t i = 0; i < rules[tr.rule].frontier.size(); ++i) {
        assignment[rules[tr.rule].frontier[i]] = tr.frontier[i];
      }
      for (auto z : rules[tr.rule].existentials) {
        assignment[z] = fresh_null();
        ++result.nulls;
      }
      for (const Atom& a : t.head) {
        std::vector<Value> args;
        for (auto v : a.args) args.push_back(assignment[v]);
        result.instance.add(a.symbol, std::move(args));
      }
      if (result.instance.size() > limits.max_facts) return result;
    }
    if (observer && observer(result.instance)) return result;
  }
}

std::string entailment_name(Entailment e) {
  switch (e) {
    case Entailment::Yes:
      return "YES";
    case Entailment::No:
      return "NO";
    case Entailment::Unknown:
      return "UNKNOWN";
  }
  return {};
}

Entailment entails(const TgdOntology& o, const Tgd& t, const ChaseLimits& limits) {
  const PointedInstance body = canonical_instance(t.body_query());
  const PointedInstance head = canonical_instance(t.head_query());
  bool found = false;
  const ChaseResult r = chase(body.instance, o, limits, [&](const Instance& current) {
    found = has_homomorphism(head, HomTarget(current), body.point);
    return found;
  });
  if (found) return Entailment::Yes;
  return r.saturated ? Entailment::No : Entailment::Unknown;
}

}  // namespace ontofit
