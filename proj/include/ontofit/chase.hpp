#pragma once

#include <cstddef>
#include <functional>

#include "ontofit/limits.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit {

struct ChaseResult {
  Instance instance;
  bool saturated = false;
  std::size_t rounds = 0;
  std::size_t nulls = 0;
};

// Called with the current instance before the first round and after each round;
// returning true stops the chase early.
using ChaseObserver = std::function<bool(const Instance&)>;

// Each rule fires at most once per image of its frontier; nulls are named _n<k>.
ChaseResult chase(const Instance& instance, const TgdOntology& o, const ChaseLimits& limits = {},
                  const ChaseObserver& observer = {});

enum class Entailment { Yes, No, Unknown };
std::string entailment_name(Entailment e);

Entailment entails(const TgdOntology& o, const Tgd& t, const ChaseLimits& limits = {});

}  // namespace ontofit
