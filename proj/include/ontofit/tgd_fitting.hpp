#pragma once

#include <vector>

#include "ontofit/fit_verdict.hpp"
#include "ontofit/limits.hpp"
#include "ontofit/tgd.hpp"

namespace ontofit {

using TgdFitVerdict = FitResult<Tgd>;

// Single TGD of the given class that holds in every positive and fails in every negative.
TgdFitVerdict fit_tgd(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                      const Limits& limits = {});
TgdFitVerdict fit_ind(const std::vector<Instance>& P, const std::vector<Instance>& N, const Limits& limits = {});

// One TGD per negative example.
TgdFitVerdict fit_ontology(const std::vector<Instance>& P, const std::vector<Instance>& N, TgdClass cls,
                           const Limits& limits = {});

bool check_fit(const Tgd& t, const std::vector<Instance>& P, const std::vector<Instance>& N);
bool check_fit(const TgdOntology& o, const std::vector<Instance>& P, const std::vector<Instance>& N);

}  // namespace ontofit
