#pragma once

#include <string>
#include <vector>

namespace ontofit {

enum class Verdict { Exists, No, ResourceLimit };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Exists:
      return "EXISTS";
    case Verdict::No:
      return "NO";
    case Verdict::ResourceLimit:
      return "RESOURCE-LIMIT";
  }
  return {};
}

// One examined candidate (a product tuple, frontier set, or head choice).
// condition1: some positive matches it; condition2: the candidate head maps
// back into some negative. A candidate with both true blocks a fit.
struct CandidateOutcome {
  std::string candidate;
  bool condition1 = true;
  bool condition2 = true;
};

template <class W>
struct FitResult {
  Verdict verdict = Verdict::No;
  std::vector<W> witness;  // one member for a single constraint, several for an ontology
  std::vector<CandidateOutcome> certificate;
  std::string note;

  bool exists() const { return verdict == Verdict::Exists; }
  bool resource_limited() const { return verdict == Verdict::ResourceLimit; }
};

}  // namespace ontofit
