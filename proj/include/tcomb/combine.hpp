#pragma once

// Combination of two theories over disjoint signatures: purify the mixed cube,
// guess an arrangement of the shared variables, reason per component.

#include <optional>
#include <string>
#include <vector>

#include "tcomb/theory.hpp"

namespace tcomb {

enum class Engine : std::uint8_t { NelsonOppen, GentleCfs, MinmodInfdec, BothGentle };
const char* to_string(Engine e);
/// "no", "gentle-cfs", "minmod-infdec", "both-gentle"
std::optional<Engine> engine_from_name(const std::string& name);

struct CombinationProblem {
  TheoryHandle t1;
  TheoryHandle t2;
  Cube mixed;
};

struct CombinationResult {
  Verdict verdict = Verdict::Unsat;
  /// The arrangement of shared variables that made the problem sat.
  std::optional<Arrangement> arrangement;
  /// Per-component facts for the deciding arrangement (spectra, minmod).
  std::vector<std::string> notes;
  std::size_t arrangements_tried = 0;
};

CombinationResult combine_nelson_oppen(const CombinationProblem& p);
CombinationResult combine_gentle_cfs(const CombinationProblem& p);
CombinationResult combine_minmod_infdec(const CombinationProblem& p);
CombinationResult combine_both_gentle(const CombinationProblem& p);

CombinationResult combine(Engine e, const CombinationProblem& p);
/// Sat iff some disjunct of the DNF is sat.
CombinationResult combine_qf(Engine e, const TheoryHandle& t1, const TheoryHandle& t2, const Formula& mixed);

}  // namespace tcomb
