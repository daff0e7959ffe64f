#pragma once

// Uniform capability record for a theory, plus finite-scale contract checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcomb/logic.hpp"
#include "tcomb/models.hpp"
#include "tcomb/spectrum.hpp"

namespace tcomb {

enum class Verdict : std::uint8_t { Unsat, Sat };
inline bool is_sat(Verdict v) { return v == Verdict::Sat; }
inline Verdict verdict(bool sat) { return sat ? Verdict::Sat : Verdict::Unsat; }
const char* to_string(Verdict v);

enum class Flag : std::uint8_t { StablyInfinite, Smooth, FiniteModelProperty };
const char* to_string(Flag f);

/// Capabilities are plain function objects; an empty one means the theory
/// does not offer it.
struct TheoryHandle {
  std::string name;
  Signature sig;
  MembershipCheck member;

  std::function<Verdict(const Cube&)> decide;
  std::function<Spectrum(const Cube&)> gentle_spectrum;
  /// Spectra that do not fit the gentle shape (e.g. {ℵ0}).
  std::function<Spectrum(const Cube&)> exact_spectrum;
  std::function<bool(const Cube&, std::uint64_t)> contains_finite;
  std::function<Cube(const Cube&)> witness;
  bool strong_witness = false;
  /// Throws on unsatisfiable input.
  std::function<Card(const Cube&)> minmod;
  std::function<Verdict(const Cube&)> infinitely_decidable;
  std::set<Flag> flags;

  bool has(Flag f) const { return flags.count(f) > 0; }
};

/// DNF-expands and asks the handle's decider for each disjunct.
Verdict decide_qf(const TheoryHandle& h, const Formula& phi);

/// Union of the gentle spectra of the disjuncts.
Spectrum spectrum_qf(const TheoryHandle& h, const Formula& phi);

struct ContractReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  void fail(std::string why) {
    passed = false;
    violations.push_back(std::move(why));
  }
};

struct WitnessCheckOptions {
  std::size_t max_k = 6;
  /// Fresh variables added to vars(phi) when forming arrangements.
  std::size_t extra_vars = 1;
  std::size_t max_arrangement_vars = 6;
};

/// Condition (I): for every k <= max_k, phi has a model of size k iff wit(phi)
/// does, and models of wit(phi) satisfy phi. Condition (II'), for strong
/// witnesses: for every arrangement δ over vars(phi) plus fresh variables with
/// wit(phi) ∧ δ satisfiable, there is a model whose domain is named by the
/// variables of wit(phi) ∧ δ.
ContractReport check_witness_contract(const TheoryHandle& h, const Cube& phi, const WitnessCheckOptions& opts = {});

/// For each k <= max_k with a model of phi, confirm models at k+1..k+window.
ContractReport check_smoothness_sample(const TheoryHandle& h, const Cube& phi, std::size_t window,
                                       std::size_t max_k = 6);

}  // namespace tcomb
