#pragma once

// Minimal model size from a strong witness: the fewest blocks of an
// arrangement δ over vars(wit(phi)) with wit(phi) ∧ δ satisfiable.

#include <optional>

#include "tcomb/theory.hpp"

namespace tcomb {

inline constexpr std::size_t kMinmodVarLimit = 9;

struct MinmodResult {
  Card value;
  std::optional<Arrangement> arrangement;  // absent when the theory reports ℵ0 directly
};

/// nullopt when phi is unsatisfiable. Needs a strong witness.
std::optional<MinmodResult> extract_minmod(const TheoryHandle& h, const Cube& phi,
                                           std::size_t var_limit = kMinmodVarLimit);

/// Uses the theory's own minmod when it has one, the extractor otherwise.
std::optional<MinmodResult> minmod(const TheoryHandle& h, const Cube& phi);

}  // namespace tcomb
