#pragma once

// Flattening of cubes over one unary function symbol (and optionally one
// constant) into chains x_{i,0}, ..., x_{i,M_i} with x_{i,j+1} = fn(x_{i,j}),
// and enumeration of the equivalences on chain nodes that satisfy the
// flattened cube together with functional consistency.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tcomb/logic.hpp"

namespace tcomb {

class ChainSystem {
 public:
  struct Options {
    std::string fn;
    /// Constant whose chain is node 0; required for orbit queries.
    std::optional<std::string> anchor;
    /// Lengthen the anchor chain to M0' + Σ (M_i + 1).
    bool extend_anchor = false;
  };

  static constexpr std::size_t kMaxNodes = 64;

  ChainSystem(const Cube& cube, Options opts);

  std::size_t node_count() const { return succ_.size(); }
  std::size_t head_count() const { return heads_.size(); }
  const Term& head(std::size_t i) const { return heads_[i]; }
  /// M_i: the last index on chain i.
  std::size_t chain_end(std::size_t i) const { return ends_[i]; }
  int node(std::size_t head, std::size_t j) const { return start_[head] + static_cast<int>(j); }
  /// -1 at the end of a chain.
  int succ(int node) const { return succ_[static_cast<std::size_t>(node)]; }

  /// Visits each equivalence (class id per node, restricted growth order)
  /// satisfying the flattened cube and functional consistency. Stops when
  /// the visitor returns false; returns false iff stopped.
  bool for_each_model(const std::function<bool(const std::vector<int>& cls, int classes)>& visit) const;

 private:
  struct Constraint {
    int a, b;
    bool positive;
  };

  int node_of(const Term& t) const;
  bool consistent(const std::vector<int>& cls, int v) const;
  bool extend(std::vector<int>& cls, int v, int classes,
              const std::function<bool(const std::vector<int>&, int)>& visit) const;

  Options opts_;
  std::vector<Term> heads_;
  std::vector<std::size_t> ends_;
  std::vector<int> start_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<std::vector<Constraint>> due_;  // constraints checked when their later node is assigned
  bool trivially_false_ = false;
};

/// Classes reachable from the anchor's class under the induced partial map.
struct QuotientOrbit {
  int size = 0;
  bool total = false;  // the partial map is defined on every orbit class
};
QuotientOrbit quotient_orbit(const ChainSystem& sys, const std::vector<int>& cls, int classes);

}  // namespace tcomb
