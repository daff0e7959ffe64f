#pragma once

// Cardinality spectra: finite sets, cofinite complements (always containing
// aleph-zero), and the aleph-zero singleton.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcomb/logic.hpp"

namespace tcomb {

class Spectrum {
 public:
  enum class Shape : std::uint8_t { Finite, CoFinite, InfinityOnly };

  static Spectrum finite(std::set<std::uint64_t> members);
  /// Everything in N* ∪ {ℵ0} except `excluded`.
  static Spectrum cofinite(std::set<std::uint64_t> excluded);
  static Spectrum infinity_only() { return Spectrum(Shape::InfinityOnly, {}); }
  static Spectrum empty() { return finite({}); }

  Shape shape() const { return shape_; }
  /// Members for Finite, exclusions for CoFinite, empty for InfinityOnly.
  const std::set<std::uint64_t>& set() const { return set_; }
  bool is_empty() const { return shape_ == Shape::Finite && set_.empty(); }
  bool contains(Card k) const;

  /// `{2,3,4}`, `co{1,2}`, `{ℵ0}`
  std::string str() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  Spectrum(Shape s, std::set<std::uint64_t> v) : shape_(s), set_(std::move(v)) {}
  Shape shape_;
  std::set<std::uint64_t> set_;
};

/// [lo, hi] or, without hi, {n >= lo} ∪ {ℵ0}.
struct IntervalPiece {
  std::uint64_t lo = 1;
  std::optional<std::uint64_t> hi;

  static IntervalPiece closed(std::uint64_t lo, std::uint64_t hi);
  static IntervalPiece tail(std::uint64_t lo);
};

Spectrum normalize(const std::vector<IntervalPiece>& pieces);
Spectrum spectrum_union(const Spectrum& a, const Spectrum& b);
/// Finite part of a spectrum restricted to [1, max].
std::set<std::uint64_t> finite_part(const Spectrum& s, std::uint64_t max);

bool intersect_empty(const Spectrum& a, const Spectrum& b);

/// Disjointness of a gentle spectrum from a spectrum known only through
/// finite membership and a "has a model of size at least n" test.
/// For CoFinite(S) the tail starts at 1 + max(S); probe is never called at
/// or above that point.
bool intersect_empty_vs_cfs(const Spectrum& a, const std::function<bool(std::uint64_t)>& probe,
                            const std::function<bool(std::uint64_t)>& inf_tail);

/// Smallest n with {m >= n} ∪ {ℵ0} contained in a cofinite spectrum.
std::uint64_t tail_start(const Spectrum& cofinite);

}  // namespace tcomb
