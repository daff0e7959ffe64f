#pragma once

// Explicit finite interpretations, evaluation, and brute-force model search.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcomb/logic.hpp"

namespace tcomb {

struct PredKey {
  std::string family;
  unsigned index = 1;
  friend auto operator<=>(const PredKey&, const PredKey&) = default;
  friend bool operator==(const PredKey&, const PredKey&) = default;
};

/// Domain is {0, ..., size-1}. Predicates not listed are false.
struct FiniteInterpretation {
  std::size_t size = 1;
  std::map<std::string, std::vector<int>> functions;
  std::map<std::string, int> constants;
  std::map<PredKey, bool> predicates;
  std::map<std::string, int> variables;

  bool predicate(const std::string& family, unsigned index) const;
  /// Throws if a table or value lies outside the domain.
  void validate() const;
};

int eval(const FiniteInterpretation& m, const Term& t);
bool eval(const FiniteInterpretation& m, const Literal& l);
bool eval(const FiniteInterpretation& m, const Cube& c);
bool eval(const FiniteInterpretation& m, const Formula& f);

/// Read-only view over a possibly partial interpretation; unset entries are -1.
/// Membership checks are written against this so that the search can run
/// them on its own state without copying.
class ModelView {
 public:
  std::size_t size() const { return size_; }
  /// nullptr when the symbol is not interpreted.
  const int* table(std::string_view fn) const;
  /// -1 when unset or not interpreted.
  int constant(std::string_view c) const;
  bool predicate(const std::string& family, unsigned index) const;
  const std::vector<std::pair<PredKey, bool>>& predicates() const { return preds_; }

  static ModelView of(const FiniteInterpretation& m);

 private:
  friend class ModelViewBuilder;
  std::size_t size_ = 0;
  std::vector<std::pair<std::string, const int*>> fns_;
  std::vector<std::pair<std::string, const int*>> consts_;
  std::vector<std::pair<PredKey, bool>> preds_;
};

struct Orbit {
  std::size_t length = 0;  // distinct elements seen from the start point
  bool closed = false;     // false when the walk hit an unset entry
};
/// Orbit of the constant under fn in a possibly partial view.
Orbit orbit_of(const ModelView& v, std::string_view fn, std::string_view constant);

struct FixpointCount {
  std::size_t fixed = 0;
  std::size_t unset = 0;
};
FixpointCount count_fixpoints(const ModelView& v, std::string_view fn);

/// One axiom group of a theory, checked once every symbol it reads is fully
/// interpreted. `partial`, when present, may reject a partial state early and
/// must never reject a state that has an accepted completion.
struct MembershipComponent {
  std::string name;
  std::set<std::string> reads;
  std::function<bool(const ModelView&)> full;
  std::function<bool(const ModelView&)> partial;
};

struct MembershipCheck {
  std::string name;
  std::vector<MembershipComponent> components;

  bool accepts(const FiniteInterpretation& m) const;
  MembershipCheck combined_with(const MembershipCheck& other) const;
  /// Pure logic: every interpretation is accepted.
  static MembershipCheck everything();
};

inline constexpr std::size_t kDefaultModelCeiling = 7;

enum class SearchMode {
  Pruned,      // literal-driven, least-number heuristic symmetry breaking
  Exhaustive,  // canonical order: constants, tables, predicates, variables
};

struct SearchOptions {
  std::size_t max_size = kDefaultModelCeiling;
  SearchMode mode = SearchMode::Pruned;
  /// Only accept models in which every element is the value of a variable.
  bool named_domain = false;
};

std::optional<FiniteInterpretation> find_model(const Formula& phi, const Signature& sig, std::size_t k,
                                               const MembershipCheck& member, const SearchOptions& opts = {});
std::optional<FiniteInterpretation> find_model(const Cube& phi, const Signature& sig, std::size_t k,
                                               const MembershipCheck& member, const SearchOptions& opts = {});

std::set<std::size_t> brute_spectrum(const Formula& phi, const Signature& sig, const MembershipCheck& member,
                                     std::size_t max_k, const SearchOptions& opts = {});

/// Smallest equality-logic model of a cube of (dis)equalities between variables.
std::optional<std::size_t> min_eq_model_size(const Cube& phi);

/// `size k; a=e; t: [e0,...]; P3=true; x=e`
std::string format_model(const FiniteInterpretation& m);

}  // namespace tcomb
