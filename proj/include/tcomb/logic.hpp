#pragma once

// Syntax layer: signatures, terms, literals, cubes, quantifier-free
// formulas, arrangements and the named formula families.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tcomb {

/// A countable cardinal: a positive integer or aleph-zero.
class Card {
 public:
  constexpr Card() = default;
  constexpr explicit Card(std::uint64_t n) : n_(n) {}
  static constexpr Card aleph0() {
    Card c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Only meaningful for finite cardinals.
  std::uint64_t value() const { return n_; }

  friend bool operator==(const Card&, const Card&) = default;
  friend std::strong_ordering operator<=>(const Card& a, const Card& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.n_ <=> b.n_;
  }

  std::string str() const;

 private:
  std::uint64_t n_ = 1;
  bool infinite_ = false;
};

struct Signature {
  std::string name;
  std::set<std::string> functions;           // unary function symbols
  std::set<std::string> constants;
  std::set<std::string> predicate_families;  // each family is P_1, P_2, ...

  bool disjoint_from(const Signature& other) const;
  bool has_function(const std::string& s) const { return functions.count(s) > 0; }
  bool has_constant(const std::string& s) const { return constants.count(s) > 0; }
  bool has_family(const std::string& s) const { return predicate_families.count(s) > 0; }
  bool contains(const Signature& other) const;

  static Signature united(const Signature& a, const Signature& b);
};

namespace signatures {
Signature empty();       // Σ1: equality only
Signature successor();   // Σs: unary s
Signature predicates();  // Σ_P^n: P_1, P_2, ...
Signature orbit();       // Σ_t^a: unary t, constant a
}  // namespace signatures

/// A variable or constant with unary function symbols applied to it.
/// `apps` lists applied symbols innermost first, so t(s(x)) has apps {s, t}.
struct Term {
  enum class HeadKind : std::uint8_t { Variable, Constant };

  HeadKind kind = HeadKind::Variable;
  std::string head;
  std::vector<std::string> apps;

  static Term var(std::string name) { return Term{HeadKind::Variable, std::move(name), {}}; }
  static Term constant(std::string name) { return Term{HeadKind::Constant, std::move(name), {}}; }
  /// fn^n(base)
  static Term iterate(const std::string& fn, unsigned n, Term base);

  Term applied(const std::string& fn) const;
  bool is_variable() const { return kind == HeadKind::Variable && apps.empty(); }
  bool head_is_variable() const { return kind == HeadKind::Variable; }
  std::size_t depth() const { return apps.size(); }
  /// The subterm with only the first `n` applications.
  Term prefix(std::size_t n) const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Literal {
  struct Equality {
    Term lhs;
    Term rhs;
    friend auto operator<=>(const Equality&, const Equality&) = default;
    friend bool operator==(const Equality&, const Equality&) = default;
  };
  /// Nullary indexed predicate such as P_3.
  struct Predicate {
    std::string family;
    unsigned index = 1;
    friend auto operator<=>(const Predicate&, const Predicate&) = default;
    friend bool operator==(const Predicate&, const Predicate&) = default;
  };

  bool positive = true;
  std::variant<Equality, Predicate> atom;

  static Literal eq(Term lhs, Term rhs) { return Literal{true, Equality{std::move(lhs), std::move(rhs)}}; }
  static Literal neq(Term lhs, Term rhs) { return Literal{false, Equality{std::move(lhs), std::move(rhs)}}; }
  static Literal pred(std::string family, unsigned index, bool positive = true) {
    return Literal{positive, Predicate{std::move(family), index}};
  }

  bool is_equality() const { return std::holds_alternative<Equality>(atom); }
  bool is_predicate() const { return std::holds_alternative<Predicate>(atom); }
  const Equality& equality() const { return std::get<Equality>(atom); }
  const Predicate& predicate() const { return std::get<Predicate>(atom); }
  Literal negated() const { return Literal{!positive, atom}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Conjunction of literals; the empty cube is true.
struct Cube {
  std::vector<Literal> literals;

  Cube() = default;
  Cube(std::initializer_list<Literal> lits) : literals(lits) {}
  explicit Cube(std::vector<Literal> lits) : literals(std::move(lits)) {}

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
  void add(Literal l) { literals.push_back(std::move(l)); }
  Cube conjoined(const Cube& other) const;

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Quantifier-free formula: boolean tree over literals.
class Formula {
 public:
  enum class Kind : std::uint8_t { Literal, And, Or, Not };

  static Formula lit(Literal l);
  static Formula conj(std::vector<Formula> kids);
  static Formula disj(std::vector<Formula> kids);
  static Formula negate(Formula f);
  static Formula from_cube(const Cube& c);
  static Formula truth() { return conj({}); }

  Kind kind() const { return kind_; }
  const Literal& literal() const { return *lit_; }
  const std::vector<Formula>& children() const { return kids_; }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::And;
  std::optional<Literal> lit_;
  std::vector<Formula> kids_;
};

/// Disjunctive normal form; an unsatisfiable-by-shape formula yields no cubes.
std::vector<Cube> to_dnf(const Formula& f);

/// Variables in order of first occurrence.
std::vector<std::string> variables(const Cube& c);
std::vector<std::string> variables(const Formula& f);
/// Every term and subterm occurring in the cube, deduplicated.
std::vector<Term> subterms(const Cube& c);

/// Checks that every symbol of the cube belongs to the signature; throws
/// UnknownSymbolError otherwise.
void check_symbols(const Cube& c, const Signature& sig);
void check_symbols(const Formula& f, const Signature& sig);

/// A set partition of a finite ordered variable set, stored as a
/// restricted growth string.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::vector<std::string> vars, std::vector<unsigned> blocks);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<unsigned>& block_of() const { return block_; }
  std::size_t block_count() const;
  std::vector<std::vector<std::string>> blocks() const;
  bool same_block(std::size_t i, std::size_t j) const { return block_[i] == block_[j]; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<unsigned> block_;
};

inline constexpr std::size_t kDefaultArrangementLimit = 8;

/// Calls `visit` with each restricted growth string of length n (block
/// count at most `max_blocks`), in lexicographic order. Stops early when
/// `visit` returns false. Returns false iff stopped early.
bool for_each_partition(std::size_t n, const std::function<bool(const std::vector<unsigned>&)>& visit,
                        std::size_t max_blocks = SIZE_MAX);

std::vector<Arrangement> enumerate_arrangements(const std::vector<std::string>& vars,
                                                std::size_t limit = kDefaultArrangementLimit);
Cube arrangement_to_cube(const Arrangement& arr);

/// Domain-size constraint such as ψ≥n, ψ≤n, ψ=n. Kept semantic rather than
/// as a quantified formula.
struct CardinalitySpec {
  enum class Kind : std::uint8_t { AtLeast, AtMost, Exactly };
  Kind kind = Kind::AtLeast;
  Card bound;

  CardinalitySpec(Kind k, Card b);
  bool satisfied_by(Card size) const;
};

/// Generates names that cannot clash with parsed identifiers (the parser
/// rejects a leading underscore) or with names listed in `avoid`.
class FreshNames {
 public:
  explicit FreshNames(std::string prefix, std::set<std::string> avoid = {})
      : prefix_("_" + std::move(prefix)), avoid_(std::move(avoid)) {}
  std::string next();

 private:
  std::string prefix_;
  std::set<std::string> avoid_;
  unsigned counter_ = 0;
};

// Named formula families.

/// Pairwise disequalities between the given variables.
Cube build_distinct(const std::vector<std::string>& vars);
/// n pairwise-distinct variables, each a fixpoint of `fn`. Variables are
/// named prefix1..prefixN.
Cube build_fixpoint_count(unsigned n, const std::string& fn, const std::string& prefix = "x");

enum class OrbitKind : std::uint8_t { Dif, Orb };
/// dif_n(base) or orb_n(base) over the unary symbol `fn`.
Formula build_orbit_formula(OrbitKind kind, unsigned n, const Term& base, const std::string& fn = "t");

/// Replaces the variable `var` (and every term headed by it) using `by`.
Term substitute(const Term& t, const std::string& var, const Term& by);
Cube substitute(const Cube& c, const std::string& var, const Term& by);
/// Repeatedly solves positive equalities of the form x = u, where u is not
/// headed by x, by substituting u for x. The result has the same models up
/// to the values of the eliminated variables.
Cube eliminate_defined_variables(const Cube& c);

struct Purified {
  Cube first;
  Cube second;
  std::set<std::string> shared;
};

/// Splits a cube over sig1 ∪ sig2 into two pure cubes plus the variables
/// they share. Pure equalities between variables go to the first cube.
Purified purify(const Cube& mixed, const Signature& sig1, const Signature& sig2);

// Text form.

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Cube& c);
std::string to_string(const Formula& f);
std::string to_string(const Arrangement& a);

Formula parse_formula(std::string_view text, const Signature& sig);
/// Accepts a single literal or an `and` of literals.
Cube parse_cube(std::string_view text, const Signature& sig);

}  // namespace tcomb
