#include "tcomb/logic.hpp"

#include <algorithm>
#include <map>

#include "tcomb/errors.hpp"

namespace tcomb {

std::string Card::str() const { return infinite_ ? "ℵ0" : std::to_string(n_); }

// ---------------------------------------------------------------------------
// Signatures

bool Signature::disjoint_from(const Signature& other) const {
  auto meets = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::any_of(a.begin(), a.end(), [&](const std::string& s) { return b.count(s) > 0; });
  };
  std::set<std::string> mine = functions, theirs = other.functions;
  mine.insert(constants.begin(), constants.end());
  mine.insert(predicate_families.begin(), predicate_families.end());
  theirs.insert(other.constants.begin(), other.constants.end());
  theirs.insert(other.predicate_families.begin(), other.predicate_families.end());
  return !meets(mine, theirs);
}

bool Signature::contains(const Signature& other) const {
  auto sub = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  return sub(other.functions, functions) && sub(other.constants, constants) &&
         sub(other.predicate_families, predicate_families);
}

Signature Signature::united(const Signature& a, const Signature& b) {
  Signature s = a;
  s.name = a.name + "+" + b.name;
  s.functions.insert(b.functions.begin(), b.functions.end());
  s.constants.insert(b.constants.begin(), b.constants.end());
  s.predicate_families.insert(b.predicate_families.begin(), b.predicate_families.end());
  return s;
}

namespace signatures {
Signature empty() { return Signature{"sigma1", {}, {}, {}}; }
Signature successor() { return Signature{"sigma_s", {"s"}, {}, {}}; }
Signature predicates() { return Signature{"sigma_p", {}, {}, {"P"}}; }
Signature orbit() { return Signature{"sigma_ta", {"t"}, {"a"}, {}}; }
}  // namespace signatures

// ---------------------------------------------------------------------------
// Terms, cubes, formulas

Term Term::iterate(const std::string& fn, unsigned n, Term base) {
  for (unsigned i = 0; i < n; ++i) base.apps.push_back(fn);
  return base;
}

Term Term::applied(const std::string& fn) const {
  Term t = *this;
  t.apps.push_back(fn);
  return t;
}

Term Term::prefix(std::size_t n) const {
  Term t{kind, head, {}};
  t.apps.assign(apps.begin(), apps.begin() + static_cast<std::ptrdiff_t>(std::min(n, apps.size())));
  return t;
}

Cube Cube::conjoined(const Cube& other) const {
  Cube c = *this;
  c.literals.insert(c.literals.end(), other.literals.begin(), other.literals.end());
  return c;
}

Formula Formula::lit(Literal l) {
  Formula f;
  f.kind_ = Kind::Literal;
  f.lit_ = std::move(l);
  return f;
}

Formula Formula::conj(std::vector<Formula> kids) {
  Formula f;
  f.kind_ = Kind::And;
  f.kids_ = std::move(kids);
  return f;
}

Formula Formula::disj(std::vector<Formula> kids) {
  Formula f;
  f.kind_ = Kind::Or;
  f.kids_ = std::move(kids);
  return f;
}

Formula Formula::negate(Formula g) {
  Formula f;
  f.kind_ = Kind::Not;
  f.kids_.push_back(std::move(g));
  return f;
}

Formula Formula::from_cube(const Cube& c) {
  if (c.size() == 1) return lit(c.literals.front());
  std::vector<Formula> kids;
  kids.reserve(c.size());
  for (const auto& l : c.literals) kids.push_back(lit(l));
  return conj(std::move(kids));
}

namespace {

std::vector<Cube> dnf(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::Literal:
      return {Cube{negated ? f.literal().negated() : f.literal()}};
    case Formula::Kind::Not:
      return dnf(f.children().front(), !negated);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool conjunctive = (f.kind() == Formula::Kind::And) != negated;
      if (!conjunctive) {
        std::vector<Cube> out;
        for (const auto& k : f.children()) {
          auto part = dnf(k, negated);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
      std::vector<Cube> acc{Cube{}};
      for (const auto& k : f.children()) {
        auto part = dnf(k, negated);
        std::vector<Cube> next;
        next.reserve(acc.size() * part.size());
        for (const auto& a : acc)
          for (const auto& b : part) next.push_back(a.conjoined(b));
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
  }
  return {};
}

void collect_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (t.head_is_variable() && seen.insert(t.head).second) out.push_back(t.head);
}

void collect_vars(const Literal& l, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (!l.is_equality()) return;
  collect_vars(l.equality().lhs, out, seen);
  collect_vars(l.equality().rhs, out, seen);
}

void collect_vars(const Formula& f, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (f.kind() == Formula::Kind::Literal) {
    collect_vars(f.literal(), out, seen);
    return;
  }
  for (const auto& k : f.children()) collect_vars(k, out, seen);
}

void check_term(const Term& t, const Signature& sig) {
  if (t.kind == Term::HeadKind::Constant && !sig.has_constant(t.head)) throw UnknownSymbolError(t.head);
  for (const auto& fn : t.apps)
    if (!sig.has_function(fn)) throw UnknownSymbolError(fn);
}

void check_literal(const Literal& l, const Signature& sig) {
  if (l.is_equality()) {
    check_term(l.equality().lhs, sig);
    check_term(l.equality().rhs, sig);
  } else {
    if (!sig.has_family(l.predicate().family)) throw UnknownSymbolError(l.predicate().family);
  }
}

}  // namespace

std::vector<Cube> to_dnf(const Formula& f) { return dnf(f, false); }

std::vector<std::string> variables(const Cube& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& l : c.literals) collect_vars(l, out, seen);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_vars(f, out, seen);
  return out;
}

std::vector<Term> subterms(const Cube& c) {
  std::vector<Term> out;
  std::set<Term> seen;
  auto add = [&](const Term& t) {
    for (std::size_t n = 0; n <= t.depth(); ++n) {
      Term p = t.prefix(n);
      if (seen.insert(p).second) out.push_back(std::move(p));
    }
  };
  for (const auto& l : c.literals) {
    if (!l.is_equality()) continue;
    add(l.equality().lhs);
    add(l.equality().rhs);
  }
  return out;
}

void check_symbols(const Cube& c, const Signature& sig) {
  for (const auto& l : c.literals) check_literal(l, sig);
}

void check_symbols(const Formula& f, const Signature& sig) {
  if (f.kind() == Formula::Kind::Literal) {
    check_literal(f.literal(), sig);
    return;
  }
  for (const auto& k : f.children()) check_symbols(k, sig);
}

// ---------------------------------------------------------------------------
// Arrangements

Arrangement::Arrangement(std::vector<std::string> vars, std::vector<unsigned> blocks)
    : vars_(std::move(vars)), block_(std::move(blocks)) {
  if (vars_.size() != block_.size()) throw Error("arrangement: block vector length mismatch");
  unsigned next = 0;
  for (unsigned b : block_) {
    if (b > next) throw Error("arrangement: block ids must form a restricted growth string");
    if (b == next) ++next;
  }
}

std::size_t Arrangement::block_count() const {
  unsigned m = 0;
  for (unsigned b : block_) m = std::max(m, b + 1);
  return m;
}

std::vector<std::vector<std::string>> Arrangement::blocks() const {
  std::vector<std::vector<std::string>> out(block_count());
  for (std::size_t i = 0; i < vars_.size(); ++i) out[block_[i]].push_back(vars_[i]);
  return out;
}

namespace {
bool partitions_from(std::size_t i, unsigned used, std::vector<unsigned>& rgs, std::size_t max_blocks,
                     const std::function<bool(const std::vector<unsigned>&)>& visit) {
  if (i == rgs.size()) return visit(rgs);
  for (unsigned b = 0; b <= used; ++b) {
    if (b == used && used >= max_blocks) break;
    rgs[i] = b;
    if (!partitions_from(i + 1, b == used ? used + 1 : used, rgs, max_blocks, visit)) return false;
  }
  return true;
}
}  // namespace

bool for_each_partition(std::size_t n, const std::function<bool(const std::vector<unsigned>&)>& visit,
                        std::size_t max_blocks) {
  std::vector<unsigned> rgs(n, 0);
  return partitions_from(0, 0, rgs, max_blocks, visit);
}

std::vector<Arrangement> enumerate_arrangements(const std::vector<std::string>& vars, std::size_t limit) {
  if (vars.size() > limit)
    throw LimitError("arrangement enumeration over " + std::to_string(vars.size()) +
                     " variables exceeds the limit of " + std::to_string(limit));
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw Error("arrangement: duplicate variable");
  std::vector<Arrangement> out;
  for_each_partition(vars.size(), [&](const std::vector<unsigned>& rgs) {
    out.emplace_back(vars, rgs);
    return true;
  });
  return out;
}

Cube arrangement_to_cube(const Arrangement& arr) {
  Cube c;
  const auto& v = arr.vars();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      c.add(arr.same_block(i, j) ? Literal::eq(Term::var(v[i]), Term::var(v[j]))
                                 : Literal::neq(Term::var(v[i]), Term::var(v[j])));
  return c;
}

CardinalitySpec::CardinalitySpec(Kind k, Card b) : kind(k), bound(b) {
  if (b.is_finite() && b.value() < 1) throw Error("cardinality bound must be at least 1");
}

bool CardinalitySpec::satisfied_by(Card size) const {
  switch (kind) {
    case Kind::AtLeast: return size >= bound;
    case Kind::AtMost: return size <= bound;
    case Kind::Exactly: return size == bound;
  }
  return false;
}

std::string FreshNames::next() {
  for (;;) {
    std::string name = prefix_ + std::to_string(++counter_);
    if (!avoid_.count(name)) return name;
  }
}

// ---------------------------------------------------------------------------
// Formula families

Cube build_distinct(const std::vector<std::string>& vars) {
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw Error("build_distinct: duplicate variable name");
  Cube c;
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) c.add(Literal::neq(Term::var(vars[i]), Term::var(vars[j])));
  return c;
}

Cube build_fixpoint_count(unsigned n, const std::string& fn, const std::string& prefix) {
  if (n == 0) throw Error("build_fixpoint_count: n must be positive");
  std::vector<std::string> vars;
  for (unsigned i = 1; i <= n; ++i) vars.push_back(prefix + std::to_string(i));
  Cube c = build_distinct(vars);
  for (const auto& v : vars) c.add(Literal::eq(Term::var(v).applied(fn), Term::var(v)));
  return c;
}

Formula build_orbit_formula(OrbitKind kind, unsigned n, const Term& base, const std::string& fn) {
  if (n == 0) throw Error("orbit formula: n must be positive");
  auto dif = [&](unsigned m) {
    std::vector<Formula> kids;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i + 1; j < m; ++j)
        kids.push_back(Formula::lit(Literal::neq(Term::iterate(fn, i, base), Term::iterate(fn, j, base))));
    return kids.size() == 1 ? kids.front() : Formula::conj(std::move(kids));
  };
  if (kind == OrbitKind::Dif) {
    if (n < 2) throw Error("dif_n requires n >= 2");
    return dif(n);
  }
  if (n == 1) return Formula::lit(Literal::eq(base.applied(fn), base));
  return Formula::conj({dif(n), Formula::negate(dif(n + 1))});
}

// ---------------------------------------------------------------------------
// Purification

namespace {

enum class Side { None, First, Second };

class Purifier {
 public:
  Purifier(const Signature& s1, const Signature& s2, std::set<std::string> taken)
      : s1_(s1), s2_(s2), fresh_("v", std::move(taken)) {}

  Purified run(const Cube& mixed) {
    for (const auto& l : mixed.literals) {
      if (l.is_predicate()) {
        Side s = owner_of_family(l.predicate().family);
        (s == Side::Second ? out_.second : out_.first).add(l);
        continue;
      }
      auto [lt, ls] = abstract(l.equality().lhs);
      auto [rt, rs] = abstract(l.equality().rhs);
      Side target = ls != Side::None ? ls : rs;
      if (ls != Side::None && rs != Side::None && ls != rs) {
        rt = name_of(rt, rs);
        target = ls;
      }
      Literal out{l.positive, Literal::Equality{lt, rt}};
      (target == Side::Second ? out_.second : out_.first).add(out);
    }
    auto v1 = variables(out_.first);
    auto v2 = variables(out_.second);
    std::set<std::string> s2(v2.begin(), v2.end());
    for (const auto& v : v1)
      if (s2.count(v)) out_.shared.insert(v);
    return std::move(out_);
  }

 private:
  Side owner_of_function(const std::string& fn) const {
    if (s1_.has_function(fn)) return Side::First;
    if (s2_.has_function(fn)) return Side::Second;
    throw UnknownSymbolError(fn);
  }
  Side owner_of_constant(const std::string& c) const {
    if (s1_.has_constant(c)) return Side::First;
    if (s2_.has_constant(c)) return Side::Second;
    throw UnknownSymbolError(c);
  }
  Side owner_of_family(const std::string& p) const {
    if (s1_.has_family(p)) return Side::First;
    if (s2_.has_family(p)) return Side::Second;
    throw UnknownSymbolError(p);
  }

  // Replaces a pure non-variable term by a fresh variable, defined on its own side.
  Term name_of(const Term& t, Side side) {
    auto it = names_.find(t);
    if (it != names_.end()) return Term::var(it->second);
    std::string v = fresh_.next();
    names_.emplace(t, v);
    (side == Side::Second ? out_.second : out_.first).add(Literal::eq(Term::var(v), t));
    return Term::var(v);
  }

  std::pair<Term, Side> abstract(const Term& t) {
    Term cur{t.kind, t.head, {}};
    Side side = t.kind == Term::HeadKind::Constant ? owner_of_constant(t.head) : Side::None;
    for (const auto& fn : t.apps) {
      Side s = owner_of_function(fn);
      if (side != Side::None && side != s) cur = name_of(cur, side);
      cur = cur.applied(fn);
      side = s;
    }
    return {cur, side};
  }

  const Signature& s1_;
  const Signature& s2_;
  FreshNames fresh_;
  std::map<Term, std::string> names_;
  Purified out_;
};

}  // namespace

Term substitute(const Term& t, const std::string& var, const Term& by) {
  if (t.kind != Term::HeadKind::Variable || t.head != var) return t;
  Term out = by;
  out.apps.insert(out.apps.end(), t.apps.begin(), t.apps.end());
  return out;
}

Cube substitute(const Cube& c, const std::string& var, const Term& by) {
  Cube out;
  for (const auto& l : c.literals) {
    if (!l.is_equality()) {
      out.add(l);
      continue;
    }
    Literal m = l;
    auto& eq = std::get<Literal::Equality>(m.atom);
    eq.lhs = substitute(eq.lhs, var, by);
    eq.rhs = substitute(eq.rhs, var, by);
    out.add(std::move(m));
  }
  return out;
}

Cube eliminate_defined_variables(const Cube& c) {
  Cube cur = c;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < cur.literals.size(); ++i) {
      const Literal& l = cur.literals[i];
      if (!l.positive || !l.is_equality()) continue;
      const auto& [lhs, rhs] = l.equality();
      const Term* x = lhs.is_variable() ? &lhs : rhs.is_variable() ? &rhs : nullptr;
      if (!x) continue;
      const Term& u = x == &lhs ? rhs : lhs;
      if (u.kind == Term::HeadKind::Variable && u.head == x->head) continue;
      std::string var = x->head;
      Term by = u;
      cur.literals.erase(cur.literals.begin() + static_cast<std::ptrdiff_t>(i));
      cur = substitute(cur, var, by);
      again = true;
      break;
    }
  }
  return cur;
}

Purified purify(const Cube& mixed, const Signature& sig1, const Signature& sig2) {
  if (!sig1.disjoint_from(sig2)) throw Error("purify: signatures are not disjoint");
  auto vars = variables(mixed);
  return Purifier(sig1, sig2, std::set<std::string>(vars.begin(), vars.end())).run(mixed);
}

}  // namespace tcomb
