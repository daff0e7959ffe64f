#include "tcomb/models.hpp"

#include <algorithm>

#include "tcomb/errors.hpp"

namespace tcomb {

bool FiniteInterpretation::predicate(const std::string& family, unsigned index) const {
  auto it = predicates.find(PredKey{family, index});
  return it != predicates.end() && it->second;
}

void FiniteInterpretation::validate() const {
  if (size < 1) throw Error("interpretation: domain size must be positive");
  auto in_range = [&](int e) { return e >= 0 && static_cast<std::size_t>(e) < size; };
  for (const auto& [fn, table] : functions) {
    if (table.size() != size) throw Error("interpretation: table for '" + fn + "' has wrong length");
    for (int e : table)
      if (!in_range(e)) throw Error("interpretation: table for '" + fn + "' leaves the domain");
  }
  for (const auto& [c, e] : constants)
    if (!in_range(e)) throw Error("interpretation: constant '" + c + "' outside the domain");
  for (const auto& [x, e] : variables)
    if (!in_range(e)) throw Error("interpretation: variable '" + x + "' outside the domain");
}

int eval(const FiniteInterpretation& m, const Term& t) {
  int v;
  if (t.kind == Term::HeadKind::Constant) {
    auto it = m.constants.find(t.head);
    if (it == m.constants.end()) throw UnknownSymbolError(t.head);
    v = it->second;
  } else {
    auto it = m.variables.find(t.head);
    if (it == m.variables.end()) throw Error("unassigned variable '" + t.head + "'");
    v = it->second;
  }
  for (const auto& fn : t.apps) {
    auto it = m.functions.find(fn);
    if (it == m.functions.end()) throw UnknownSymbolError(fn);
    v = it->second.at(static_cast<std::size_t>(v));
  }
  return v;
}

bool eval(const FiniteInterpretation& m, const Literal& l) {
  bool atom = l.is_equality() ? eval(m, l.equality().lhs) == eval(m, l.equality().rhs)
                              : m.predicate(l.predicate().family, l.predicate().index);
  return atom == l.positive;
}

bool eval(const FiniteInterpretation& m, const Cube& c) {
  return std::all_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) { return eval(m, l); });
}

bool eval(const FiniteInterpretation& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Literal: return eval(m, f.literal());
    case Formula::Kind::Not: return !eval(m, f.children().front());
    case Formula::Kind::And:
      return std::all_of(f.children().begin(), f.children().end(), [&](const Formula& k) { return eval(m, k); });
    case Formula::Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(), [&](const Formula& k) { return eval(m, k); });
  }
  return false;
}

// ---------------------------------------------------------------------------
// Views

class ModelViewBuilder {
 public:
  static void set_size(ModelView& v, std::size_t k) { v.size_ = k; }
  static void add_fn(ModelView& v, std::string name, const int* p) { v.fns_.emplace_back(std::move(name), p); }
  static void add_const(ModelView& v, std::string name, const int* p) { v.consts_.emplace_back(std::move(name), p); }
  static void set_preds(ModelView& v, std::vector<std::pair<PredKey, bool>> p) { v.preds_ = std::move(p); }
};

const int* ModelView::table(std::string_view fn) const {
  for (const auto& [name, p] : fns_)
    if (name == fn) return p;
  return nullptr;
}

int ModelView::constant(std::string_view c) const {
  for (const auto& [name, p] : consts_)
    if (name == c) return *p;
  return -1;
}

bool ModelView::predicate(const std::string& family, unsigned index) const {
  for (const auto& [key, value] : preds_)
    if (key.index == index && key.family == family) return value;
  return false;
}

ModelView ModelView::of(const FiniteInterpretation& m) {
  ModelView v;
  ModelViewBuilder::set_size(v, m.size);
  for (const auto& [fn, table] : m.functions) ModelViewBuilder::add_fn(v, fn, table.data());
  for (const auto& [c, e] : m.constants) ModelViewBuilder::add_const(v, c, &e);
  ModelViewBuilder::set_preds(v, {m.predicates.begin(), m.predicates.end()});
  return v;
}

Orbit orbit_of(const ModelView& v, std::string_view fn, std::string_view constant) {
  Orbit o;
  const int* t = v.table(fn);
  int e = v.constant(constant);
  if (!t || e < 0) return o;
  std::vector<char> seen(v.size(), 0);
  while (e >= 0 && !seen[static_cast<std::size_t>(e)]) {
    seen[static_cast<std::size_t>(e)] = 1;
    ++o.length;
    e = t[e];
  }
  o.closed = e >= 0;
  return o;
}

FixpointCount count_fixpoints(const ModelView& v, std::string_view fn) {
  FixpointCount c;
  const int* s = v.table(fn);
  if (!s) return c;
  for (std::size_t e = 0; e < v.size(); ++e) {
    if (s[e] < 0)
      ++c.unset;
    else if (static_cast<std::size_t>(s[e]) == e)
      ++c.fixed;
  }
  return c;
}

bool MembershipCheck::accepts(const FiniteInterpretation& m) const {
  ModelView v = ModelView::of(m);
  return std::all_of(components.begin(), components.end(),
                     [&](const MembershipComponent& c) { return c.full(v); });
}

MembershipCheck MembershipCheck::combined_with(const MembershipCheck& other) const {
  MembershipCheck m{name + "+" + other.name, components};
  m.components.insert(m.components.end(), other.components.begin(), other.components.end());
  return m;
}

MembershipCheck MembershipCheck::everything() { return MembershipCheck{"logic", {}}; }

// ---------------------------------------------------------------------------
// Pruned search

namespace {

struct CompiledTerm {
  int head_slot;
  std::vector<int> fns;  // symbol ids
};

struct CompiledLiteral {
  bool positive;
  CompiledTerm lhs, rhs;
};

struct TermState {
  int value = -1;
  int missing = -1;
  bool last_step = false;
};

class CubeSearch {
 public:
  CubeSearch(const Cube& cube, const Signature& sig, std::size_t k, const MembershipCheck& member,
             const SearchOptions& opts)
      : k_(static_cast<int>(k)), member_(member), opts_(opts) {
    vars_ = variables(cube);
    consts_.assign(sig.constants.begin(), sig.constants.end());
    fns_.assign(sig.functions.begin(), sig.functions.end());
    const int nv = static_cast<int>(vars_.size()), nc = static_cast<int>(consts_.size());
    const_base_ = nv;
    fn_base_ = nv + nc;
    vals_.assign(static_cast<std::size_t>(fn_base_ + static_cast<int>(fns_.size()) * k_), -1);
    unset_.assign(consts_.size() + fns_.size(), 0);
    for (std::size_t c = 0; c < consts_.size(); ++c) unset_[c] = 1;
    for (std::size_t f = 0; f < fns_.size(); ++f) unset_[consts_.size() + f] = k_;

    for (const auto& l : cube.literals) {
      if (l.is_predicate()) {
        PredKey key{l.predicate().family, l.predicate().index};
        auto [it, fresh] = pred_values_.emplace(key, l.positive);
        if (!fresh && it->second != l.positive) contradictory_ = true;
        continue;
      }
      lits_.push_back({l.positive, compile(l.equality().lhs), compile(l.equality().rhs)});
    }

    ModelViewBuilder::set_size(view_, k);
    for (std::size_t f = 0; f < fns_.size(); ++f)
      ModelViewBuilder::add_fn(view_, fns_[f], vals_.data() + fn_base_ + static_cast<int>(f) * k_);
    for (std::size_t c = 0; c < consts_.size(); ++c)
      ModelViewBuilder::add_const(view_, consts_[c], vals_.data() + const_base_ + static_cast<int>(c));
    ModelViewBuilder::set_preds(view_, {pred_values_.begin(), pred_values_.end()});

    for (const auto& comp : member_.components) {
      std::vector<int> ids;
      for (const auto& sym : comp.reads) {
        int id = symbol_id(sym);
        if (id < 0) throw Error("membership component '" + comp.name + "' reads uninterpreted symbol '" + sym + "'");
        ids.push_back(id);
      }
      reads_.push_back(std::move(ids));
    }
  }

  std::optional<FiniteInterpretation> run() {
    if (contradictory_) return std::nullopt;
    for (std::size_t i = 0; i < member_.components.size(); ++i)
      if (reads_[i].empty() && !member_.components[i].full(view_)) return std::nullopt;
    if (!search()) return std::nullopt;
    return extract();
  }

 private:
  int symbol_id(const std::string& sym) const {
    for (std::size_t c = 0; c < consts_.size(); ++c)
      if (consts_[c] == sym) return static_cast<int>(c);
    for (std::size_t f = 0; f < fns_.size(); ++f)
      if (fns_[f] == sym) return static_cast<int>(consts_.size() + f);
    return -1;
  }

  CompiledTerm compile(const Term& t) {
    CompiledTerm ct;
    if (t.kind == Term::HeadKind::Constant) {
      int id = symbol_id(t.head);
      if (id < 0) throw UnknownSymbolError(t.head);
      ct.head_slot = const_base_ + id;
    } else {
      auto it = std::find(vars_.begin(), vars_.end(), t.head);
      ct.head_slot = static_cast<int>(it - vars_.begin());
    }
    for (const auto& fn : t.apps) {
      int id = symbol_id(fn);
      if (id < static_cast<int>(consts_.size())) throw UnknownSymbolError(fn);
      ct.fns.push_back(id - static_cast<int>(consts_.size()));
    }
    return ct;
  }

  int symbol_of_slot(int slot) const {
    if (slot < const_base_) return -1;
    if (slot < fn_base_) return slot - const_base_;
    return static_cast<int>(consts_.size()) + (slot - fn_base_) / k_;
  }

  TermState evaluate(const CompiledTerm& t) const {
    TermState st;
    int v = vals_[static_cast<std::size_t>(t.head_slot)];
    if (v < 0) {
      st.missing = t.head_slot;
      st.last_step = t.fns.empty();
      return st;
    }
    for (std::size_t i = 0; i < t.fns.size(); ++i) {
      int slot = fn_base_ + t.fns[i] * k_ + v;
      int next = vals_[static_cast<std::size_t>(slot)];
      if (next < 0) {
        st.missing = slot;
        st.last_step = i + 1 == t.fns.size();
        return st;
      }
      v = next;
    }
    st.value = v;
    return st;
  }

  // Returns false when a membership component rejects the new state.
  bool assign(int slot, int value) {
    trail_.push_back({slot, used_});
    vals_[static_cast<std::size_t>(slot)] = value;
    if (value == used_) ++used_;
    int sym = symbol_of_slot(slot);
    if (sym < 0 || --unset_[static_cast<std::size_t>(sym)] != 0) return true;
    for (std::size_t i = 0; i < reads_.size(); ++i) {
      const auto& ids = reads_[i];
      if (std::find(ids.begin(), ids.end(), sym) == ids.end()) continue;
      bool ready = std::all_of(ids.begin(), ids.end(), [&](int id) { return unset_[static_cast<std::size_t>(id)] == 0; });
      if (ready && !member_.components[i].full(view_)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [slot, used] = trail_.back();
      trail_.pop_back();
      used_ = used;
      if (slot < 0) continue;
      int sym = symbol_of_slot(slot);
      if (sym >= 0) ++unset_[static_cast<std::size_t>(sym)];
      vals_[static_cast<std::size_t>(slot)] = -1;
    }
  }

  // Unit propagation over positive equalities; false on conflict.
  bool propagate(int& branch_slot) {
    branch_slot = -1;
    for (;;) {
      bool changed = false;
      int first_missing = -1;
      for (const auto& lit : lits_) {
        TermState l = evaluate(lit.lhs);
        TermState r = evaluate(lit.rhs);
        if (l.value >= 0 && r.value >= 0) {
          if ((l.value == r.value) != lit.positive) return false;
          continue;
        }
        if (lit.positive && l.value >= 0 && r.last_step) {
          if (!assign(r.missing, l.value)) return false;
          changed = true;
          continue;
        }
        if (lit.positive && r.value >= 0 && l.last_step) {
          if (!assign(l.missing, r.value)) return false;
          changed = true;
          continue;
        }
        if (first_missing < 0) first_missing = l.value < 0 ? l.missing : r.missing;
      }
      if (!changed) {
        branch_slot = first_missing;
        return true;
      }
    }
  }

  bool partial_ok() const {
    for (const auto& comp : member_.components)
      if (comp.partial && !comp.partial(view_)) return false;
    return true;
  }

  // Distinct values among assigned variables, and how many are unassigned.
  std::pair<int, int> named_counts() const {
    std::vector<char> hit(static_cast<std::size_t>(k_), 0);
    int n = 0, open = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      int v = vals_[i];
      if (v < 0) {
        ++open;
      } else if (!hit[static_cast<std::size_t>(v)]) {
        hit[static_cast<std::size_t>(v)] = 1;
        ++n;
      }
    }
    return {n, open};
  }
  bool named_possible() const {
    auto [n, open] = named_counts();
    return n + open >= k_;
  }
  bool named_ok() const { return named_counts().first == k_; }

  bool branch(int slot) {
    int top = std::min(used_, k_ - 1);
    for (int v = 0; v <= top; ++v) {
      std::size_t mark = trail_.size();
      if (assign(slot, v) && search()) return true;
      undo(mark);
    }
    return false;
  }

  bool search() {
    std::size_t mark = trail_.size();
    int slot = -1;
    if (!propagate(slot) || !partial_ok() || (opts_.named_domain && !named_possible())) {
      undo(mark);
      return false;
    }
    if (slot >= 0) {
      if (branch(slot)) return true;
      undo(mark);
      return false;
    }
    // Every literal holds; complete the remaining symbols.
    if (opts_.named_domain && !named_ok()) {
      undo(mark);
      return false;
    }
    for (std::size_t s = static_cast<std::size_t>(const_base_); s < vals_.size(); ++s) {
      if (vals_[s] >= 0) continue;
      int slot_i = static_cast<int>(s);
      if (slot_i >= fn_base_) {
        int e = (slot_i - fn_base_) % k_;
        if (e == used_) {
          trail_.push_back({-1, used_});
          ++used_;
        }
      }
      if (branch(slot_i)) return true;
      undo(mark);
      return false;
    }
    return true;
  }

  FiniteInterpretation extract() const {
    FiniteInterpretation m;
    m.size = static_cast<std::size_t>(k_);
    for (std::size_t f = 0; f < fns_.size(); ++f) {
      auto begin = vals_.begin() + fn_base_ + static_cast<int>(f) * k_;
      m.functions[fns_[f]] = std::vector<int>(begin, begin + k_);
    }
    for (std::size_t c = 0; c < consts_.size(); ++c)
      m.constants[consts_[c]] = vals_[static_cast<std::size_t>(const_base_) + c];
    for (const auto& [key, value] : pred_values_) m.predicates[key] = value;
    for (std::size_t i = 0; i < vars_.size(); ++i) m.variables[vars_[i]] = vals_[i];
    return m;
  }

  int k_;
  const MembershipCheck& member_;
  SearchOptions opts_;
  std::vector<std::string> vars_, consts_, fns_;
  int const_base_ = 0, fn_base_ = 0;
  std::vector<int> vals_;
  std::vector<int> unset_;
  std::map<PredKey, bool> pred_values_;
  bool contradictory_ = false;
  std::vector<CompiledLiteral> lits_;
  std::vector<std::vector<int>> reads_;
  ModelView view_;
  int used_ = 0;
  std::vector<std::pair<int, int>> trail_;  // (slot or -1, previous used count)
};

// ---------------------------------------------------------------------------
// Exhaustive canonical enumeration

void collect_preds(const Formula& f, std::set<PredKey>& out) {
  if (f.kind() == Formula::Kind::Literal) {
    if (f.literal().is_predicate()) out.insert({f.literal().predicate().family, f.literal().predicate().index});
    return;
  }
  for (const auto& k : f.children()) collect_preds(k, out);
}

std::optional<FiniteInterpretation> exhaustive(const Formula& phi, const Signature& sig, std::size_t k,
                                               const MembershipCheck& member, bool named) {
  std::vector<std::string> consts(sig.constants.begin(), sig.constants.end());
  std::vector<std::string> fns(sig.functions.begin(), sig.functions.end());
  std::set<PredKey> pred_set;
  collect_preds(phi, pred_set);
  std::vector<PredKey> preds(pred_set.begin(), pred_set.end());
  auto vars = variables(phi);

  const std::size_t n_digits = consts.size() + fns.size() * k + preds.size() + vars.size();
  std::vector<std::size_t> digits(n_digits, 0), radix(n_digits, k);
  for (std::size_t i = 0; i < preds.size(); ++i) radix[consts.size() + fns.size() * k + i] = 2;

  for (;;) {
    FiniteInterpretation m;
    m.size = k;
    std::size_t d = 0;
    for (const auto& c : consts) m.constants[c] = static_cast<int>(digits[d++]);
    for (const auto& f : fns) {
      auto& table = m.functions[f];
      for (std::size_t e = 0; e < k; ++e) table.push_back(static_cast<int>(digits[d++]));
    }
    for (const auto& p : preds) m.predicates[p] = digits[d++] == 1;
    std::vector<char> hit(k, 0);
    std::size_t named_count = 0;
    for (const auto& x : vars) {
      auto e = digits[d++];
      m.variables[x] = static_cast<int>(e);
      if (!hit[e]) {
        hit[e] = 1;
        ++named_count;
      }
    }
    if ((!named || named_count == k) && member.accepts(m) && eval(m, phi)) return m;

    std::size_t i = n_digits;
    while (i > 0) {
      --i;
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (n_digits == 0) return std::nullopt;
  }
}

void check_size(std::size_t k, const SearchOptions& opts) {
  if (k < 1) throw Error("model search: size must be positive");
  if (k > opts.max_size)
    throw LimitError("model search: size " + std::to_string(k) + " exceeds the ceiling " +
                     std::to_string(opts.max_size));
}

}  // namespace

std::optional<FiniteInterpretation> find_model(const Cube& phi, const Signature& sig, std::size_t k,
                                               const MembershipCheck& member, const SearchOptions& opts) {
  check_size(k, opts);
  if (opts.mode == SearchMode::Exhaustive) return exhaustive(Formula::from_cube(phi), sig, k, member, opts.named_domain);
  return CubeSearch(phi, sig, k, member, opts).run();
}

std::optional<FiniteInterpretation> find_model(const Formula& phi, const Signature& sig, std::size_t k,
                                               const MembershipCheck& member, const SearchOptions& opts) {
  check_size(k, opts);
  if (opts.mode == SearchMode::Exhaustive) return exhaustive(phi, sig, k, member, opts.named_domain);
  for (const auto& cube : to_dnf(phi))
    if (auto m = CubeSearch(cube, sig, k, member, opts).run()) return m;
  return std::nullopt;
}

std::set<std::size_t> brute_spectrum(const Formula& phi, const Signature& sig, const MembershipCheck& member,
                                     std::size_t max_k, const SearchOptions& opts) {
  check_size(max_k, opts);
  std::set<std::size_t> out;
  auto cubes = to_dnf(phi);
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (opts.mode == SearchMode::Exhaustive) {
      if (exhaustive(phi, sig, k, member, opts.named_domain)) out.insert(k);
      continue;
    }
    for (const auto& cube : cubes)
      if (CubeSearch(cube, sig, k, member, opts).run()) {
        out.insert(k);
        break;
      }
  }
  return out;
}

std::optional<std::size_t> min_eq_model_size(const Cube& phi) {
  for (const auto& l : phi.literals)
    if (!l.is_equality() || !l.equality().lhs.is_variable() || !l.equality().rhs.is_variable())
      throw Error("min_eq_model_size: literal " + to_string(l) + " is not an equality between variables");
  std::size_t n = std::max<std::size_t>(1, variables(phi).size());
  SearchOptions opts;
  opts.max_size = n;
  Signature sig = signatures::empty();
  auto all = MembershipCheck::everything();
  for (std::size_t k = 1; k <= n; ++k)
    if (find_model(phi, sig, k, all, opts)) return k;
  return std::nullopt;
}

std::string format_model(const FiniteInterpretation& m) {
  std::string out = "size " + std::to_string(m.size);
  for (const auto& [c, e] : m.constants) out += "; " + c + "=" + std::to_string(e);
  for (const auto& [fn, table] : m.functions) {
    out += "; " + fn + ": [";
    for (std::size_t i = 0; i < table.size(); ++i) out += (i ? "," : "") + std::to_string(table[i]);
    out += "]";
  }
  for (const auto& [key, value] : m.predicates)
    out += "; " + key.family + std::to_string(key.index) + "=" + (value ? "true" : "false");
  for (const auto& [x, e] : m.variables) out += "; " + x + "=" + std::to_string(e);
  return out;
}

}  // namespace tcomb
