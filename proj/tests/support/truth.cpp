#include "truth.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tcomb/catalogue.hpp"

namespace tcomb::testing {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool eq_part_sat(const Cube& c) {
  std::map<std::string, int> id;
  auto idx = [&](const Term& t) { return id.emplace(t.head, static_cast<int>(id.size())).first->second; };
  for (const auto& l : c.literals)
    if (l.is_equality()) idx(l.equality().lhs), idx(l.equality().rhs);
  UnionFind uf(id.size());
  for (const auto& l : c.literals)
    if (l.is_equality() && l.positive) uf.unite(idx(l.equality().lhs), idx(l.equality().rhs));
  for (const auto& l : c.literals)
    if (l.is_equality() && !l.positive && uf.find(idx(l.equality().lhs)) == uf.find(idx(l.equality().rhs)))
      return false;
  return true;
}

bool preds_consistent(const Cube& c) {
  std::map<unsigned, bool> seen;
  for (const auto& l : c.literals) {
    if (!l.is_predicate()) continue;
    auto [it, fresh] = seen.emplace(l.predicate().index, l.positive);
    if (!fresh && it->second != l.positive) return false;
  }
  return true;
}

std::set<unsigned> positive_preds(const Cube& c) {
  std::set<unsigned> out;
  for (const auto& l : c.literals)
    if (l.is_predicate() && l.positive) out.insert(l.predicate().index);
  return out;
}

bool uf_sat(const Cube& c) {
  // Every prefix of every term, keyed by (head kind, head, depth).
  std::map<Term, int> id;
  for (const auto& l : c.literals) {
    if (!l.is_equality()) continue;
    for (const Term* t : {&l.equality().lhs, &l.equality().rhs})
      for (std::size_t d = 0; d <= t->depth(); ++d) id.emplace(t->prefix(d), static_cast<int>(id.size()));
  }
  UnionFind uf(id.size());
  for (const auto& l : c.literals)
    if (l.is_equality() && l.positive) uf.unite(id[l.equality().lhs], id[l.equality().rhs]);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, iu] : id)
      for (const auto& [v, iv] : id) {
        if (iu >= iv || uf.find(iu) != uf.find(iv)) continue;
        for (const auto& fn : {std::string("s"), std::string("t")}) {
          auto a = id.find(u.applied(fn)), b = id.find(v.applied(fn));
          if (a != id.end() && b != id.end() && uf.unite(a->second, b->second)) changed = true;
        }
      }
  }
  for (const auto& l : c.literals)
    if (l.is_equality() && !l.positive && uf.find(id[l.equality().lhs]) == uf.find(id[l.equality().rhs]))
      return false;
  return true;
}

namespace {

// Depth-first construction of an orbit model. Orbit elements are 0, 1, 2, ...
// (infinite chain or cycle); other elements are kCore + i.
class OrbitSearch {
 public:
  static constexpr int kCore = 1000;

  OrbitSearch(const Cube& c, std::optional<unsigned> cycle) : cube_(c), cycle_(cycle) {
    std::map<std::string, std::size_t> depth;
    std::size_t a_depth = 0;
    for (const auto& l : c.literals)
      for (const Term* t : {&l.equality().lhs, &l.equality().rhs}) {
        if (t->kind == Term::HeadKind::Constant) {
          a_depth = std::max(a_depth, t->depth());
        } else {
          if (!depth.count(t->head)) vars_.push_back(t->head);
          depth[t->head] = std::max(depth[t->head], t->depth());
        }
      }
    limit_ = static_cast<int>(a_depth) + 1;
    for (const auto& v : vars_) {
      depth_.push_back(depth[v]);
      limit_ += static_cast<int>(depth[v]) + 1;
    }
    if (cycle_) limit_ = static_cast<int>(*cycle_) - 1;
    values_.resize(vars_.size());
  }

  bool run() { return place(0, 0); }

 private:
  int next_orbit(int p) const { return cycle_ ? (p + 1) % static_cast<int>(*cycle_) : p + 1; }

  int value(const Term& t) const {
    if (t.kind == Term::HeadKind::Constant) {
      int p = static_cast<int>(t.depth());
      return cycle_ ? p % static_cast<int>(*cycle_) : p;
    }
    auto i = static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), t.head) - vars_.begin());
    return values_[i][t.depth()];
  }

  // Literals are checked once every variable they mention is complete.
  bool literals_ok(std::size_t complete) const {
    for (const auto& l : cube_.literals) {
      bool ready = true;
      for (const Term* t : {&l.equality().lhs, &l.equality().rhs})
        if (t->kind == Term::HeadKind::Variable &&
            static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), t->head) - vars_.begin()) >= complete)
          ready = false;
      if (ready && (value(l.equality().lhs) == value(l.equality().rhs)) != l.positive) return false;
    }
    return true;
  }

  std::vector<int> choices() const {
    std::vector<int> out;
    for (int p = 0; p <= limit_; ++p) out.push_back(p);
    for (int i = 0; i <= static_cast<int>(core_next_.size()); ++i) out.push_back(kCore + i);
    return out;
  }

  // Assign values_[var][j].
  bool place(std::size_t var, std::size_t j) {
    if (var == vars_.size()) return literals_ok(var);
    if (j > depth_[var]) return literals_ok(var + 1) && place(var + 1, 0);
    auto& vals = values_[var];
    vals.resize(depth_[var] + 1);

    auto attempt = [&](int v) {
      bool new_core = v == kCore + static_cast<int>(core_next_.size());
      if (new_core) core_next_.push_back(-1);
      vals[j] = v;
      bool ok = place(var, j + 1);
      if (new_core) core_next_.pop_back();
      return ok;
    };

    if (j == 0) {
      for (int v : choices())
        if (attempt(v)) return true;
      return false;
    }
    int prev = vals[j - 1];
    if (prev < kCore) return attempt(next_orbit(prev));
    auto slot = static_cast<std::size_t>(prev - kCore);
    if (core_next_[slot] >= 0) return attempt(core_next_[slot]);
    for (int v : choices()) {
      bool new_core = v == kCore + static_cast<int>(core_next_.size());
      if (new_core) core_next_.push_back(-1);
      core_next_[slot] = v;
      vals[j] = v;
      bool ok = place(var, j + 1);
      core_next_[slot] = -1;
      if (new_core) core_next_.pop_back();
      if (ok) return true;
    }
    return false;
  }

  const Cube& cube_;
  std::optional<unsigned> cycle_;
  std::vector<std::string> vars_;
  std::vector<std::size_t> depth_;
  int limit_ = 0;
  std::vector<std::vector<int>> values_;
  std::vector<int> core_next_;  // t on core elements, -1 when not yet chosen
};

}  // namespace

bool orbit_model_exists(const Cube& c, std::optional<unsigned> cycle) {
  if (cycle && *cycle == 0) return false;
  OrbitSearch s(c, cycle);
  return s.run();
}

namespace {

void collect_preds(const Formula& f, std::set<PredKey>& out) {
  if (f.kind() == Formula::Kind::Literal) {
    if (f.literal().is_predicate()) out.insert({f.literal().predicate().family, f.literal().predicate().index});
    return;
  }
  for (const auto& k : f.children()) collect_preds(k, out);
}

// Odometer over `digits` positions with values in [0, base).
bool next_digits(std::vector<int>& d, int base) {
  for (auto& x : d) {
    if (++x < base) return true;
    x = 0;
  }
  return false;
}

}  // namespace

bool naive_has_model(const Formula& phi, const Signature& sig, std::size_t k, const MembershipCheck& member) {
  std::vector<std::string> fns(sig.functions.begin(), sig.functions.end());
  std::vector<std::string> consts(sig.constants.begin(), sig.constants.end());
  std::set<PredKey> pred_set;
  collect_preds(phi, pred_set);
  std::vector<PredKey> preds(pred_set.begin(), pred_set.end());
  auto vars = variables(phi);
  const int K = static_cast<int>(k);

  std::vector<int> structure(fns.size() * k + consts.size(), 0);
  do {
    FiniteInterpretation m;
    m.size = k;
    for (std::size_t f = 0; f < fns.size(); ++f)
      m.functions[fns[f]] = std::vector<int>(structure.begin() + static_cast<std::ptrdiff_t>(f * k),
                                             structure.begin() + static_cast<std::ptrdiff_t>((f + 1) * k));
    for (std::size_t c = 0; c < consts.size(); ++c) m.constants[consts[c]] = structure[fns.size() * k + c];
    std::vector<int> pbits(preds.size(), 0);
    do {
      for (std::size_t i = 0; i < preds.size(); ++i) m.predicates[preds[i]] = pbits[i] == 1;
      if (!member.accepts(m)) continue;
      std::vector<int> assign(vars.size(), 0);
      do {
        for (std::size_t i = 0; i < vars.size(); ++i) m.variables[vars[i]] = assign[i];
        if (eval(m, phi)) return true;
      } while (next_digits(assign, K));
    } while (next_digits(pbits, 2));
  } while (next_digits(structure, K));
  return false;
}

std::set<std::size_t> brute_sizes(const TheoryHandle& h, const Cube& c, std::size_t max_k) {
  std::set<std::size_t> out;
  SearchOptions opts;
  opts.max_size = std::max(max_k, kDefaultModelCeiling);
  for (std::size_t k = 1; k <= max_k; ++k)
    if (find_model(c, h.sig, k, h.member, opts)) out.insert(k);
  return out;
}

bool brute_combined_sat(const TheoryHandle& t1, const TheoryHandle& t2, const Cube& c, std::size_t max_k) {
  Signature sig = Signature::united(t1.sig, t2.sig);
  MembershipCheck member = t1.member.combined_with(t2.member);
  SearchOptions opts;
  opts.max_size = std::max(max_k, kDefaultModelCeiling);
  for (std::size_t k = 1; k <= max_k; ++k)
    if (find_model(c, sig, k, member, opts)) return true;
  return false;
}

bool infinite_model_exists(const std::string& theory, const Cube& c, const TheoryParams& p) {
  if (theory == "teq") return preds_consistent(c) && eq_part_sat(c) && positive_preds(c).empty();
  if (theory == "tle") {
    if (!preds_consistent(c) || !eq_part_sat(c)) return false;
    for (unsigned n : positive_preds(c))
      if (!p.F.is_infinite(n)) return false;
    return true;
  }
  if (theory == "tinf") return eq_part_sat(c);
  if (theory == "tf" || theory == "tg") return uf_sat(c);
  if (theory == "torb2") return orbit_model_exists(c);
  if (theory == "tleorb") {
    if (orbit_model_exists(c)) return true;
    for (const auto& [m, value] : p.F.table())
      if (value.is_infinite() && orbit_model_exists(c, static_cast<unsigned>(m))) return true;
    return false;
  }
  if (theory == "tinfh") return preds_consistent(c) && eq_part_sat(c) && !positive_preds(c).count(1);
  return false;  // tlen:n
}

bool truth_sat(const std::string& theory, const Cube& c, const TheoryParams& p, std::size_t max_k) {
  if (infinite_model_exists(theory, c, p)) return true;
  return !brute_sizes(theory_by_name(theory, p), c, max_k).empty();
}

}  // namespace tcomb::testing
