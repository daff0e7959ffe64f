#include "tcomb/chains.hpp"

#include <algorithm>
#include <map>

#include "tcomb/errors.hpp"

namespace tcomb {

ChainSystem::ChainSystem(const Cube& input, Options opts) : opts_(std::move(opts)) {
  const Cube cube = eliminate_defined_variables(input);
  std::map<Term, std::size_t> depth;  // head term -> max depth
  std::vector<Term> order;
  auto note = [&](const Term& t) {
    for (const auto& fn : t.apps)
      if (fn != opts_.fn) throw Error("chain flattening: unexpected function symbol '" + fn + "'");
    if (t.kind == Term::HeadKind::Constant && (!opts_.anchor || t.head != *opts_.anchor))
      throw Error("chain flattening: unexpected constant '" + t.head + "'");
    Term h{t.kind, t.head, {}};
    auto [it, fresh] = depth.emplace(h, t.depth());
    if (fresh)
      order.push_back(h);
    else
      it->second = std::max(it->second, t.depth());
  };
  for (const auto& l : cube.literals) {
    if (!l.is_equality()) throw Error("chain flattening: predicate literal " + to_string(l));
    note(l.equality().lhs);
    note(l.equality().rhs);
  }

  if (opts_.anchor) {
    Term a = Term::constant(*opts_.anchor);
    std::size_t m0 = depth.count(a) ? depth[a] : 0;
    heads_.push_back(a);
    ends_.push_back(m0);
  }
  for (const auto& h : order) {
    if (h.kind == Term::HeadKind::Constant) continue;
    heads_.push_back(h);
    ends_.push_back(depth[h]);
  }
  if (opts_.anchor && opts_.extend_anchor)
    for (std::size_t i = 1; i < heads_.size(); ++i) ends_[0] += ends_[i] + 1;

  for (std::size_t i = 0; i < heads_.size(); ++i) {
    start_.push_back(static_cast<int>(succ_.size()));
    for (std::size_t j = 0; j <= ends_[i]; ++j) {
      int id = static_cast<int>(succ_.size());
      succ_.push_back(j < ends_[i] ? id + 1 : -1);
      pred_.push_back(j > 0 ? id - 1 : -1);
    }
  }
  if (succ_.size() > kMaxNodes)
    throw LimitError("chain flattening: " + std::to_string(succ_.size()) + " nodes exceed the limit of " +
                     std::to_string(kMaxNodes));

  due_.resize(succ_.size());
  for (const auto& l : cube.literals) {
    int a = node_of(l.equality().lhs), b = node_of(l.equality().rhs);
    if (a == b) {
      if (!l.positive) trivially_false_ = true;
      continue;
    }
    due_[static_cast<std::size_t>(std::max(a, b))].push_back({a, b, l.positive});
  }
}

int ChainSystem::node_of(const Term& t) const {
  for (std::size_t i = 0; i < heads_.size(); ++i)
    if (heads_[i].kind == t.kind && heads_[i].head == t.head) return node(i, t.depth());
  throw Error("chain flattening: unknown head '" + t.head + "'");
}

bool ChainSystem::consistent(const std::vector<int>& cls, int v) const {
  const auto vi = static_cast<std::size_t>(v);
  for (const auto& c : due_[vi])
    if ((cls[static_cast<std::size_t>(c.a)] == cls[static_cast<std::size_t>(c.b)]) != c.positive) return false;
  int p = pred_[vi];
  if (p < 0) return true;
  // Functional consistency: nodes equal to p must have successors equal to v.
  int cp = cls[static_cast<std::size_t>(p)];
  for (int u = 0; u < v; ++u) {
    int su = succ_[static_cast<std::size_t>(u)];
    if (u == p || su < 0 || su > v) continue;
    if (cls[static_cast<std::size_t>(u)] == cp && cls[static_cast<std::size_t>(su)] != cls[vi]) return false;
  }
  return true;
}

bool ChainSystem::extend(std::vector<int>& cls, int v, int classes,
                         const std::function<bool(const std::vector<int>&, int)>& visit) const {
  if (static_cast<std::size_t>(v) == cls.size()) return visit(cls, classes);
  for (int c = 0; c <= classes; ++c) {
    cls[static_cast<std::size_t>(v)] = c;
    if (!consistent(cls, v)) continue;
    if (!extend(cls, v + 1, c == classes ? classes + 1 : classes, visit)) return false;
  }
  cls[static_cast<std::size_t>(v)] = -1;
  return true;
}

bool ChainSystem::for_each_model(const std::function<bool(const std::vector<int>&, int)>& visit) const {
  if (trivially_false_) return true;
  std::vector<int> cls(succ_.size(), -1);
  return extend(cls, 0, 0, visit);
}

QuotientOrbit quotient_orbit(const ChainSystem& sys, const std::vector<int>& cls, int classes) {
  std::vector<int> next(static_cast<std::size_t>(classes), -1);
  for (std::size_t u = 0; u < sys.node_count(); ++u) {
    int s = sys.succ(static_cast<int>(u));
    if (s >= 0) next[static_cast<std::size_t>(cls[u])] = cls[static_cast<std::size_t>(s)];
  }
  QuotientOrbit o;
  std::vector<char> seen(static_cast<std::size_t>(classes), 0);
  int c = cls[0];
  while (c >= 0 && !seen[static_cast<std::size_t>(c)]) {
    seen[static_cast<std::size_t>(c)] = 1;
    ++o.size;
    c = next[static_cast<std::size_t>(c)];
  }
  o.total = c >= 0;
  return o;
}

}  // namespace tcomb
