#include "tcomb/catalogue.hpp"

#include <algorithm>
#include <map>

#include "tcomb/chains.hpp"
#include "tcomb/errors.hpp"

namespace tcomb {

namespace {

// Split of a Σ_P cube into its equality part and its predicate part.
struct Split {
  Cube eq;
  std::map<unsigned, bool> preds;  // index -> polarity
  bool consistent = true;

  std::vector<unsigned> positives() const {
    std::vector<unsigned> out;
    for (const auto& [n, pos] : preds)
      if (pos) out.push_back(n);
    return out;
  }
  bool has_positive(unsigned n) const {
    auto it = preds.find(n);
    return it != preds.end() && it->second;
  }
};

Split split(const Cube& phi) {
  Split s;
  for (const auto& l : phi.literals) {
    if (l.is_equality()) {
      s.eq.add(l);
      continue;
    }
    auto [it, fresh] = s.preds.emplace(l.predicate().index, l.positive);
    if (!fresh && it->second != l.positive) s.consistent = false;
  }
  return s;
}

std::vector<std::string> var_names(const Cube& phi) { return variables(phi); }

std::set<std::string> var_set(const Cube& phi) {
  auto v = variables(phi);
  return {v.begin(), v.end()};
}

Spectrum union_over(const Formula& phi, const std::function<Spectrum(const Cube&)>& per_cube) {
  Spectrum acc = Spectrum::empty();
  for (const auto& c : to_dnf(phi)) acc = spectrum_union(acc, per_cube(c));
  return acc;
}

MembershipComponent size_only(std::string name, std::function<bool(const ModelView&)> ok) {
  return MembershipComponent{std::move(name), {}, std::move(ok), nullptr};
}

}  // namespace

// ---------------------------------------------------------------------------
// Membership

MembershipCheck teq_member() {
  return {"teq", {size_only("P_n -> size n", [](const ModelView& v) {
            for (const auto& [key, on] : v.predicates())
              if (on && key.index != v.size()) return false;
            return true;
          })}};
}

MembershipCheck tle_member(const FRelation& F) {
  return {"tle", {size_only("P_n -> size <= F(n)", [F](const ModelView& v) {
            for (const auto& [key, on] : v.predicates())
              if (on && !F.geq(key.index, v.size())) return false;
            return true;
          })}};
}

MembershipCheck tinf_member() {
  return {"tinf", {size_only("infinite", [](const ModelView&) { return false; })}};
}

MembershipCheck fixpoint_member(const BitTable& f) {
  auto full = [f](const ModelView& v) { return count_fixpoints(v, "s").fixed == f.ones(v.size()); };
  auto partial = [f](const ModelView& v) {
    auto c = count_fixpoints(v, "s");
    std::size_t want = f.ones(v.size());
    return c.fixed <= want && c.fixed + c.unset >= want;
  };
  return {f.name().empty() ? "tf" : "t" + f.name(), {{"fixpoints = f1(size)", {"s"}, full, partial}}};
}

MembershipCheck torb2_member() {
  auto full = [](const ModelView& v) { return v.size() <= 2 * orbit_of(v, "t", "a").length; };
  auto partial = [](const ModelView& v) {
    Orbit o = orbit_of(v, "t", "a");
    return !o.closed || v.size() <= 2 * o.length;
  };
  return {"torb2", {{"orb_n(a) -> size <= 2n", {"t", "a"}, full, partial}}};
}

MembershipCheck tleorb_member(const FRelation& F) {
  auto ok = [F](const ModelView& v, const Orbit& o) {
    std::size_t rest = v.size() > o.length ? v.size() - o.length : 0;
    return F.geq(o.length, rest);
  };
  auto full = [ok](const ModelView& v) { return ok(v, orbit_of(v, "t", "a")); };
  auto partial = [ok](const ModelView& v) {
    Orbit o = orbit_of(v, "t", "a");
    return !o.closed || ok(v, o);
  };
  return {"tleorb", {{"orb_n(a) -> size <= F(n)+n", {"t", "a"}, full, partial}}};
}

MembershipCheck tinfh_member(const HTable& h) {
  return {"tinfh", {size_only("P_1 axioms and infinite P_n", [h](const ModelView& v) {
            bool p1 = v.predicate("P", 1);
            for (const auto& [key, on] : v.predicates()) {
              if (!on) continue;
              if (key.index == 1 && v.size() != 1) return false;
              if (key.index >= 2 && (p1 || h.at(key.index) == 1)) return false;
            }
            return true;
          })}};
}

MembershipCheck tlen_member(unsigned n) {
  return {"tlen:" + std::to_string(n), {size_only("size <= n", [n](const ModelView& v) { return v.size() <= n; })}};
}

// ---------------------------------------------------------------------------
// Procedures

Spectrum teq_spectrum(const Cube& phi) {
  check_symbols(phi, signatures::predicates());
  Split s = split(phi);
  auto m = min_eq_model_size(s.eq);
  if (!m || !s.consistent) return Spectrum::empty();
  auto pos = s.positives();
  if (pos.empty()) {
    std::set<std::uint64_t> below;
    for (std::uint64_t n = 1; n < *m; ++n) below.insert(n);
    return Spectrum::cofinite(std::move(below));
  }
  if (pos.size() > 1 || pos.front() < *m) return Spectrum::empty();
  return Spectrum::finite({pos.front()});
}

Cube teq_witness(const Cube& phi) {
  check_symbols(phi, signatures::predicates());
  FreshNames fresh("w", var_set(phi));
  auto pos = split(phi).positives();
  Cube out = phi;
  if (pos.empty()) {
    std::string w = fresh.next();
    out.add(Literal::eq(Term::var(w), Term::var(w)));
    return out;
  }
  std::vector<std::string> ws;
  for (unsigned i = 0; i < pos.back(); ++i) ws.push_back(fresh.next());
  // A single w still has to occur so that it names the element.
  if (ws.size() == 1) out.add(Literal::eq(Term::var(ws[0]), Term::var(ws[0])));
  return out.conjoined(build_distinct(ws));
}

Verdict tle_decide(const Cube& phi, const FRelation& F) {
  check_symbols(phi, signatures::predicates());
  Split s = split(phi);
  auto m = min_eq_model_size(s.eq);
  if (!m || !s.consistent) return Verdict::Unsat;
  for (unsigned n : s.positives())
    if (!F.geq(n, *m)) return Verdict::Unsat;
  return Verdict::Sat;
}

bool tle_contains_finite(const Cube& phi, std::uint64_t k, const FRelation& F) {
  check_symbols(phi, signatures::predicates());
  Split s = split(phi);
  auto m = min_eq_model_size(s.eq);
  if (!m || !s.consistent || k < *m) return false;
  for (unsigned n : s.positives())
    if (!F.geq(n, k)) return false;
  return true;
}

Verdict eq_decide(const Cube& phi) {
  check_symbols(phi, signatures::empty());
  return verdict(min_eq_model_size(phi).has_value());
}

Verdict tf_decide(const Cube& phi) {
  check_symbols(phi, signatures::successor());
  ChainSystem sys(phi, {"s", std::nullopt, false});
  bool found = false;
  sys.for_each_model([&](const std::vector<int>&, int) {
    found = true;
    return false;
  });
  return verdict(found);
}

bool tf_member(const FiniteInterpretation& m, const BitTable& f) { return fixpoint_member(f).accepts(m); }

Spectrum torb2_spectrum(const Cube& phi) {
  check_symbols(phi, signatures::orbit());
  ChainSystem sys(phi, {"t", std::string("a"), true});
  std::set<std::pair<std::uint64_t, std::uint64_t>> closed;
  std::optional<std::uint64_t> tail;
  sys.for_each_model([&](const std::vector<int>& cls, int classes) {
    QuotientOrbit o = quotient_orbit(sys, cls, classes);
    if (2 * o.size < classes) return true;
    auto n = static_cast<std::uint64_t>(classes);
    if (o.total)
      closed.emplace(n, 2 * static_cast<std::uint64_t>(o.size));
    else
      tail = std::min(tail.value_or(n), n);
    return true;
  });
  std::vector<IntervalPiece> pieces;
  for (const auto& [lo, hi] : closed) pieces.push_back(IntervalPiece::closed(lo, hi));
  if (tail) pieces.push_back(IntervalPiece::tail(*tail));
  return normalize(pieces);
}

Verdict torb2_decide(const Cube& phi) {
  check_symbols(phi, signatures::orbit());
  ChainSystem sys(phi, {"t", std::string("a"), true});
  bool sat = false;
  sys.for_each_model([&](const std::vector<int>& cls, int classes) {
    sat = 2 * quotient_orbit(sys, cls, classes).size >= classes;
    return !sat;
  });
  return verdict(sat);
}

Spectrum torb2_spectrum(const Formula& phi) {
  return union_over(phi, [](const Cube& c) { return torb2_spectrum(c); });
}

Cube torb2_witness(const Cube& phi) {
  check_symbols(phi, signatures::orbit());
  auto vars = var_names(phi);
  std::string base = "_x";
  while (std::any_of(vars.begin(), vars.end(), [&](const std::string& v) { return v.rfind(base, 0) == 0; }))
    base = "_" + base;

  std::map<std::string, std::size_t> depth;
  std::size_t a_depth = 0;
  for (const auto& l : phi.literals) {
    for (const Term* t : {&l.equality().lhs, &l.equality().rhs}) {
      if (t->kind == Term::HeadKind::Constant)
        a_depth = std::max(a_depth, t->depth());
      else
        depth[t->head] = std::max(depth[t->head], t->depth());
    }
  }
  std::size_t m0 = a_depth;
  for (const auto& v : vars) m0 += depth[v] + 1;

  Cube out = phi;
  auto chain = [&](std::size_t i, const Term& head, std::size_t len) {
    for (std::size_t j = 0; j <= len; ++j)
      out.add(Literal::eq(Term::var(base + std::to_string(i) + "_" + std::to_string(j)),
                          Term::iterate("t", static_cast<unsigned>(j), head)));
  };
  chain(0, Term::constant("a"), m0);
  for (std::size_t i = 0; i < vars.size(); ++i) chain(i + 1, Term::var(vars[i]), depth[vars[i]]);
  return out;
}

Verdict tleorb_decide(const Cube& phi, const FRelation& F) {
  check_symbols(phi, signatures::orbit());
  ChainSystem sys(phi, {"t", std::string("a"), true});
  bool sat = false;
  sys.for_each_model([&](const std::vector<int>& cls, int classes) {
    QuotientOrbit o = quotient_orbit(sys, cls, classes);
    // A partial orbit can be continued forever, which makes every axiom vacuous.
    if (!o.total || classes <= o.size ||
        F.geq(static_cast<std::uint64_t>(o.size), static_cast<std::uint64_t>(classes - o.size)))
      sat = true;
    return !sat;
  });
  return verdict(sat);
}

Verdict tinfh_decide(const Cube& phi) {
  check_symbols(phi, signatures::predicates());
  Split s = split(phi);
  auto m = min_eq_model_size(s.eq);
  if (!m || !s.consistent) return Verdict::Unsat;
  if (s.has_positive(1) && (*m != 1 || s.positives().size() > 1)) return Verdict::Unsat;
  return Verdict::Sat;
}

Verdict tinfh_infinitely_decidable(const Cube& phi) {
  if (!is_sat(tinfh_decide(phi))) return Verdict::Unsat;
  return verdict(!split(phi).has_positive(1));
}

Spectrum tlen_spectrum(const Cube& phi, unsigned n) {
  check_symbols(phi, signatures::empty());
  auto m = min_eq_model_size(phi);
  std::set<std::uint64_t> out;
  if (m)
    for (std::uint64_t k = *m; k <= n; ++k) out.insert(k);
  return Spectrum::finite(std::move(out));
}

// ---------------------------------------------------------------------------
// Handles

namespace {
std::function<bool(const Cube&, std::uint64_t)> contains_from(std::function<Spectrum(const Cube&)> spec) {
  return [spec](const Cube& c, std::uint64_t k) { return spec(c).contains(Card(k)); };
}
std::function<Verdict(const Cube&)> decide_from(std::function<Spectrum(const Cube&)> spec) {
  return [spec](const Cube& c) { return verdict(!spec(c).is_empty()); };
}
}  // namespace

TheoryHandle make_teq() {
  TheoryHandle h;
  h.name = "teq";
  h.sig = signatures::predicates();
  h.member = teq_member();
  h.gentle_spectrum = teq_spectrum;
  h.decide = decide_from(teq_spectrum);
  h.contains_finite = contains_from(teq_spectrum);
  h.witness = teq_witness;
  h.strong_witness = true;
  h.flags = {Flag::FiniteModelProperty};
  return h;
}

TheoryHandle make_tle(const FRelation& F) {
  TheoryHandle h;
  h.name = "tle";
  h.sig = signatures::predicates();
  h.member = tle_member(F);
  h.decide = [F](const Cube& c) { return tle_decide(c, F); };
  h.contains_finite = [F](const Cube& c, std::uint64_t k) { return tle_contains_finite(c, k, F); };
  h.flags = {Flag::FiniteModelProperty};
  return h;
}

TheoryHandle make_tinf() {
  TheoryHandle h;
  h.name = "tinf";
  h.sig = signatures::empty();
  h.member = tinf_member();
  h.decide = eq_decide;
  h.infinitely_decidable = eq_decide;
  h.exact_spectrum = [](const Cube& c) {
    return is_sat(eq_decide(c)) ? Spectrum::infinity_only() : Spectrum::empty();
  };
  h.minmod = [](const Cube& c) {
    if (!is_sat(eq_decide(c))) throw Error("minmod: formula is unsatisfiable in tinf");
    return Card::aleph0();
  };
  h.flags = {Flag::StablyInfinite, Flag::Smooth};
  return h;
}

namespace {
TheoryHandle fixpoint_theory(std::string name, const BitTable& table) {
  TheoryHandle h;
  h.name = std::move(name);
  h.sig = signatures::successor();
  h.member = fixpoint_member(table);
  h.decide = tf_decide;
  h.flags = {Flag::StablyInfinite, Flag::Smooth};
  return h;
}
}  // namespace

TheoryHandle make_tf(const FTable& f) { return fixpoint_theory("tf", f); }
TheoryHandle make_tg(const GTable& g) { return fixpoint_theory("tg", g); }

TheoryHandle make_torb2() {
  TheoryHandle h;
  h.name = "torb2";
  h.sig = signatures::orbit();
  h.member = torb2_member();
  h.gentle_spectrum = [](const Cube& c) { return torb2_spectrum(c); };
  h.decide = torb2_decide;
  h.contains_finite = contains_from(h.gentle_spectrum);
  h.witness = torb2_witness;
  h.strong_witness = true;
  return h;
}

TheoryHandle make_tleorb(const FRelation& F) {
  TheoryHandle h;
  h.name = "tleorb";
  h.sig = signatures::orbit();
  h.member = tleorb_member(F);
  h.decide = [F](const Cube& c) { return tleorb_decide(c, F); };
  return h;
}

TheoryHandle make_tinfh(const HTable& table) {
  TheoryHandle h;
  h.name = "tinfh";
  h.sig = signatures::predicates();
  h.member = tinfh_member(table);
  h.decide = tinfh_decide;
  h.infinitely_decidable = tinfh_infinitely_decidable;
  return h;
}

TheoryHandle make_tlen(unsigned n) {
  if (n < 1) throw Error("tlen: bound must be positive");
  TheoryHandle h;
  h.name = "tlen:" + std::to_string(n);
  h.sig = signatures::empty();
  h.member = tlen_member(n);
  h.gentle_spectrum = [n](const Cube& c) { return tlen_spectrum(c, n); };
  h.decide = decide_from(h.gentle_spectrum);
  h.contains_finite = contains_from(h.gentle_spectrum);
  h.flags = {Flag::FiniteModelProperty};
  return h;
}

TheoryHandle theory_by_name(const std::string& name, const TheoryParams& p) {
  if (name == "teq") return make_teq();
  if (name == "tle") return make_tle(p.F);
  if (name == "tinf") return make_tinf();
  if (name == "tf") return make_tf(p.f);
  if (name == "tg") return make_tg(p.g);
  if (name == "torb2") return make_torb2();
  if (name == "tleorb") return make_tleorb(p.F);
  if (name == "tinfh") return make_tinfh(p.h);
  if (name.rfind("tlen:", 0) == 0) {
    std::string digits = name.substr(5);
    bool ok = !digits.empty() && digits.size() <= 6 &&
              std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (ok && std::stoul(digits) >= 1) return make_tlen(static_cast<unsigned>(std::stoul(digits)));
  }
  throw Error("unknown theory '" + name + "'");
}

std::vector<std::string> theory_names() {
  return {"teq", "tle", "tinf", "tf", "tg", "torb2", "tleorb", "tinfh", "tlen:<n>"};
}

}  // namespace tcomb
