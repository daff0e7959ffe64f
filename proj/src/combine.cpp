#include "tcomb/combine.hpp"

#include "tcomb/errors.hpp"
#include "tcomb/minmod.hpp"

namespace tcomb {

const char* to_string(Engine e) {
  switch (e) {
    case Engine::NelsonOppen: return "no";
    case Engine::GentleCfs: return "gentle-cfs";
    case Engine::MinmodInfdec: return "minmod-infdec";
    case Engine::BothGentle: return "both-gentle";
  }
  return "?";
}

std::optional<Engine> engine_from_name(const std::string& name) {
  for (Engine e : {Engine::NelsonOppen, Engine::GentleCfs, Engine::MinmodInfdec, Engine::BothGentle})
    if (name == to_string(e)) return e;
  return std::nullopt;
}

namespace {

void require(bool ok, const TheoryHandle& h, const std::string& what) {
  if (!ok) throw CapabilityError(h.name + ": " + what);
}

// Per-arrangement test; returns true when the arrangement works, and may add notes.
using ArrangementTest =
    std::function<bool(const Cube& first, const Cube& second, std::vector<std::string>& notes)>;

CombinationResult run_arrangements(const CombinationProblem& p, const ArrangementTest& test) {
  if (!p.t1.sig.disjoint_from(p.t2.sig))
    throw Error("combine: signatures of " + p.t1.name + " and " + p.t2.name + " overlap");
  check_symbols(p.mixed, Signature::united(p.t1.sig, p.t2.sig));
  Purified pure = purify(p.mixed, p.t1.sig, p.t2.sig);
  std::vector<std::string> shared(pure.shared.begin(), pure.shared.end());

  CombinationResult res;
  for (const auto& arr : enumerate_arrangements(shared)) {
    ++res.arrangements_tried;
    Cube delta = arrangement_to_cube(arr);
    std::vector<std::string> notes;
    if (test(pure.first.conjoined(delta), pure.second.conjoined(delta), notes)) {
      res.verdict = Verdict::Sat;
      res.arrangement = arr;
      res.notes = std::move(notes);
      return res;
    }
  }
  return res;
}

Cube with_fresh_distinct(const Cube& c, std::uint64_t n) {
  if (n <= 1) return c;
  auto vars = variables(c);
  FreshNames fresh("d", {vars.begin(), vars.end()});
  std::vector<std::string> ds;
  for (std::uint64_t i = 0; i < n; ++i) ds.push_back(fresh.next());
  return c.conjoined(build_distinct(ds));
}

}  // namespace

CombinationResult combine_nelson_oppen(const CombinationProblem& p) {
  require(p.t1.has(Flag::StablyInfinite), p.t1, "Nelson-Oppen needs a stably infinite theory");
  require(p.t2.has(Flag::StablyInfinite), p.t2, "Nelson-Oppen needs a stably infinite theory");
  require(bool(p.t1.decide), p.t1, "no decision procedure");
  require(bool(p.t2.decide), p.t2, "no decision procedure");
  return run_arrangements(p, [&](const Cube& a, const Cube& b, std::vector<std::string>&) {
    return is_sat(p.t1.decide(a)) && is_sat(p.t2.decide(b));
  });
}

CombinationResult combine_gentle_cfs(const CombinationProblem& p) {
  require(bool(p.t1.gentle_spectrum), p.t1, "no gentle spectrum");
  require(bool(p.t2.contains_finite), p.t2, "no finite-spectrum membership");
  require(bool(p.t2.decide), p.t2, "no decision procedure");
  return run_arrangements(p, [&](const Cube& a, const Cube& b, std::vector<std::string>& notes) {
    Spectrum s = p.t1.gentle_spectrum(a);
    auto probe = [&](std::uint64_t k) { return p.t2.contains_finite(b, k); };
    auto tail = [&](std::uint64_t k) { return is_sat(p.t2.decide(with_fresh_distinct(b, k))); };
    if (intersect_empty_vs_cfs(s, probe, tail)) return false;
    notes.push_back("spec1 = " + s.str());
    return true;
  });
}

CombinationResult combine_minmod_infdec(const CombinationProblem& p) {
  require(p.t1.has(Flag::Smooth), p.t1, "not declared smooth");
  require(bool(p.t1.minmod) || (p.t1.witness && p.t1.strong_witness), p.t1, "no minimal model function");
  require(bool(p.t1.decide), p.t1, "no decision procedure");
  require(bool(p.t2.infinitely_decidable), p.t2, "not infinitely decidable");
  require(bool(p.t2.decide), p.t2, "no decision procedure");
  return run_arrangements(p, [&](const Cube& a, const Cube& b, std::vector<std::string>& notes) {
    if (!is_sat(p.t1.decide(a))) return false;
    auto mm = minmod(p.t1, a);
    if (!mm) return false;
    bool ok = mm->value.is_infinite() ? is_sat(p.t2.infinitely_decidable(b))
                                      : is_sat(p.t2.decide(with_fresh_distinct(b, mm->value.value())));
    if (ok) notes.push_back("minmod1 = " + mm->value.str());
    return ok;
  });
}

CombinationResult combine_both_gentle(const CombinationProblem& p) {
  require(bool(p.t1.gentle_spectrum), p.t1, "no gentle spectrum");
  require(bool(p.t2.gentle_spectrum), p.t2, "no gentle spectrum");
  return run_arrangements(p, [&](const Cube& a, const Cube& b, std::vector<std::string>& notes) {
    Spectrum s1 = p.t1.gentle_spectrum(a), s2 = p.t2.gentle_spectrum(b);
    if (intersect_empty(s1, s2)) return false;
    notes.push_back("spec1 = " + s1.str());
    notes.push_back("spec2 = " + s2.str());
    return true;
  });
}

CombinationResult combine(Engine e, const CombinationProblem& p) {
  switch (e) {
    case Engine::NelsonOppen: return combine_nelson_oppen(p);
    case Engine::GentleCfs: return combine_gentle_cfs(p);
    case Engine::MinmodInfdec: return combine_minmod_infdec(p);
    case Engine::BothGentle: return combine_both_gentle(p);
  }
  throw Error("combine: unknown engine");
}

CombinationResult combine_qf(Engine e, const TheoryHandle& t1, const TheoryHandle& t2, const Formula& mixed) {
  CombinationResult last;
  for (const auto& cube : to_dnf(mixed)) {
    last = combine(e, {t1, t2, cube});
    if (is_sat(last.verdict)) return last;
  }
  return last;
}

}  // namespace tcomb
