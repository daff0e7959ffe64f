#include "tcomb/theory.hpp"

#include <algorithm>

#include "tcomb/errors.hpp"

namespace tcomb {

const char* to_string(Verdict v) { return v == Verdict::Sat ? "sat" : "unsat"; }

const char* to_string(Flag f) {
  switch (f) {
    case Flag::StablyInfinite: return "stably-infinite";
    case Flag::Smooth: return "smooth";
    case Flag::FiniteModelProperty: return "fmp";
  }
  return "?";
}

Verdict decide_qf(const TheoryHandle& h, const Formula& phi) {
  if (!h.decide) throw CapabilityError(h.name + ": no decision procedure");
  check_symbols(phi, h.sig);
  for (const auto& c : to_dnf(phi))
    if (is_sat(h.decide(c))) return Verdict::Sat;
  return Verdict::Unsat;
}

Spectrum spectrum_qf(const TheoryHandle& h, const Formula& phi) {
  const auto& spec = h.gentle_spectrum ? h.gentle_spectrum : h.exact_spectrum;
  if (!spec) throw CapabilityError(h.name + ": no spectrum procedure");
  check_symbols(phi, h.sig);
  Spectrum acc = Spectrum::empty();
  for (const auto& c : to_dnf(phi)) acc = spectrum_union(acc, spec(c));
  return acc;
}

ContractReport check_witness_contract(const TheoryHandle& h, const Cube& phi, const WitnessCheckOptions& opts) {
  if (!h.witness) throw CapabilityError(h.name + ": no witness");
  ContractReport rep;
  Cube wit = h.witness(phi);
  const std::string shown = to_string(phi);

  for (std::size_t k = 1; k <= opts.max_k; ++k) {
    ++rep.checks;
    auto a = find_model(phi, h.sig, k, h.member);
    auto b = find_model(wit, h.sig, k, h.member);
    if (a.has_value() != b.has_value())
      rep.fail(shown + ": size " + std::to_string(k) + (a ? " has a model of phi but not of wit" : " has a model of wit but not of phi"));
    if (b && !eval(*b, phi)) rep.fail(shown + ": model of wit does not satisfy phi: " + format_model(*b));
  }

  if (!h.strong_witness) return rep;

  auto vars = variables(phi);
  if (vars.size() > opts.max_arrangement_vars)
    throw LimitError("witness check: " + std::to_string(vars.size()) + " variables exceed the limit of " +
                     std::to_string(opts.max_arrangement_vars));
  auto wv = variables(wit);
  std::set<std::string> avoid(wv.begin(), wv.end());
  FreshNames fresh("e", avoid);
  for (std::size_t i = 0; i < opts.extra_vars && vars.size() < opts.max_arrangement_vars; ++i)
    vars.push_back(fresh.next());

  for (const auto& arr : enumerate_arrangements(vars, opts.max_arrangement_vars)) {
    ++rep.checks;
    Cube c = wit.conjoined(arrangement_to_cube(arr));
    const std::string where = shown + " under " + to_string(arr);
    if (!is_sat(h.decide(c))) {
      for (std::size_t k = 1; k <= opts.max_k; ++k)
        if (auto m = find_model(c, h.sig, k, h.member)) {
          rep.fail(where + ": decided unsat but has a model: " + format_model(*m));
          break;
        }
      continue;
    }
    SearchOptions named;
    named.named_domain = true;
    bool found = false;
    std::size_t n = variables(c).size();
    for (std::size_t k = 1; k <= n && !found; ++k) found = find_model(c, h.sig, k, h.member, named).has_value();
    if (!found) rep.fail(where + ": no model whose domain is named by the variables");
  }
  return rep;
}

ContractReport check_smoothness_sample(const TheoryHandle& h, const Cube& phi, std::size_t window,
                                       std::size_t max_k) {
  if (!h.has(Flag::Smooth)) throw CapabilityError(h.name + ": not declared smooth");
  ContractReport rep;
  std::vector<char> has(max_k + window + 1, 0);
  SearchOptions opts;
  opts.max_size = std::max(opts.max_size, max_k + window);
  auto model_at = [&](std::size_t k) {
    if (!has[k]) has[k] = find_model(phi, h.sig, k, h.member, opts) ? 1 : 2;
    return has[k] == 1;
  };
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (!model_at(k)) continue;
    for (std::size_t j = k + 1; j <= k + window; ++j) {
      ++rep.checks;
      if (!model_at(j)) {
        rep.fail(to_string(phi) + ": model at " + std::to_string(k) + " but none at " + std::to_string(j));
        break;
      }
    }
  }
  return rep;
}

}  // namespace tcomb
