#include "tcomb/reductions.hpp"

#include <algorithm>

#include "tcomb/catalogue.hpp"
#include "tcomb/errors.hpp"

namespace tcomb {

namespace {
constexpr unsigned kMaxRecognizedIndex = 256;

Formula fixpoints(unsigned k) { return Formula::from_cube(build_fixpoint_count(k, "s")); }

std::size_t prefix_ones(const std::vector<int>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

void require_family(const std::string& family) {
  const auto& all = oracle_families();
  if (std::find(all.begin(), all.end(), family) == all.end())
    throw OracleError("unknown oracle family '" + family + "'");
}

// Finds the (n, k) for which `build(n, k)` reproduces the query.
std::optional<std::pair<unsigned, unsigned>> recognize(const Formula& q,
                                                       const std::function<Formula(unsigned, unsigned)>& build,
                                                       bool uses_k) {
  unsigned k = uses_k ? static_cast<unsigned>(variables(q).size()) : 0;
  if (uses_k && k == 0) return std::nullopt;
  for (unsigned n = 1; n <= kMaxRecognizedIndex; ++n)
    if (build(n, k) == q) return std::make_pair(n, k);
  return std::nullopt;
}
}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Bruteforce: return "bruteforce";
    case Provenance::Analytic: return "analytic";
    case Provenance::Engine: return "engine";
  }
  return "?";
}

const std::vector<std::string>& oracle_families() {
  static const std::vector<std::string> names{"tf-teq", "tg-torb2", "tinf-tle", "tinf-tleorb"};
  return names;
}

Formula tf_teq_query(unsigned m, unsigned k) {
  return Formula::conj({Formula::lit(Literal::pred("P", m)), fixpoints(k)});
}

Formula tg_torb2_query(unsigned n, unsigned k) {
  return Formula::conj({build_orbit_formula(OrbitKind::Orb, n, Term::constant("a")), fixpoints(k)});
}

Formula tle_probe_query(unsigned n) { return Formula::lit(Literal::pred("P", n)); }

Formula tleorb_probe_query(unsigned n) { return build_orbit_formula(OrbitKind::Orb, n, Term::constant("a")); }

std::vector<int> recover_f(const CombinedOracle& oracle, std::size_t up_to) {
  if (up_to < 1) throw RangeError("recover_f: up_to must be at least 1");
  std::vector<int> f{1};
  for (std::size_t n = 1; n < up_to; ++n) {
    auto k = static_cast<unsigned>(prefix_ones(f) + 1);
    f.push_back(is_sat(oracle.query(tf_teq_query(static_cast<unsigned>(n + 1), k))) ? 1 : 0);
  }
  return f;
}

std::vector<int> recover_g(const CombinedOracle& oracle, std::size_t up_to) {
  if (up_to < 4 || up_to % 2 != 0) throw RangeError("recover_g: up_to must be even and at least 4");
  std::vector<int> g{1, 0, 1, 0};
  for (std::size_t n = 2; 2 * n + 2 <= up_to; ++n) {
    auto k = static_cast<unsigned>(prefix_ones(g) + 2);
    int bit = is_sat(oracle.query(tg_torb2_query(static_cast<unsigned>(n + 1), k))) ? 1 : 0;
    g.push_back(bit);
    g.push_back(bit);
  }
  return g;
}

bool probe_F_infinity(const CombinedOracle& oracle, ProbeFamily family, unsigned n) {
  return is_sat(oracle.query(family == ProbeFamily::Tle ? tle_probe_query(n) : tleorb_probe_query(n)));
}

CombinedOracle make_analytic_oracle(const std::string& family, const TheoryParams& params) {
  require_family(family);
  CombinedOracle o;
  o.family = family;
  o.provenance = Provenance::Analytic;
  auto reject = [family](const Formula& q) {
    return OracleError(family + " oracle: query outside the family: " + to_string(q));
  };

  if (family == "tf-teq") {
    FTable f = params.f;
    o.query = [f, reject](const Formula& q) {
      auto nk = recognize(q, tf_teq_query, true);
      if (!nk) throw reject(q);
      return verdict(f.ones(nk->first) >= nk->second);
    };
  } else if (family == "tg-torb2") {
    GTable g = params.g;
    o.query = [g, reject](const Formula& q) {
      auto nk = recognize(q, tg_torb2_query, true);
      if (!nk) throw reject(q);
      return verdict(g.ones(2 * static_cast<std::size_t>(nk->first)) >= nk->second);
    };
  } else {
    FRelation F = params.F;
    if (!F.has_table()) throw OracleError(family + " oracle: needs an explicit F table");
    bool tle = family == "tinf-tle";
    o.query = [F, tle, reject](const Formula& q) {
      auto build = [tle](unsigned n, unsigned) { return tle ? tle_probe_query(n) : tleorb_probe_query(n); };
      auto nk = recognize(q, build, false);
      if (!nk) throw reject(q);
      return verdict(F.is_infinite(nk->first));
    };
  }
  return o;
}

CombinedOracle make_bruteforce_oracle(const std::string& family, const TheoryParams& params,
                                      std::size_t max_size) {
  require_family(family);
  TheoryHandle t1, t2;
  if (family == "tf-teq") {
    t1 = make_tf(params.f);
    t2 = make_teq();
  } else if (family == "tg-torb2") {
    t1 = make_tg(params.g);
    t2 = make_torb2();
  } else {
    throw OracleError(family + ": queries have only infinite models; no brute-force oracle");
  }
  Signature sig = Signature::united(t1.sig, t2.sig);
  MembershipCheck member = t1.member.combined_with(t2.member);
  CombinedOracle o;
  o.family = family;
  o.provenance = Provenance::Bruteforce;
  SearchOptions opts;
  opts.max_size = max_size;
  o.query = [sig, member, opts](const Formula& q) {
    for (std::size_t k = 1; k <= opts.max_size; ++k)
      if (find_model(q, sig, k, member, opts)) return Verdict::Sat;
    return Verdict::Unsat;
  };
  return o;
}

std::vector<OracleComparison> compare_oracles(const std::string& family, const TheoryParams& params,
                                              std::size_t max_size) {
  CombinedOracle analytic = make_analytic_oracle(family, params);
  CombinedOracle brute = make_bruteforce_oracle(family, params, max_size);
  std::vector<Formula> queries;
  if (family == "tf-teq") {
    for (unsigned m = 1; m <= max_size; ++m)
      for (unsigned k = 1; k <= m + 1; ++k) queries.push_back(tf_teq_query(m, k));
  } else {
    for (unsigned n = 1; 2 * n <= max_size; ++n)
      for (unsigned k = 1; k <= 2 * n + 1; ++k) queries.push_back(tg_torb2_query(n, k));
  }
  std::vector<OracleComparison> out;
  for (const auto& q : queries) out.push_back({to_string(q), analytic.query(q), brute.query(q)});
  return out;
}

}  // namespace tcomb
