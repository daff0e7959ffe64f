#pragma once

// Recovery harnesses: given only a satisfiability oracle for a combined theory,
// reconstruct the hidden parameter table the theories were built from.

#include <functional>
#include <string>
#include <vector>

#include "tcomb/params.hpp"
#include "tcomb/theory.hpp"

namespace tcomb {

enum class Provenance : std::uint8_t { Bruteforce, Analytic, Engine };
const char* to_string(Provenance p);

struct CombinedOracle {
  std::function<Verdict(const Formula&)> query;
  Provenance provenance = Provenance::Analytic;
  std::string family;
};

/// Families: "tf-teq", "tg-torb2", "tinf-tle", "tinf-tleorb".
const std::vector<std::string>& oracle_families();

/// P_m ∧ (k distinct s-fixpoints)
Formula tf_teq_query(unsigned m, unsigned k);
/// orb_n(a) ∧ (k distinct s-fixpoints)
Formula tg_torb2_query(unsigned n, unsigned k);
Formula tle_probe_query(unsigned n);
Formula tleorb_probe_query(unsigned n);

/// f(1..up_to); f(1) = 1 is seeded.
std::vector<int> recover_f(const CombinedOracle& oracle, std::size_t up_to);
/// g(1..up_to); up_to even and >= 4, g(1..4) = 1,0,1,0 are seeded.
std::vector<int> recover_g(const CombinedOracle& oracle, std::size_t up_to);

enum class ProbeFamily : std::uint8_t { Tle, Tleorb };
/// Whether F(n) = ℵ0, read off the oracle.
bool probe_F_infinity(const CombinedOracle& oracle, ProbeFamily family, unsigned n);

/// Answers the family's queries by their satisfiability characterization;
/// anything outside the family raises OracleError.
CombinedOracle make_analytic_oracle(const std::string& family, const TheoryParams& params);
/// Finite model search over the combined theory up to `max_size`. Only for
/// families whose queries force finite models (tf-teq, tg-torb2).
CombinedOracle make_bruteforce_oracle(const std::string& family, const TheoryParams& params,
                                      std::size_t max_size = 8);

struct OracleComparison {
  std::string query;
  Verdict analytic;
  Verdict bruteforce;
};
/// Both oracles on every in-family query whose models have size <= max_size.
std::vector<OracleComparison> compare_oracles(const std::string& family, const TheoryParams& params,
                                              std::size_t max_size = 7);

}  // namespace tcomb
