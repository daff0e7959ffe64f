#pragma once

// The concrete theories: membership checks, decision procedures, spectra and
// witnesses, and the name registry.

#include <cstdint>
#include <string>
#include <vector>

#include "tcomb/models.hpp"
#include "tcomb/params.hpp"
#include "tcomb/spectrum.hpp"
#include "tcomb/theory.hpp"

namespace tcomb {

// Membership checks for finite interpretations.
MembershipCheck teq_member();
MembershipCheck tle_member(const FRelation& F);
MembershipCheck tinf_member();
MembershipCheck fixpoint_member(const BitTable& f);  // T_f and T_g
MembershipCheck torb2_member();
MembershipCheck tleorb_member(const FRelation& F);
MembershipCheck tinfh_member(const HTable& h);
MembershipCheck tlen_member(unsigned n);

// Procedures over cubes. Inputs are checked against the theory's signature.
Spectrum teq_spectrum(const Cube& phi);
Cube teq_witness(const Cube& phi);
Verdict tle_decide(const Cube& phi, const FRelation& F);
bool tle_contains_finite(const Cube& phi, std::uint64_t k, const FRelation& F);
Verdict eq_decide(const Cube& phi);
Verdict tf_decide(const Cube& phi);
bool tf_member(const FiniteInterpretation& m, const BitTable& f);
Spectrum torb2_spectrum(const Cube& phi);
Verdict torb2_decide(const Cube& phi);
Spectrum torb2_spectrum(const Formula& phi);
Cube torb2_witness(const Cube& phi);
Verdict tleorb_decide(const Cube& phi, const FRelation& F);
Verdict tinfh_decide(const Cube& phi);
Verdict tinfh_infinitely_decidable(const Cube& phi);
Spectrum tlen_spectrum(const Cube& phi, unsigned n);

TheoryHandle make_teq();
TheoryHandle make_tle(const FRelation& F);
TheoryHandle make_tinf();
TheoryHandle make_tf(const FTable& f);
TheoryHandle make_tg(const GTable& g);
TheoryHandle make_torb2();
TheoryHandle make_tleorb(const FRelation& F);
TheoryHandle make_tinfh(const HTable& h);
TheoryHandle make_tlen(unsigned n);

/// teq, tle, tinf, tf, tg, torb2, tleorb, tinfh, tlen:<n>
TheoryHandle theory_by_name(const std::string& name, const TheoryParams& params = TheoryParams::standard());
std::vector<std::string> theory_names();

}  // namespace tcomb
