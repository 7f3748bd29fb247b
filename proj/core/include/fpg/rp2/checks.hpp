#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/wp.hpp"

namespace fpg::rp2 {

struct CheckResult {
  bool pass = false;
  std::vector<std::string> lines;

  void note(std::string s) { lines.push_back(std::move(s)); }
  std::string details() const;
};

// Gamma2(B_n) by RS over {1, s1, s1 r1, s1 r1 s1}.
SubgroupPresentation gamma2_rs(int n);
// The same presentation with generators renamed X2 ... D4 (n = 4).
Presentation gamma2_b4_computed_letters();

// 8n-7 generators and relator-by-relator agreement with the literal families.
CheckResult fullpres_check(int n);
// The computed letter presentation against the listed 64 relators; listed
// relators that are not relations of Gamma2(B_4) are certified as such.
CheckResult letter_list_check();
// b^3 = r3 r2 r1 and b^4 rewrites to C1 B4 A1 C4 Y1 X2.
CheckResult b4_power_check();
// The generating set of K = ker(tau, alpha) in B_4.
CheckResult gensk_check();

struct PhiReport {
  CheckResult check;
  std::size_t kernel_generators = 0;
  AbelianInvariants via_phi;
  AbelianInvariants via_series;
};
// phi: Gamma2(B_4) -> L is a surjective homomorphism whose kernel agrees
// with the third derived subgroup: same index and abelian invariants.
PhiReport phi_check();

struct IdentityCheck {
  std::string name;
  std::string group;
  std::string lhs, rhs;
  TrivialityVerdict verdict;
};
struct IdentitySpec {
  std::string name;
  int n;  // checked in bn:n
  std::string lhs, rhs;
};
// Braid identities in named-element notation, fixed order.
std::vector<IdentitySpec> const& identity_specs();
IdentityCheck check_identity_spec(GroupRegistry const& reg, IdentitySpec const& spec);

// Every identity whose group is registered.
std::vector<IdentityCheck> consistency_identities(GroupRegistry const& reg);

}  // namespace fpg::rp2
