#pragma once

#include <string>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/word.hpp"

namespace fpg::rp2 {

// Generator images of an endomorphism of a free group.
struct ActionTable {
  std::string name;
  GeneratorMap images;  // source == target

  AlphabetPtr const& basis() const { return images.source(); }
};

// Homomorphic extension of the table, freely reduced. Throws
// UnmappedGenerator.
Word apply_action(ActionTable const& t, Word const& w);
// Composite t applied k times.
ActionTable power(ActionTable const& t, int k);
// Column j holds the exponent sums of the image of generator j.
IntegerMatrix induced_matrix(ActionTable const& t);

// F5 on B14, B24, R4sq (r4^2), R4B14 (r4 B14 r4^-1), R4B24.
AlphabetPtr f5_alphabet();
// F3 on B23, R3sq (r3^2), R3B23 (r3 B23 r3^-1).
AlphabetPtr f3_alphabet();
// F5 then F3.
AlphabetPtr f5f3_alphabet();
// e1 .. e5
AlphabetPtr e_alphabet();

// Conjugation by a^4 = r4 r3 r2 r1 on F5 x| F3.
ActionTable action_z4();
// Conjugation by B23, r3 B23 r3^-1 and r3^2 on F5.
ActionTable action_b23();
ActionTable action_r3b23();
ActionTable action_r3sq();
// Conjugation by r3^2 on the basis e1 .. e5.
ActionTable action_phi_e();

// Basis generators as words in B_4.
GeneratorMap f5f3_braid_words();
// F5 <-> e basis.
GeneratorMap f5_to_e();
GeneratorMap e_to_f5();

// The r3^2 action transported to the e basis equals action_phi_e letter for
// letter.
CheckResult phi_rho3_sq_check();

struct F129Report {
  CheckResult check;
  std::size_t cosets = 0;
  std::size_t basis_size = 0;
  std::string image_str;
};
// Schreier basis of the kernel of F5 -> Z2^5 from the prefixes of tau, and
// the abelianized image of tau5 e3 tau2^-1 under phi^2.
F129Report remark_f129_check();

}  // namespace fpg::rp2
