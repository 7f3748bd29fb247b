#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/word.hpp"

namespace fpg::rp2 {

// Van Buskirk's presentation of the braid group of the projective plane on
// n strands: generators s1..s(n-1), r1..rn. n = 1 gives <r1 | r1^2>.
// Throws InvalidStrandCount for n < 1.
Presentation braid_presentation(int n);

// Relator count of braid_presentation(n) by family.
std::size_t braid_relator_count(int n);

class BraidGroup {
 public:
  explicit BraidGroup(int n);

  int n() const noexcept { return n_; }
  Presentation const& presentation() const noexcept { return p_; }
  AlphabetPtr const& alphabet() const noexcept { return p_.alphabet(); }

  Word sigma(int i) const;
  Word rho(int j) const;
  // s_(j-1) ... s_(i+1) s_i^2 s_(i+1)^-1 ... s_(j-1)^-1
  Word pure(int i, int j) const;
  // r_n s_(n-1) ... s_1
  Word a() const;
  // r_(n-1) s_(n-2) ... s_1
  Word b() const;
  // half twist (s1 ... s_(n-1)) (s1 ... s_(n-2)) ... (s1)
  Word garside() const;
  Word full_twist() const;

  // Named elements: s<i>, r<j>, B<ij>, a, b, Delta, Delta2; for n >= 3 also
  // x, y, z1, z2, z3, u (the Gamma2(B3) dictionary, computed in B_n).
  std::optional<Word> element(std::string_view name) const;
  // Product of named elements and generators, e.g. "a^3 B12^-1 r3".
  Word expr(std::string_view text) const;

  // sigma_i -> (i, i+1), rho_j -> 1.
  PermHom permutation_hom() const;
  // Onto Z2 + Z2 (sigma-part, rho-part), regular representation of degree 4.
  PermHom abelianization_hom() const;
  // (permutation, abelianization): kernel is P_n intersected with Gamma2.
  PermHom pure_commutator_hom() const;

  // {1, s1, s1 r1, s1 r1 s1}, n >= 2.
  std::vector<Word> gamma2_transversal() const;

 private:
  int n_;
  Presentation p_;
};

// Names of the Gamma2 generators: family f in 0..3 is the transversal
// position of the starting coset; sigma families alpha beta gamma tau,
// rho families eta kappa theta lambda.
std::string gamma2_generator_name(bool is_rho, int index, int family);

// Literal generator/relator families for Gamma2(B_n), n >= 3, with
// alpha1 = gamma1 = kappa1 = 1.
Presentation gamma2_presentation_literal(int n);

// Sends each Schreier generator g@c of an RS presentation of Gamma2(B_n)
// built on gamma2_transversal() to its Greek name.
GeneratorMap gamma2_rs_naming(SubgroupPresentation const& rs, int n);

// Gamma2(B_4) on the letters X Y Z (sigma1..3) and A B C D (rho1..4) with
// numeric suffix family + 1: the explicit 64-relator list.
Presentation gamma2_b4_letter_presentation();
// Greek names (n = 4) -> letter names.
GeneratorMap gamma2_b4_greek_to_letters();
// Letter generator -> word in B_4.
GeneratorMap gamma2_b4_letter_words();

}  // namespace fpg::rp2
