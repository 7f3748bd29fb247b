#pragma once

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg::rp2 {

// (F3 x| Q8) x| Z3 on x, y, z1, z2, z3, u: Q8 relators, u^3 and the eleven
// conjugation actions.
Presentation m3_presentation();

// Partial abelianization of Gamma2(B_4) on Y1, Y3, Z1, Z3, A, C, D.
Presentation lambda_presentation();

// The map Gamma2(B_4) -> L on the letter generators X2 ... D4.
GeneratorMap phi_to_l();

// Lambda -> L agreeing with phi_to_l on the surviving letters
// (A = A1, C = C1, D = D1).
GeneratorMap lambda_to_l();

}  // namespace fpg::rp2
