#include "fpg/rp2/models.hpp"

#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"

namespace fpg::rp2 {

Presentation m3_presentation() {
  return Presentation(
      {"x", "y", "z1", "z2", "z3", "u"},
      {"x^2 y^-2", "y x y^-1 x", "u^3",
       "x z1 x^-1 z1",
       "x z2 x^-1 z1^-1 z3 z1",
       "x z3 x^-1 z1^-1 z2 z1",
       "y z1 y^-1 z1^-1 z3^-1 z2^-1",
       "y z2 y^-1 z2",
       "y z3 y^-1 z2 z3 z2^-1",
       "u z1 u^-1 z1^-1 z3^-1 x^-2",
       "u z2 u^-1 z1 x^-2",
       "u z3 u^-1 z3 z1 z2 x^-2",
       "u x u^-1 y^-1 x^-1",
       "u y u^-1 x^-1"});
}

Presentation lambda_presentation() {
  std::vector<std::string> rels{
      "Y1^3", "Y3^3", "Y1 Z1 Y1 Z1 Y1 Z1", "Y3 Z3 Y3 Z3 Y3 Z3", "Z1^2", "Z3^2", "A^2", "C^2", "D^2",
      "A D^-1 C^-1", "A Y3^-1 Y1^-1", "A Z3^-1 Z1^-1", "C Y1^-1 Y3^-1",
      "Y1 D Y3 D", "Y3 Y1 Y3 Y1"};
  std::vector<std::string> comm{"A", "C", "D", "Z1", "Z3"};
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j)
      rels.push_back(comm[i] + " " + comm[j] + " " + comm[i] + "^-1 " + comm[j] + "^-1");
  return Presentation({"Y1", "Y3", "Z1", "Z3", "A", "C", "D"}, rels);
}

GeneratorMap phi_to_l() {
  auto letters = gamma2_b4_letter_presentation().alphabet();
  auto l = group_model("L").presentation.alphabet();
  GeneratorMap m(letters, l);
  for (auto g : {"X2", "X4", "A3", "B1", "B4"}) m.set(g, "1");
  for (auto g : {"A1", "A4", "B2", "B3"}) m.set(g, "w1 w3");
  for (auto g : {"C1", "C2", "C3", "C4"}) m.set(g, "w1 w2 w3 w4");
  for (auto g : {"D1", "D2", "D3", "D4"}) m.set(g, "w2 w4");
  m.set("Z1", "w1").set("Z2", "w1").set("Z3", "w3").set("Z4", "w3");
  m.set("Y1", "t").set("Y2", "t^2").set("Y3", "w1 w2 w3 w4 t^2").set("Y4", "w1 w3 t");
  return m;
}

GeneratorMap lambda_to_l() {
  auto l = group_model("L").presentation.alphabet();
  GeneratorMap m(lambda_presentation().alphabet(), l);
  m.set("Y1", "t").set("Y3", "w1 w2 w3 w4 t^2").set("Z1", "w1").set("Z3", "w3");
  m.set("A", "w1 w3").set("C", "w1 w2 w3 w4").set("D", "w2 w4");
  return m;
}

}  // namespace fpg::rp2
