#include <catch_amalgamated.hpp>

#include <numeric>

#include "fpg/abelian.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/series.hpp"

using namespace fpg;

namespace {

std::vector<Integer> diag(IntegerMatrix const& m) { return smith_normal_form(m).diagonal; }

}  // namespace

TEST_CASE("Smith normal form of small matrices", "[abelian]") {
  CHECK(diag({{2, 0}, {0, 2}}) == std::vector<Integer>{2, 2});
  CHECK(diag({{2, 0}, {1, 2}}) == std::vector<Integer>{1, 4});
  CHECK(diag({{6, 4}, {4, 6}}) == std::vector<Integer>{2, 10});

  IntegerMatrix zero(3, 5);
  auto d = diag(zero);
  CHECK(std::all_of(d.begin(), d.end(), [](Integer const& x) { return x == 0; }));
  CHECK(invariants_of_relation_matrix(zero).free_rank == 5);
  CHECK(invariants_of_relation_matrix(zero).torsion.empty());
}

TEST_CASE("witnesses satisfy U M V = D", "[abelian]") {
  IntegerMatrix m{{2, 0}, {1, 2}};
  auto sf = smith_normal_form(m, true);
  REQUIRE(sf.left);
  REQUIRE(sf.right);
  IntegerMatrix d{{1, 0}, {0, 4}};
  CHECK(*sf.left * m * *sf.right == d);
  CHECK(abs(sf.left->determinant()) == 1);
  CHECK(abs(sf.right->determinant()) == 1);
  // d1 = gcd of entries, d1 d2 = |det|
  CHECK(sf.diagonal[0] == 1);
  CHECK(sf.diagonal[0] * sf.diagonal[1] == abs(m.determinant()));
}

TEST_CASE("large entries stay exact", "[abelian]") {
  IntegerMatrix m{{1000000007L, 0}, {0, 998244353L}};
  auto d = diag(m);
  CHECK(d[0] == 1);
  CHECK(d[1] == Integer(1000000007L) * Integer(998244353L));
}

TEST_CASE("invariants print as free rank and torsion", "[abelian]") {
  Presentation z2({"x"}, {"x^2"});
  CHECK(abelian_invariants(z2).str() == "(0,[2])");
  Presentation free({"x", "y"}, {});
  CHECK(abelian_invariants(free).str() == "(2,[])");
  Presentation mixed({"x", "y", "z"}, {"x^4 y^6"});
  CHECK(abelian_invariants(mixed).str() == "(2,[2])");
}

TEST_CASE("the braid groups of the projective plane abelianize to Z2 + Z2", "[abelian]") {
  for (int n = 2; n <= 5; ++n) CHECK(abelian_invariants(rp2::braid_presentation(n)).str() == "(0,[2,2])");
  CHECK(abelian_invariants(rp2::braid_presentation(1)).str() == "(0,[2])");
}

TEST_CASE("third derived subgroups of B3 and B4", "[abelian]") {
  DerivedSeries b3(rp2::braid_presentation(3), 3);
  CHECK(abelian_invariants(b3.stage(3).presentation).str() == "(9,[2])");
  DerivedSeries b4(rp2::braid_presentation(4), 3);
  CHECK(abelian_invariants(b4.stage(3).presentation).str() == "(0,[2,2,2,2,2,2,2,2,4])");
}

TEST_CASE("quotients by extra relations", "[abelian]") {
  auto rs = rp2::gamma2_rs(3);
  CHECK(quotient_with_extra_rows(rs.presentation, rs.presentation.relators()) ==
        abelian_invariants(rs.presentation));

  Presentation free({"x", "y"}, {});
  CHECK(quotient_with_extra_rows(free, {free.word("x^2"), free.word("y^3")}).str() == "(0,[6])");

  for (int n : {3, 4, 5}) CHECK(lower_central_step(rp2::gamma2_rs(n)).is_trivial());
  CHECK(abelian_invariants(rp2::gamma2_rs(5).presentation).is_trivial());
}

TEST_CASE("abelianization map coordinates", "[abelian]") {
  Presentation p({"x", "y"}, {"x^2", "y^4", "x y x^-1 y^-1"});
  auto m = abelianization_map(p);
  CHECK(m.invariants.str() == "(0,[2,4])");
  auto zero = m.evaluate(p.word("x^2 y^4"));
  CHECK(std::all_of(zero.begin(), zero.end(), [](Integer const& x) { return x == 0; }));
  auto v = m.evaluate(p.word("y"));
  CHECK_FALSE(std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; }));
  auto h = m.regular_hom(p);
  CHECK(h.degree() == 8);
  CHECK(all_trivial(check_homomorphism(h)));
}
