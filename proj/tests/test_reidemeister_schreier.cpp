#include <catch_amalgamated.hpp>

#include <set>

#include "fpg/abelian.hpp"
#include "fpg/errors.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/rp2/actions.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/rp2/registry.hpp"
#include "fpg/series.hpp"

using namespace fpg;

namespace {

GeneratorMap dictionary_map(SubgroupPresentation const& rs) {
  GeneratorMap m(rs.presentation.alphabet(), rs.ambient.alphabet());
  for (std::size_t x = 0; x < rs.dictionary().size(); ++x) m.set(x, rs.dictionary()[x]);
  return m;
}

}  // namespace

TEST_CASE("Gamma2(B_n) has 8n-7 Schreier generators", "[rs]") {
  for (int n : {3, 4, 5}) {
    auto rs = rp2::gamma2_rs(n);
    CHECK(rs.presentation.generator_count() == static_cast<std::size_t>(8 * n - 7));
    auto amb = rp2::braid_presentation(n);
    CHECK(rs.raw_relator_count == 4 * amb.relators().size());
    // index * gens - (index - 1)
    CHECK(rs.presentation.generator_count() == 4 * amb.generator_count() - 3);
  }
}

TEST_CASE("an index 2 subgroup of a free group of rank 2", "[rs]") {
  Presentation f2({"r3", "B23"}, {});
  PermHom h{f2, {Permutation(std::vector<Point>{1, 0}), Permutation::identity(2)}};
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(h));
  auto rs = subgroup_presentation(f2, table, {f2.identity(), f2.word("r3")});
  CHECK(rs.presentation.generator_count() == 3);
  CHECK(rs.presentation.relators().empty());
  std::set<std::string> words;
  for (auto const& w : rs.dictionary()) words.insert(w.str());
  CHECK(words == std::set<std::string>{"r3^2", "B23", "r3 B23 r3^-1"});
  for (auto const& w : rs.dictionary()) CHECK(table->contains(w));
}

TEST_CASE("the kernel of F5 onto Z2^5 is free of rank 129", "[rs]") {
  Presentation f5(rp2::e_alphabet());
  PermHom h{f5, {}};
  for (std::uint32_t i = 0; i < 5; ++i) {
    std::vector<Point> img(32);
    for (Point x = 0; x < 32; ++x) img[x] = x ^ (1u << i);
    h.images.emplace_back(std::move(img));
  }
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(h));
  auto tau = f5.word(
      "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1 e5 "
      "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1");
  std::vector<Word> trans;
  for (std::size_t i = 0; i <= tau.size(); ++i)
    trans.emplace_back(f5.alphabet(), Letters(tau.letters().begin(), tau.letters().begin() + static_cast<long>(i)));
  auto rs = subgroup_presentation(f5, table, trans);
  CHECK(rs.presentation.generator_count() == 129);
  CHECK(rs.presentation.generator_count() == 32 * (5 - 1) + 1);
  CHECK(rs.presentation.relators().empty());
}

TEST_CASE("invalid transversals are refused", "[rs]") {
  rp2::BraidGroup b3(3);
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(b3.abelianization_hom()));
  auto const& p = b3.presentation();
  CHECK_THROWS_AS(subgroup_presentation(p, table, {p.identity(), p.word("s1"), p.word("s1^2"), p.word("s1 r1")}),
                  InvalidTransversal);
}

TEST_CASE("Schreier generators are named by generator and coset", "[rs]") {
  auto rs = rp2::gamma2_rs(3);
  for (auto const& name : rs.presentation.alphabet()->names()) CHECK(name.find('@') != std::string::npos);
  CHECK(rs.presentation.alphabet()->find("s2@1"));
}

TEST_CASE("relators of Gamma2(B3) are relations of B3", "[rs][property]") {
  auto reg = rp2::build_registry({.max_strands = 3});
  auto const& b3 = reg.get("bn:3");
  auto rs = rp2::gamma2_rs(3);
  auto dict = dictionary_map(rs);
  for (auto const& r : rs.presentation.relators()) {
    auto amb = substitute(dict, r);
    for (Coset c = 0; c < rs.table().size(); ++c) CHECK(rs.table().trace(c, amb.letters()) == c);
    for (auto const& q : b3.quotients) CHECK(q.kills(amb));
  }
}

TEST_CASE("invariants do not depend on the transversal", "[rs]") {
  rp2::BraidGroup b3(3);
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(b3.abelianization_hom()));
  auto a = subgroup_presentation(b3.presentation(), table, b3.gamma2_transversal());
  auto b = subgroup_presentation(b3.presentation(), table, schreier_transversal(*table));
  CHECK(abelian_invariants(a.presentation) == abelian_invariants(b.presentation));
  CHECK(abelian_invariants(a.presentation).str() == "(0,[3])");
}

TEST_CASE("matching presentations up to rotation and inversion", "[rs][match]") {
  Presentation a({"x", "y"}, {"x y x^-1 y^-1", "x^3"});
  GeneratorMap id(a.alphabet(), a.alphabet());
  id.set("x", "x").set("y", "y");
  CHECK(match_presentations(a, a, id).pass);

  Presentation b({"x", "y"}, {"y x^-1 y^-1 x", "x^-3"});
  auto r = match_presentations(a, b, id);
  CHECK(r.pass);
  CHECK(r.matched_a == 2);

  Presentation c({"x", "y"}, {"x y x^-1 y^-1", "x^4"});
  auto rc = match_presentations(a, c, id);
  CHECK_FALSE(rc.pass);
  REQUIRE(rc.unmatched_a.size() == 1);
  CHECK(rc.unmatched_a[0].str() == "x^3");
}

TEST_CASE("Gamma2(B_n) agrees with the literal relator families", "[rs][match]") {
  for (int n : {3, 4, 5}) {
    auto r = rp2::fullpres_check(n);
    INFO(r.details());
    CHECK(r.pass);
  }
}

TEST_CASE("the 64 listed letter relators against the computed ones", "[rs][match]") {
  auto r = rp2::letter_list_check();
  INFO(r.details());
  // one listed relator carries an extra X2 and is certified not to be a relation
  CHECK_FALSE(r.pass);
  CHECK(r.details().find("63 of 64") != std::string::npos);
  CHECK(r.details().find("not a relation") != std::string::npos);
}
