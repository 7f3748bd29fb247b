#include <catch_amalgamated.hpp>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/presentation.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/series.hpp"

using namespace fpg;

TEST_CASE("presentation text round trip", "[presentation]") {
  auto p = Presentation::parse(
      "# two generators\n"
      "gens: s1 s2\n"
      "rel: s1 s2 s1 s2^-1 s1^-1 s2^-1\n"
      "rel: s1^3\n");
  REQUIRE(p.generator_count() == 2);
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[1].str() == "s1^3");
  auto q = Presentation::parse(p.text());
  CHECK(q.text() == p.text());
  CHECK_THROWS_AS(Presentation::parse("rel: x\n"), ParseError);
  CHECK_THROWS_AS(Presentation::parse("gens: x\nrel: y\n"), UnknownGenerator);
}

TEST_CASE("relators are stored cyclically reduced", "[presentation]") {
  Presentation p({"x", "y"}, {"y x y^-1", "x x^-1"});
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0].str() == "x");
}

TEST_CASE("the permutation representation of B3 satisfies every relator", "[presentation]") {
  rp2::BraidGroup b3(3);
  auto v = check_homomorphism(b3.permutation_hom());
  CHECK(v.size() == 8);
  CHECK(all_trivial(v));
}

TEST_CASE("the trivial map to Z2 is a homomorphism", "[presentation]") {
  auto b4 = rp2::braid_presentation(4);
  PermHom h{b4, std::vector<Permutation>(b4.generator_count(), Permutation::identity(2))};
  auto v = check_homomorphism(h);
  CHECK(v.size() == b4.relators().size());
  CHECK(all_trivial(v));
}

TEST_CASE("a non-homomorphism is reported relator by relator", "[presentation]") {
  Presentation p({"x"}, {"x^2"});
  PermHom h{p, {Permutation::cycle(3, std::vector<Point>{0, 1, 2})}};
  auto v = check_homomorphism(h);
  REQUIRE(v.size() == 1);
  CHECK_FALSE(v[0].trivial);
}

TEST_CASE("phi sends every relator of the computed Gamma2(B4) presentation to 1 in L",
          "[presentation]") {
  auto src = rp2::gamma2_b4_computed_letters();
  auto l = group_model("L").presentation;
  auto table = std::make_shared<CosetTable const>(todd_coxeter(l, {}));
  REQUIRE(table->size() == 48);
  CosetTableDecider decider(table);
  GroupHom h{src, l, rp2::phi_to_l()};
  auto v = check_homomorphism(h, &decider);
  CHECK(v.size() == src.relators().size());
  CHECK(all_trivial(v));
  CHECK_THROWS_AS(check_homomorphism(h, nullptr), OracleUnavailable);
}

TEST_CASE("coset table decider agrees with direct permutation evaluation", "[presentation]") {
  rp2::BraidGroup b3(3);
  auto h = b3.permutation_hom();
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(h));
  CosetTableDecider decider(table);
  for (auto w : {"s1 s2 s1 s2^-1 s1^-1 s2^-1", "s1^2", "s1 s2", "r1 r2 r3", "s1 r1 s1^-1"}) {
    auto word = b3.presentation().word(w);
    CHECK(decider.is_trivial(word) == h.evaluate(word).is_identity());
  }
}

TEST_CASE("Tietze elimination", "[presentation][tietze]") {
  Presentation p({"x", "y"}, {"y x^-1"});
  auto t = tietze_simplify(p);
  CHECK(t.presentation.generator_count() == 1);
  CHECK(t.presentation.relators().empty());
  auto x = t.presentation.generator(0);
  CHECK(t.dictionary.image(0) == x);
  CHECK(t.dictionary.image(1) == x);

  Presentation q({"x"}, {"x^2", "x^3"});
  CHECK(abelian_invariants(tietze_simplify(q).presentation) == abelian_invariants(q));
  CHECK(abelian_invariants(q).is_trivial());
}

TEST_CASE("Tietze keeps the invariants of the Gamma2(B3) presentation", "[presentation][tietze]") {
  auto rs = commutator_subgroup(rp2::braid_presentation(3));
  auto before = abelian_invariants(rs.presentation);
  auto after = tietze_simplify(rs.presentation);
  CHECK(before.str() == "(0,[3])");
  CHECK(abelian_invariants(after.presentation) == before);
  CHECK(after.presentation.generator_count() <= rs.presentation.generator_count());
}

TEST_CASE("Tietze keeps the invariants of random presentations", "[presentation][tietze][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen(0, 5), len(1, 8), count(1, 4);
  auto a = make_alphabet({"a", "b", "c"});
  for (int i = 0; i < 60; ++i) {
    std::vector<Word> rels;
    int k = count(rng);
    for (int r = 0; r < k; ++r) {
      Letters raw;
      int n = len(rng);
      for (int j = 0; j < n; ++j) raw.push_back(Letter::from_column(static_cast<std::uint32_t>(gen(rng))));
      rels.push_back(free_reduce(a, raw));
    }
    Presentation p(a, rels);
    auto t = tietze_simplify(p);
    CHECK(abelian_invariants(t.presentation) == abelian_invariants(p));
    // the dictionary images satisfy the old relators in the new group's abelianization
    auto m = abelianization_map(t.presentation);
    for (auto const& rel : p.relators()) {
      auto img = m.evaluate(substitute(t.dictionary, rel));
      for (auto const& c : img) CHECK(c == 0);
    }
  }
}

TEST_CASE("abelianized relation matrix holds exponent sums", "[presentation]") {
  Presentation p({"x"}, {"x^2"});
  auto m = abelianized_relation_matrix(p);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0) == 2);

  auto b2 = rp2::braid_presentation(2);
  auto m2 = abelianized_relation_matrix(b2);
  CHECK(m2.cols() == 3);
  CHECK(invariants_of_relation_matrix(m2).str() == "(0,[2,2])");

  // every row against a letter count done here
  auto b3 = rp2::braid_presentation(3);
  auto m3 = abelianized_relation_matrix(b3);
  REQUIRE(m3.rows() == b3.relators().size());
  for (std::size_t r = 0; r < b3.relators().size(); ++r) {
    std::vector<long> sums(b3.generator_count(), 0);
    for (auto l : b3.relators()[r].letters()) sums[l.gen()] += l.is_inverse() ? -1 : 1;
    for (std::size_t g = 0; g < sums.size(); ++g) CHECK(m3.at(r, g) == sums[g]);
  }
}
