#include <catch_amalgamated.hpp>

#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/registry.hpp"
#include "fpg/wp.hpp"

using namespace fpg;

namespace {

GroupRegistry const& registry() {
  static auto const reg = rp2::build_registry({.max_strands = 4});
  return reg;
}

}  // namespace

TEST_CASE("completion for a cyclic group of order 2", "[wp]") {
  Presentation p({"x"}, {"x^2"});
  auto rws = knuth_bendix(p);
  CHECK(rws.completed());
  CHECK(rws.rules().size() >= 1);
  CHECK(rws.rules().size() <= 2);
  CHECK(rws.count_normal_forms(100) == std::optional<std::size_t>(2));
  CHECK(rws.normal_form(p.word("x^-1")).str() == "x");
  CHECK(rws.normal_form(p.word("x^5")).str() == "x");
}

TEST_CASE("completion for Q8 has eight normal forms", "[wp]") {
  Presentation q8({"x", "y"}, {"x^2 y^-2", "y x y^-1 x"});
  auto rws = knuth_bendix(q8);
  REQUIRE(rws.completed());
  CHECK(rws.count_normal_forms(1000) == std::optional<std::size_t>(8));
  // every rule strictly decreases in shortlex
  for (auto const& [lhs, rhs] : rws.rules())
    CHECK((rhs.size() < lhs.size() || (rhs.size() == lhs.size() && rhs < lhs)));
}

TEST_CASE("completion of B3 either caps or leaves infinitely many normal forms", "[wp]") {
  auto rws = knuth_bendix(rp2::braid_presentation(3), {.max_rules = 500, .max_lhs = 20});
  if (rws.completed()) {
    auto g = rws.growth(8);
    CHECK(g.back() > 0);
  } else {
    CHECK(rws.status() == RewritingSystem::Status::Capped);
  }
}

TEST_CASE("finite model groups complete with the right order", "[wp]") {
  for (auto [name, order] : {std::pair{"Q8", 8}, {"Q16", 16}, {"D12", 12}, {"A4", 12}, {"L", 48}}) {
    auto rws = knuth_bendix(group_model(name).presentation);
    INFO(name);
    REQUIRE(rws.completed());
    CHECK(rws.count_normal_forms(10000) == std::optional<std::size_t>(order));
  }
}

TEST_CASE("identity verdicts in B3", "[wp]") {
  auto const& reg = registry();
  auto const& p = reg.get("bn:3").presentation;
  auto v = check_identity(reg, "bn:3", p.word("s1 s2 s1"), p.word("s2 s1 s2"));
  CHECK(v.kind == TrivialityVerdict::Kind::ProvedTrivial);

  auto r = check_identity(reg, "bn:3", p.word("s1"), p.identity());
  CHECK(r.refuted());
  CHECK_FALSE(r.witness.empty());

  rp2::BraidGroup b3(3);
  auto x = b3.expr("x"), z1 = b3.expr("z1");
  auto c = check_identity(reg, "bn:3", x * z1 * x.inverse(), z1.inverse());
  CHECK_FALSE(c.refuted());
  CHECK(c.quotients_checked.size() >= 4);

  // direct evaluation in the order 192 quotient
  auto const& qs = reg.get("bn:3").quotients;
  auto q192 = std::find_if(qs.begin(), qs.end(), [](Quotient const& q) { return q.table->size() == 192; });
  REQUIRE(q192 != qs.end());
  auto lhs = x * z1 * x.inverse();
  for (Coset s = 0; s < 192; ++s)
    CHECK(q192->table->trace(s, lhs.letters()) == q192->table->trace(s, z1.inverse().letters()));

  CHECK_THROWS_AS(check_identity(reg, "bn:9", p.identity(), p.identity()), UnknownGroup);
}

TEST_CASE("free equality is a proof", "[wp]") {
  auto const& reg = registry();
  auto const& p = reg.get("bn:4").presentation;
  auto v = check_identity(reg, "bn:4", p.word("s1 s2 s2^-1"), p.word("s1"));
  CHECK(v.kind == TrivialityVerdict::Kind::ProvedTrivial);
}

TEST_CASE("every registered relator is proved trivial", "[wp]") {
  auto const& reg = registry();
  for (auto const& id : reg.ids()) {
    auto const& g = reg.get(id);
    for (auto const& rel : g.presentation.relators()) {
      INFO(id << " " << rel.str());
      CHECK(check_identity(g, rel, g.presentation.identity()).kind ==
            TrivialityVerdict::Kind::ProvedTrivial);
    }
  }
}

TEST_CASE("quotient evaluation is multiplicative", "[wp]") {
  auto const& g = registry().get("bn:4");
  auto const& p = g.presentation;
  auto u = p.word("s1 r2 s3^-1 r4"), v = p.word("r1^-1 s2 s2 r3");
  for (auto const& q : g.quotients) {
    auto const& t = *q.table;
    for (Coset c = 0; c < t.size(); ++c)
      CHECK(t.trace(c, (u * v).letters()) == t.trace(t.trace(c, u.letters()), v.letters()));
  }
}
