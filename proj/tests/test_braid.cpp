#include <catch_amalgamated.hpp>

#include "fpg/abelian.hpp"
#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/rp2/registry.hpp"

using namespace fpg;

namespace {

// relator families counted one by one
std::size_t family_count(int n) {
  std::size_t far = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) ++far;
  std::size_t braid = n >= 3 ? static_cast<std::size_t>(n - 2) : 0;
  std::size_t sigma_rho = 0;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) ++sigma_rho;
  return far + braid + sigma_rho + static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(n - 1) + 1;
}

std::size_t perm_order(Permutation const& p) { return p.order(); }

Permutation image(CosetTable const& t, Word const& w) {
  std::vector<Point> v(t.size());
  for (Coset c = 0; c < t.size(); ++c) v[c] = t.trace(c, w.letters());
  return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("generator and relator counts", "[braid]") {
  auto b3 = rp2::braid_presentation(3);
  CHECK(b3.generator_count() == 5);
  CHECK(b3.relators().size() == 8);
  auto b4 = rp2::braid_presentation(4);
  CHECK(b4.generator_count() == 7);
  CHECK(b4.relators().size() == 16);
  for (int n = 2; n <= 6; ++n) {
    auto p = rp2::braid_presentation(n);
    CHECK(p.generator_count() == static_cast<std::size_t>(2 * n - 1));
    CHECK(p.relators().size() == family_count(n));
    CHECK(rp2::braid_relator_count(n) == family_count(n));
  }
}

TEST_CASE("one strand gives Z2", "[braid]") {
  auto b1 = rp2::braid_presentation(1);
  CHECK(b1.text() == "gens: r1\nrel: r1^2\n");
  CHECK(abelian_invariants(b1).str() == "(0,[2])");
  CHECK_THROWS_AS(rp2::braid_presentation(0), InvalidStrandCount);
  CHECK_THROWS_AS(rp2::BraidGroup(-1), InvalidStrandCount);
}

TEST_CASE("named elements", "[braid]") {
  rp2::BraidGroup b4(4);
  CHECK(b4.pure(1, 2).str() == "s1^2");
  CHECK(b4.pure(1, 3).str() == "s2 s1^2 s2^-1");
  CHECK(b4.a().str() == "r4 s3 s2 s1");
  CHECK(b4.b().str() == "r3 s2 s1");
  CHECK(b4.expr("B14") == b4.pure(1, 4));
  CHECK(b4.expr("a^2 r1^-1") == b4.a().pow(2) * b4.rho(1).inverse());
  rp2::BraidGroup b3(3);
  CHECK(b3.expr("x").str() == "r2 r1");
  CHECK(b3.expr("z1").str() == "r3^2");
  CHECK(b3.expr("u") == (b3.rho(3) * b3.sigma(2) * b3.sigma(1)).pow(4));
  CHECK(b3.garside().str() == "s1 s2 s1");
  CHECK_THROWS(b3.expr("nope"));
}

TEST_CASE("Gamma2 literal families", "[braid]") {
  auto g3 = rp2::gamma2_presentation_literal(3);
  CHECK(g3.generator_count() == 17);
  CHECK(g3.relators().size() == 32);
  auto g4 = rp2::gamma2_presentation_literal(4);
  CHECK(g4.generator_count() == 25);
  CHECK(g4.relators().size() == 64);
  auto g5 = rp2::gamma2_presentation_literal(5);
  CHECK(g5.generator_count() == 33);
  CHECK(abelian_invariants(g5).is_trivial());
  CHECK_THROWS(rp2::gamma2_presentation_literal(2));
}

TEST_CASE("B2 is Q16 with a unique involution, the full twist", "[braid]") {
  rp2::BraidGroup b2(2);
  auto t = todd_coxeter(b2.presentation(), {});
  REQUIRE(t.size() == 16);
  CHECK(perm_order(image(t, b2.a())) == 8);
  auto g = permutation_group(t);
  std::size_t involutions = 0;
  for (auto const& e : g.elements()) involutions += e.order() == 2;
  CHECK(involutions == 1);
  CHECK(image(t, b2.full_twist()).order() == 2);
}

TEST_CASE("orders of a and b divide 4n and 4(n-1) in every quotient", "[braid]") {
  auto reg = rp2::build_registry({.max_strands = 4, .rewriting = false});
  for (int n = 2; n <= 4; ++n) {
    rp2::BraidGroup bg(n);
    for (auto const& q : reg.get("bn:" + std::to_string(n)).quotients) {
      INFO("n=" << n << " " << q.name);
      CHECK((4 * n) % image(*q.table, bg.a()).order() == 0);
      CHECK((4 * (n - 1)) % image(*q.table, bg.b()).order() == 0);
    }
  }
}

TEST_CASE("identities hold in every registered quotient", "[braid]") {
  auto reg = rp2::build_registry({.max_strands = 4});
  auto checks = rp2::consistency_identities(reg);
  CHECK(checks.size() >= 10);
  for (auto const& c : checks) {
    INFO(c.name << ": " << c.lhs << " = " << c.rhs << " -> " << c.verdict.str());
    CHECK_FALSE(c.verdict.refuted());
  }
}

TEST_CASE("membership in K", "[braid]") {
  auto r = rp2::gensk_check();
  INFO(r.details());
  CHECK(r.pass);
}

TEST_CASE("powers of b", "[braid]") {
  auto r = rp2::b4_power_check();
  INFO(r.details());
  CHECK(r.pass);
}

TEST_CASE("registry ids", "[braid]") {
  auto reg = rp2::build_registry({.rewriting = false});
  for (auto id : {"bn:2", "bn:3", "bn:4", "bn:5", "gamma2:3", "gamma2:4", "gamma2:5", "L", "Lambda",
                  "M3", "Q8", "Q16", "D12", "Dic12", "A4"})
    CHECK(reg.has(id));
  CHECK_THROWS_AS(rp2::group_presentation("bn:x"), UnknownGroup);
  CHECK_THROWS_AS(rp2::group_presentation("gamma2:2"), UnknownGroup);
  CHECK(rp2::group_presentation("Q8").generator_count() == 2);
}
