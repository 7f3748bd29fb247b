#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/series.hpp"

using namespace fpg;

namespace {

Permutation perm(std::vector<Point> v) { return Permutation(std::move(v)); }

// symmetries of a hexagon
FiniteGroup d12() {
  return FiniteGroup({perm({1, 2, 3, 4, 5, 0}), perm({0, 5, 4, 3, 2, 1})});
}

FiniteGroup a4() { return FiniteGroup({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})}); }

FiniteGroup regular(std::string const& name) {
  return permutation_group(todd_coxeter(group_model(name).presentation, {}));
}

std::size_t order_of(Permutation const& p) {
  std::size_t k = 1;
  for (auto q = p; !q.is_identity(); q = q * p) ++k;
  return k;
}

}  // namespace

TEST_CASE("fingerprint of D12 against a direct count", "[group-id]") {
  auto g = d12();
  auto f = fingerprint(g);
  CHECK(f.order == 12);
  std::map<std::size_t, std::size_t> counts;
  for (auto const& e : g.elements()) ++counts[order_of(e)];
  CHECK(f.element_orders == counts);
  CHECK(counts[1] + counts[2] == 8);
  CHECK(f.abelianization.str() == "(0,[2,2])");
  CHECK(f.center_order == 2);
}

TEST_CASE("fingerprint of A4", "[group-id]") {
  auto f = fingerprint(a4());
  CHECK(f.order == 12);
  CHECK(f.abelianization.str() == "(0,[3])");
  CHECK(f.center_order == 1);
  CHECK(f.derived_length == 2);
}

TEST_CASE("Q16 has a unique involution", "[group-id]") {
  auto f = fingerprint(regular("Q16"));
  CHECK(f.order == 16);
  CHECK(f.element_orders.at(2) == 1);
}

TEST_CASE("fingerprints survive relabelling the points", "[group-id][property]") {
  std::mt19937_64 rng(3);
  for (auto name : {"D12", "A4", "Q16", "L", "Dic12"}) {
    auto g = regular(name);
    auto base = fingerprint(g);
    for (int i = 0; i < 5; ++i) {
      std::vector<Point> v(g.degree());
      std::iota(v.begin(), v.end(), 0);
      std::shuffle(v.begin(), v.end(), rng);
      Permutation c(v);
      std::vector<Permutation> gens;
      for (auto const& x : g.generators()) gens.push_back(c.inverse() * x * c);
      FiniteGroup h(gens);
      CHECK(fingerprint(h) == base);
      CHECK(identify(h).name == name);
    }
  }
}

TEST_CASE("identification by explicit isomorphism", "[group-id]") {
  auto q = identify(permutation_group(todd_coxeter(rp2::braid_presentation(2), {})));
  CHECK(q.name == "Q16");
  CHECK(q.exact);

  DerivedSeries b3(rp2::braid_presentation(3), 2);
  auto d = identify(permutation_group(b3.quotient_table(2)));
  CHECK(d.name == "D12");
  CHECK(d.exact);
  CHECK(identify(a4()).name == "A4");
  CHECK(identify(d12()).name == "D12");

  auto dic = regular("Dic12");
  CHECK(fingerprint(dic) != fingerprint(d12()));
  CHECK(fingerprint(a4()) != fingerprint(d12()));
  CHECK_FALSE(find_isomorphism(group_model("A4").presentation, d12()));
  CHECK_FALSE(find_isomorphism(group_model("Dic12").presentation, d12()));
  auto images = find_isomorphism(group_model("D12").presentation, d12());
  REQUIRE(images);
  CHECK(images->size() == 2);
}

TEST_CASE("the kernel of phi gives L", "[group-id]") {
  auto report = rp2::phi_check();
  INFO(report.check.details());
  CHECK(report.check.pass);
  DerivedSeries b4(rp2::braid_presentation(4), 3);
  auto l = identify(permutation_group(b4.relative_quotient_table(1, 3)));
  CHECK(l.name == "L");
  CHECK(l.exact);
}

TEST_CASE("the order 192 quotient is recognised by fingerprint only", "[group-id]") {
  DerivedSeries b3(rp2::braid_presentation(3), 3);
  auto g = permutation_group(b3.quotient_table(3));
  CHECK(g.order() == 192);
  auto id = identify(g);
  CHECK_FALSE(id.exact);
}

TEST_CASE("orders beyond the limit are refused", "[group-id]") {
  // S9 on 9 points
  FiniteGroup s9({perm({1, 2, 3, 4, 5, 6, 7, 8, 0}), perm({1, 0, 2, 3, 4, 5, 6, 7, 8})});
  CHECK_THROWS_AS(s9.order(), TooLarge);
}
