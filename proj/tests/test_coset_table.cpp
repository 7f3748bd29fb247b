#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/rp2/actions.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/series.hpp"
#include "fpg/table_cache.hpp"

using namespace fpg;

namespace {

bool relators_act_trivially(CosetTable const& t, Presentation const& p) {
  for (Coset c = 0; c < t.size(); ++c)
    for (auto const& r : p.relators())
      if (t.trace(c, r.letters()) != c) return false;
  return true;
}

PermHom z2_power_hom(Presentation const& p) {
  PermHom h{p, {}};
  std::size_t k = p.generator_count();
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Point> img(std::size_t{1} << k);
    for (Point x = 0; x < img.size(); ++x) img[x] = x ^ (1u << i);
    h.images.emplace_back(std::move(img));
  }
  return h;
}

std::vector<Word> prefixes(Word const& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= w.size(); ++i)
    out.emplace_back(w.alphabet(), Letters(w.letters().begin(), w.letters().begin() + static_cast<long>(i)));
  return out;
}

}  // namespace

TEST_CASE("enumeration over the trivial subgroup", "[coset]") {
  auto b2 = rp2::braid_presentation(2);
  auto t = todd_coxeter(b2, {});
  CHECK(t.size() == 16);
  CHECK(t.is_standardized());
  CHECK(relators_act_trivially(t, b2));
  CHECK(permutation_group(t).order() == 16);

  auto l = todd_coxeter(group_model("L").presentation, {});
  CHECK(l.size() == 48);
}

TEST_CASE("the pure braid subgroup of B3 has index 6", "[coset]") {
  rp2::BraidGroup b3(3);
  std::vector<Word> gens{b3.pure(1, 2), b3.pure(1, 3), b3.pure(2, 3), b3.rho(1), b3.rho(2), b3.rho(3)};
  auto t = todd_coxeter(b3.presentation(), gens);
  CHECK(t.size() == 6);
  for (auto const& g : gens) CHECK(t.contains(g));
  CHECK_FALSE(t.contains(b3.sigma(1)));
  // same standardized table as the kernel of the permutation map
  CHECK(t.standardized() == kernel_coset_table(b3.permutation_hom()).standardized());
}

TEST_CASE("enumeration stops at the coset limit", "[coset]") {
  Presentation free2({"x", "y"}, {});
  CHECK_THROWS_AS(todd_coxeter(free2, {}, EnumerationLimits{1000, 100000}), EnumerationExceeded);
}

TEST_CASE("enumeration is deterministic", "[coset]") {
  rp2::BraidGroup b3(3);
  std::vector<Word> sub{b3.pure(1, 2), b3.rho(1), b3.rho(2), b3.rho(3), b3.pure(2, 3)};
  CHECK(todd_coxeter(b3.presentation(), sub) == todd_coxeter(b3.presentation(), sub));
  auto b2 = rp2::braid_presentation(2);
  CHECK(todd_coxeter(b2, {}) == todd_coxeter(b2, {}));
}

TEST_CASE("kernel tables of finite images", "[coset]") {
  rp2::BraidGroup b3(3);
  auto gamma2 = kernel_coset_table(b3.abelianization_hom());
  CHECK(gamma2.size() == 4);
  CHECK(relators_act_trivially(gamma2, b3.presentation()));

  Presentation f5(rp2::e_alphabet());
  auto k = kernel_coset_table(z2_power_hom(f5));
  CHECK(k.size() == 32);

  Presentation p({"x"}, {"x^2"});
  PermHom bad{p, {Permutation::cycle(3, std::vector<Point>{0, 1, 2})}};
  CHECK_THROWS_AS(kernel_coset_table(bad), NotAHomomorphism);
}

TEST_CASE("phi has a kernel of index 48", "[coset]") {
  auto src = rp2::gamma2_b4_computed_letters();
  auto phi = rp2::phi_to_l();
  auto l = todd_coxeter(group_model("L").presentation, {});
  PermHom h{src, {}};
  for (std::size_t g = 0; g < src.generator_count(); ++g) {
    auto p = Permutation::identity(l.size());
    for (auto x : phi.image(g).letters()) {
      auto q = l.permutation(x.gen());
      p = p * (x.is_inverse() ? q.inverse() : q);
    }
    h.images.push_back(p);
  }
  CHECK(kernel_coset_table(h).size() == 48);
}

TEST_CASE("Schreier transversals", "[coset]") {
  Presentation trivial({"x"}, {"x"});
  auto one = todd_coxeter(trivial, {});
  auto t1 = schreier_transversal(one);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].is_identity());

  rp2::BraidGroup b3(3);
  auto g2 = kernel_coset_table(b3.abelianization_hom());
  auto t = schreier_transversal(g2);
  REQUIRE(t.size() == 4);
  std::vector<bool> hit(4, false);
  for (auto const& w : t) hit.at(g2.trace(w)) = true;
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));

  Presentation f5(rp2::e_alphabet());
  auto k = kernel_coset_table(z2_power_hom(f5));
  auto t32 = schreier_transversal(k);
  CHECK(t32.size() == 32);
  CHECK(validate_transversal(k, t32).accepted);
}

TEST_CASE("validating candidate transversals", "[coset]") {
  rp2::BraidGroup b3(3);
  auto g2 = kernel_coset_table(b3.abelianization_hom());
  auto const& p = b3.presentation();
  CHECK(validate_transversal(g2, b3.gamma2_transversal()).accepted);

  auto bad = validate_transversal(g2, {p.identity(), p.word("s1"), p.word("s1^2"), p.word("s1 r1")});
  CHECK_FALSE(bad.accepted);
  CHECK_FALSE(bad.reason.empty());

  Presentation f5(rp2::e_alphabet());
  auto k = kernel_coset_table(z2_power_hom(f5));
  auto tau = f5.word(
      "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1 e5 "
      "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1");
  CHECK(validate_transversal(k, prefixes(tau)).accepted);
}

TEST_CASE("rewriting into Schreier generators", "[coset][rs]") {
  rp2::BraidGroup b3(3);
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(b3.abelianization_hom()));
  SchreierGenerators sch(table, b3.gamma2_transversal());
  for (std::size_t x = 0; x < sch.size(); ++x) {
    auto w = sch.ambient_word(x);
    CHECK(sch.rewrite(w) == Word::generator(sch.alphabet(), x));
  }
  CHECK_THROWS_AS(sch.rewrite(b3.sigma(1)), NotInSubgroup);

  // expanding the rewritten word gives back the original
  auto w = b3.presentation().word("s1 s2^-1 r1 s1 r2^-1 s2^-1");
  REQUIRE(table->contains(w));
  auto r = sch.rewrite(w);
  Letters expanded;
  for (auto l : r.letters()) {
    auto d = sch.ambient_word(l.gen());
    if (l.is_inverse()) d = d.inverse();
    for (auto x : d.letters()) expanded.push_back(x);
  }
  CHECK(free_reduce(b3.alphabet(), expanded) == w);
}

TEST_CASE("conjugates of Gamma2(B5) generators stay in the subgroup", "[coset][rs]") {
  rp2::BraidGroup b5(5);
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(b5.abelianization_hom()));
  SchreierGenerators sch(table, b5.gamma2_transversal());
  for (std::size_t g = 0; g < b5.presentation().generator_count(); ++g) {
    auto gw = b5.presentation().generator(g);
    for (std::size_t x = 0; x < sch.size(); ++x) {
      auto c = conjugate(gw, sch.ambient_word(x));
      REQUIRE(table->contains(c));
      CHECK_NOTHROW(sch.rewrite(c));
    }
  }
}

TEST_CASE("permutation groups of tables", "[coset]") {
  Presentation trivial({"x"}, {"x"});
  CHECK(permutation_group(todd_coxeter(trivial, {})).order() == 1);

  DerivedSeries ds(rp2::braid_presentation(3), 2);
  auto q = ds.quotient_table(2);
  CHECK(q.size() == 12);
  CHECK(permutation_group(q).order() == 12);
}

TEST_CASE("derived chain indices multiply", "[coset]") {
  DerivedSeries ds(rp2::braid_presentation(3), 3);
  REQUIRE(ds.stages().size() == 4);
  CHECK(ds.stage(1).step_index == 4);
  CHECK(ds.stage(2).step_index == 3);
  CHECK(ds.stage(3).step_index == 16);
  CHECK(ds.quotient_table(2).size() == 4 * 3);
  CHECK(ds.quotient_table(3).size() == 12 * 16);
}

TEST_CASE("coset tables round trip through the cache", "[coset][cache]") {
  auto dir = std::filesystem::temp_directory_path() / "fpg_test_cache";
  std::filesystem::remove_all(dir);
  TableCache cache(dir);
  auto b2 = rp2::braid_presentation(2);
  std::vector<Word> sub{b2.word("s1")};
  CHECK_FALSE(cache.load(b2, sub));

  auto t = cached_todd_coxeter(&cache, b2, sub);
  REQUIRE(std::filesystem::exists(cache.file_for(b2, sub)));
  auto back = cache.load(b2, sub);
  REQUIRE(back);
  CHECK(*back == t);

  // another presentation never picks the file up
  auto b3 = rp2::braid_presentation(3);
  CHECK(cache.file_for(b3, sub) != cache.file_for(b2, sub));
  CHECK(TableCache::presentation_hash(b2) != TableCache::presentation_hash(b3));

  // corrupt and stale files are ignored
  {
    std::ofstream out(cache.file_for(b2, sub), std::ios::trunc);
    out << "{\"schema_version\": 999}";
  }
  CHECK_FALSE(cache.load(b2, sub));
  {
    std::ofstream out(cache.file_for(b2, sub), std::ios::trunc);
    out << "not json";
  }
  CHECK_FALSE(cache.load(b2, sub));
  CHECK(cached_todd_coxeter(&cache, b2, sub) == t);
  CHECK(cache.load(b2, sub));
  std::filesystem::remove_all(dir);
}
