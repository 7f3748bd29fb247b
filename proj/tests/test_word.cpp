#include <catch_amalgamated.hpp>

#include <random>

#include "fpg/errors.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/word.hpp"

using namespace fpg;

namespace {

AlphabetPtr xy() { return make_alphabet({"x", "y"}); }

Letter x(bool inv = false) { return Letter(0, inv); }
Letter y(bool inv = false) { return Letter(1, inv); }

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs", "[word]") {
  auto a = xy();
  CHECK(free_reduce(a, Letters{x(), x(true)}).is_identity());
  CHECK(free_reduce(a, Letters{x(), y(), y(true), x()}) == Word::parse(a, "x^2"));

  auto b2 = rp2::braid_presentation(2).alphabet();
  auto w = Word::parse(b2, "r2 r1");
  Letters raw = w.letters();
  auto inv = w.inverse();
  for (auto l : inv.letters()) raw.push_back(l);
  CHECK(raw.size() == 4);
  CHECK(free_reduce(b2, raw).is_identity());
}

TEST_CASE("words over different alphabets do not mix", "[word]") {
  auto a = xy();
  auto b = make_alphabet({"p", "q"});
  CHECK_THROWS_AS(Word::parse(a, "x") * Word::parse(b, "p"), AlphabetMismatch);
  CHECK_THROWS_AS(commutator(Word::parse(a, "x"), Word::parse(b, "p")), AlphabetMismatch);
  // equal name lists are interchangeable
  CHECK_NOTHROW(Word::parse(a, "x") * Word::parse(xy(), "y"));
}

TEST_CASE("commutator is a b a^-1 b^-1 reduced", "[word]") {
  auto a = xy();
  auto wx = Word::parse(a, "x"), wy = Word::parse(a, "y");
  CHECK(commutator(wx, wx).is_identity());
  CHECK(commutator(wx, Word(a)).is_identity());
  CHECK(commutator(wx, wy).str() == "x y x^-1 y^-1");

  auto b2 = rp2::braid_presentation(2).alphabet();
  auto c = commutator(Word::parse(b2, "r2^-1"), Word::parse(b2, "r1^-1"));
  CHECK(c.str() == "r2^-1 r1^-1 r2 r1");
  CHECK_FALSE(c == Word::parse(b2, "s1^2"));
}

TEST_CASE("substitution applies a homomorphism of free groups", "[word]") {
  auto a = xy();
  GeneratorMap id(a, a);
  id.set("x", "x").set("y", "y");
  auto w = Word::parse(a, "x y^-2 x^3");
  CHECK(substitute(id, w) == w);

  GeneratorMap kill(a, a);
  kill.set("x", Word(a)).set("y", "y");
  CHECK(substitute(kill, Word::parse(a, "x^3")).is_identity());

  GeneratorMap partial(a, a);
  partial.set("x", "y");
  CHECK_THROWS_AS(substitute(partial, Word::parse(a, "x y")), UnmappedGenerator);

  auto phi = rp2::phi_to_l();
  auto y1 = Word::generator(phi.source(), "Y1");
  CHECK(substitute(phi, y1).str() == "t");
}

TEST_CASE("cyclic reduction splits off a conjugator", "[word]") {
  auto a = xy();
  auto r = cyclically_reduce(Word::parse(a, "x y x^-1"));
  CHECK(r.core.str() == "y");
  CHECK(r.conjugator.str() == "x");

  auto e = cyclically_reduce(Word(a));
  CHECK(e.core.is_identity());
  CHECK(e.conjugator.is_identity());

  auto c = Word::parse(a, "y x y^-1 x^-1");
  auto rc = cyclically_reduce(c);
  CHECK(rc.core == c);
  CHECK(rc.conjugator.is_identity());
}

TEST_CASE("text format uses minimal exponents", "[word]") {
  auto a = xy();
  CHECK(Word::parse(a, "x x x y^-1 y^-1").str() == "x^3 y^-2");
  CHECK(Word::parse(a, "x^2 x^-2").str() == "1");
  CHECK_THROWS_AS(Word::parse(a, "z"), UnknownGenerator);
  CHECK_THROWS_AS(Word::parse(a, "x^"), ParseError);
}

TEST_CASE("random letter sequences", "[word][property]") {
  auto a = make_alphabet({"a", "b", "c"});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 5), len(0, 30);
  GeneratorMap m(a, a);
  m.set("a", "b c^-1").set("b", "a^2").set("c", "c b a^-1");
  for (int i = 0; i < 200; ++i) {
    Letters raw;
    int n = len(rng);
    for (int k = 0; k < n; ++k) raw.push_back(Letter::from_column(static_cast<std::uint32_t>(letter(rng))));
    auto w = free_reduce(a, raw);
    CHECK(w.size() <= raw.size());
    CHECK(free_reduce(a, w.letters()) == w);
    CHECK(w.inverse().inverse() == w);
    CHECK((w * w.inverse()).is_identity());

    // images of the raw letters, concatenated then reduced
    Letters images;
    for (auto l : raw) {
      auto img = m.image(l.gen());
      if (l.is_inverse()) img = img.inverse();
      for (auto x : img.letters()) images.push_back(x);
    }
    CHECK(substitute(m, w) == free_reduce(a, images));
  }
}
