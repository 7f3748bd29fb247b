#include "fpg/rp2/actions.hpp"

#include <map>

#include "fpg/coset_table.hpp"
#include "fpg/errors.hpp"
#include "fpg/reidemeister_schreier.hpp"
#include "fpg/rp2/braid.hpp"

namespace fpg::rp2 {

Word apply_action(ActionTable const& t, Word const& w) { return t.images(w); }

ActionTable power(ActionTable const& t, int k) {
  GeneratorMap m(t.basis(), t.basis());
  for (std::size_t g = 0; g < t.basis()->size(); ++g) {
    Word w = Word::generator(t.basis(), g);
    for (int i = 0; i < k; ++i) w = t.images(w);
    m.set(g, w);
  }
  return {t.name + "^" + std::to_string(k), m};
}

IntegerMatrix induced_matrix(ActionTable const& t) {
  std::size_t n = t.basis()->size();
  IntegerMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto e = exponent_sums(t.images.image(j));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = static_cast<long>(e[i]);
  }
  return m;
}

AlphabetPtr f5_alphabet() {
  static auto a = make_alphabet({"B14", "B24", "R4sq", "R4B14", "R4B24"});
  return a;
}
AlphabetPtr f3_alphabet() {
  static auto a = make_alphabet({"B23", "R3sq", "R3B23"});
  return a;
}
AlphabetPtr f5f3_alphabet() {
  static auto a =
      make_alphabet({"B14", "B24", "R4sq", "R4B14", "R4B24", "B23", "R3sq", "R3B23"});
  return a;
}
AlphabetPtr e_alphabet() {
  static auto a = make_alphabet({"e1", "e2", "e3", "e4", "e5"});
  return a;
}

namespace {

ActionTable table(std::string name, AlphabetPtr a,
                  std::vector<std::pair<char const*, char const*>> rows) {
  GeneratorMap m(a, a);
  for (auto [g, img] : rows) m.set(g, img);
  if (!m.total()) throw UnmappedGenerator(name + " leaves a generator unmapped");
  return {std::move(name), std::move(m)};
}

}  // namespace

ActionTable action_z4() {
  return table("a^4", f5f3_alphabet(),
               {{"B14", "R4sq B14^-1 R4sq^-1"},
                {"B24", "R4sq B14 B24^-1 B14^-1 R4sq^-1"},
                {"R4sq", "R4sq^-1"},
                {"R4B14", "R4B14^-1"},
                {"R4B24", "R4B14 R4B24^-1 R4B14^-1"},
                {"B23", "B23^-1"},
                {"R3sq", "R3sq^-1"},
                {"R3B23", "R3sq^-1 R3B23^-1 R3sq"}});
}

ActionTable action_b23() {
  return table("B23", f5_alphabet(),
               {{"B14", "B14"},
                {"B24", "R4sq B14 B24 B14^-1 R4sq^-1"},
                {"R4sq", "R4sq"},
                {"R4B14", "R4B14"},
                {"R4B24", "R4sq R4B14 R4B24 R4B14^-1 R4sq^-1"}});
}

ActionTable action_r3b23() {
  return table(
      "r3 B23 r3^-1", f5_alphabet(),
      {{"B14",
        "B24^-1 R4sq^-1 R4B24^-1 R4B14^-1 B24 R4B14 R4B24 R4sq B14 R4sq^-1 R4B24^-1 "
        "R4B14^-1 B24^-1 R4B14 R4B24 R4sq B24"},
       {"B24", "B24^-1 R4sq^-1 R4B24^-1 R4B14^-1 B24 R4B14 R4B24 R4sq B24"},
       {"R4sq",
        "B24^-1 B14^-1 R4sq^-1 R4B24^-1 R4sq B14 B24 R4B14^-1 B24^-1 R4B14 R4B24 R4sq B24"},
       {"R4B14", "R4B14"},
       {"R4B24", "B24^-1 B14^-1 R4sq^-1 R4B24 R4sq B14 B24"}});
}

ActionTable action_r3sq() {
  return table("r3^2", f5_alphabet(),
               {{"B14", "R4B14 R4B24 B24^-1 B14 B24 R4B24^-1 R4B14^-1"},
                {"B24", "R4B14 R4B24 B24^-1 B14^-1 B24 B14 B24 R4B24^-1 R4B14^-1"},
                {"R4sq", "R4B14 R4B24 R4sq R4B24^-1 R4B14^-1"},
                {"R4B14", "R4B14"},
                {"R4B24", "R4B24"}});
}

ActionTable action_phi_e() {
  return table("phi", e_alphabet(),
               {{"e1", "e4 e5 e2^-1 e1 e2 e5^-1 e4^-1"},
                {"e2", "e4 e5 e2^-1 e1^-1 e2 e1 e2 e5^-1 e4^-1"},
                {"e3", "e4 e5 e3 e5^-1 e4^-1"},
                {"e4", "e4"},
                {"e5", "e5"}});
}

GeneratorMap f5f3_braid_words() {
  BraidGroup bg(4);
  GeneratorMap m(f5f3_alphabet(), bg.alphabet());
  m.set("B14", bg.expr("B14"))
      .set("B24", bg.expr("B24"))
      .set("R4sq", bg.expr("r4^2"))
      .set("R4B14", bg.expr("r4 B14 r4^-1"))
      .set("R4B24", bg.expr("r4 B24 r4^-1"))
      .set("B23", bg.expr("B23"))
      .set("R3sq", bg.expr("r3^2"))
      .set("R3B23", bg.expr("r3 B23 r3^-1"));
  return m;
}

GeneratorMap f5_to_e() {
  GeneratorMap m(f5_alphabet(), e_alphabet());
  m.set("B14", "e1").set("B24", "e2").set("R4sq", "e5^-1 e4^-1 e3");
  m.set("R4B14", "e4").set("R4B24", "e5");
  return m;
}

GeneratorMap e_to_f5() {
  GeneratorMap m(e_alphabet(), f5_alphabet());
  m.set("e1", "B14").set("e2", "B24").set("e3", "R4B14 R4B24 R4sq");
  m.set("e4", "R4B14").set("e5", "R4B24");
  return m;
}

CheckResult phi_rho3_sq_check() {
  CheckResult r;
  auto f = action_r3sq();
  auto phi = action_phi_e();
  auto to_e = f5_to_e();
  auto from_e = e_to_f5();
  r.pass = true;
  for (std::size_t g = 0; g < 5; ++g) {
    Word e = Word::generator(e_alphabet(), g);
    Word got = to_e(f.images(from_e(e)));
    Word want = phi.images(e);
    bool ok = got == want;
    r.note(e.str() + " -> " + got.str() + (ok ? "" : " (listed " + want.str() + ")"));
    r.pass = r.pass && ok;
  }
  // the two bases really are inverse to each other
  for (std::size_t g = 0; g < 5; ++g) {
    Word e = Word::generator(e_alphabet(), g);
    if (to_e(from_e(e)) != e) {
      r.pass = false;
      r.note("basis change does not invert at " + e.str());
    }
  }
  return r;
}

F129Report remark_f129_check() {
  F129Report out;
  auto& r = out.check;
  auto e = e_alphabet();
  Presentation f5(e);
  // F5 -> Z2^5, regular representation on 32 points (bit i = e_(i+1))
  PermHom h{f5, {}};
  for (std::uint32_t i = 0; i < 5; ++i) {
    std::vector<Point> img(32);
    for (Point x = 0; x < 32; ++x) img[x] = x ^ (1u << i);
    h.images.emplace_back(std::move(img));
  }
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(h));
  out.cosets = table->size();

  Word tau = Word::parse(e,
                         "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1 e5 "
                         "e1 e2 e1 e3 e1 e2 e1 e4 e1 e2 e1 e3 e1 e2 e1");
  std::vector<Word> prefixes;
  for (std::size_t i = 0; i <= tau.size(); ++i) {
    Letters p(tau.letters().begin(), tau.letters().begin() + static_cast<long>(i));
    prefixes.emplace_back(e, std::move(p));
  }
  auto valid = validate_transversal(*table, prefixes);
  r.note("tau has " + std::to_string(tau.size()) + " letters; prefixes reach " +
         std::to_string(out.cosets) + " cosets: " +
         (valid.accepted ? "valid transversal" : valid.reason));
  if (!valid.accepted) return out;

  SchreierGenerators sch(table, prefixes);
  out.basis_size = sch.size();
  r.note(std::to_string(out.basis_size) + " Schreier generators");

  auto coset_of = [&](Word const& w) { return table->trace(w); };
  // basis vector of a word of the kernel
  auto vec = [&](Word const& w) { return exponent_sums(sch.rewrite(w)); };
  auto t = [&](int i) { return prefixes.at(static_cast<std::size_t>(i)); };
  auto E = [&](int j) { return Word::generator(e, static_cast<std::size_t>(j - 1)); };

  Word x = t(5) * E(3) * t(2).inverse();
  auto phi2 = power(action_phi_e(), 2);
  Word image = phi2.images(x);
  bool in_kernel = coset_of(image) == 0;
  r.note(std::string("phi^2 keeps it in the kernel: ") + (in_kernel ? "yes" : "no"));

  std::vector<Word> terms{E(2).inverse() * t(3).inverse(), t(3) * E(1) * t(2).inverse(),
                          t(2) * E(2) * t(1).inverse(),    t(1) * E(1),
                          E(2) * t(3).inverse(),           t(4) * E(2).inverse() * t(7).inverse(),
                          t(5) * E(1) * t(4).inverse(),    t(4) * E(2) * t(7).inverse(),
                          t(7) * E(1) * t(6).inverse(),    t(6) * E(2) * t(5).inverse(),
                          t(5) * E(3) * t(2).inverse()};
  std::vector<long long> want(sch.size(), 0);
  bool single = true;
  for (auto const& term : terms) {
    if (coset_of(term) != 0) {
      single = false;
      r.note(term.str() + " is not in the kernel");
      continue;
    }
    auto rw = sch.rewrite(term);
    if (rw.size() != 1) single = false;
    auto v = exponent_sums(rw);
    for (std::size_t i = 0; i < v.size(); ++i) want[i] += v[i];
  }
  r.note(std::string("each listed term is a basis element or its inverse: ") +
         (single ? "yes" : "no"));

  auto got = in_kernel ? vec(image) : std::vector<long long>(sch.size(), 0);
  auto mine = vec(x);
  std::string s;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i] == 0) continue;
    if (!s.empty()) s += got[i] < 0 ? " - " : " + ";
    else if (got[i] < 0) s += "-";
    auto mag = got[i] < 0 ? -got[i] : got[i];
    s += (mag == 1 ? "" : std::to_string(mag) + "*") + sch.alphabet()->name(i);
  }
  out.image_str = s;
  r.note("abelianized image: " + s);
  bool equal = got == want;
  bool moved = got != mine;
  r.note(std::string("equals the listed sum: ") + (equal ? "yes" : "no") +
         "; differs from the input: " + (moved ? "yes" : "no"));
  r.pass = out.cosets == 32 && out.basis_size == 129 && in_kernel && single && equal && moved;
  return out;
}

}  // namespace fpg::rp2
