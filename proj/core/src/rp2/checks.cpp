#include "fpg/rp2/checks.hpp"

#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/series.hpp"

namespace fpg::rp2 {

std::string CheckResult::details() const {
  std::string s;
  for (auto const& l : lines) {
    if (!s.empty()) s += "; ";
    s += l;
  }
  return s;
}

SubgroupPresentation gamma2_rs(int n) {
  BraidGroup bg(n);
  auto table = std::make_shared<CosetTable const>(
      kernel_coset_table(bg.abelianization_hom()).standardized());
  return subgroup_presentation(bg.presentation(), table, bg.gamma2_transversal());
}

namespace {

// RS generator -> letter generator for n = 4.
GeneratorMap rs_to_letters(SubgroupPresentation const& rs) {
  auto naming = gamma2_rs_naming(rs, 4);
  auto greek = gamma2_b4_greek_to_letters();
  GeneratorMap m(rs.presentation.alphabet(), greek.target());
  for (std::size_t x = 0; x < rs.schreier->size(); ++x) m.set(x, greek(naming.image(x)));
  return m;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Presentation gamma2_b4_computed_letters() {
  auto rs = gamma2_rs(4);
  auto m = rs_to_letters(rs);
  std::vector<Word> rels;
  for (auto const& r : rs.presentation.relators()) rels.push_back(m(r));
  return Presentation(m.target(), rels);
}

CheckResult fullpres_check(int n) {
  CheckResult r;
  auto rs = gamma2_rs(n);
  auto literal = gamma2_presentation_literal(n);
  std::size_t want = static_cast<std::size_t>(8 * n - 7);
  bool count_ok = rs.presentation.generator_count() == want;
  r.note("n=" + std::to_string(n) + ": " + std::to_string(rs.presentation.generator_count()) +
         " generators (expected " + std::to_string(want) + ")");
  auto rep = match_presentations(rs.presentation, literal, gamma2_rs_naming(rs, n));
  r.note(rep.summary());
  for (auto const& w : rep.unmatched_a) r.note("computed only: " + w.str());
  for (auto const& w : rep.unmatched_b) r.note("listed only: " + w.str());
  r.pass = count_ok && rep.pass &&
           literal.relators().size() == 4 * braid_presentation(n).relators().size();
  return r;
}

CheckResult letter_list_check() {
  CheckResult r;
  auto computed = gamma2_b4_computed_letters();
  auto listed = gamma2_b4_letter_presentation();
  GeneratorMap same(computed.alphabet(), listed.alphabet());
  for (std::size_t g = 0; g < computed.generator_count(); ++g)
    same.set(g, Word::generator(listed.alphabet(), computed.alphabet()->name(g)));
  auto rep = match_presentations(computed, listed, same);
  r.note(rep.summary());
  for (auto const& w : rep.unmatched_a) r.note("computed only: " + w.str());
  if (!rep.unmatched_b.empty()) {
    // A listed relator that is not a relation: push it into B_4^(3) and
    // look at its abelianized image there.
    BraidGroup bg(4);
    DerivedSeries ds(bg.presentation(), 3);
    auto ab3 = abelianization_map(ds.stage(3).presentation);
    auto q3 = ds.quotient_table(3);
    auto words = gamma2_b4_letter_words();
    for (auto const& w : rep.unmatched_b) {
      Word bw = words(w);
      std::string verdict;
      if (q3.trace(bw) != 0) {
        verdict = "nontrivial in B4/B4^(3)";
      } else {
        auto v = ab3.evaluate(ds.rewrite(0, 3, bw));
        bool zero = true;
        for (auto const& c : v) zero = zero && c == 0;
        verdict = zero ? "trivial in B4^(3)/B4^(4), undecided"
                       : "nonzero in the abelianization of B4^(3), so not a relation";
      }
      r.note("listed only: " + w.str() + " (" + verdict + ")");
    }
  }
  r.pass = rep.pass;
  return r;
}

CheckResult b4_power_check() {
  CheckResult r;
  BraidGroup bg(4);
  auto rs = gamma2_rs(4);
  auto to_letters = rs_to_letters(rs);
  Word b = bg.b();
  // b^3 = r3 r2 r1 is a relation, so b^4 = r3 r2 r1 . b is what gets rewritten
  Word w = bg.expr("r3 r2 r1") * b;
  Word got = to_letters(rs.schreier->rewrite(w));
  Word want = Word::parse(to_letters.target(), "C1 B4 A1 C4 Y1 X2");
  r.note("r3 r2 r1 b rewrites to " + got.str());
  r.pass = got == want;
  return r;
}

CheckResult gensk_check() {
  CheckResult r;
  BraidGroup bg(4);
  auto k = kernel_coset_table(bg.pure_commutator_hom());
  auto words = gamma2_b4_letter_words();
  auto const& letters = words.source();
  struct Entry {
    char const* braid;
    char const* letters;
  };
  static constexpr Entry entries[] = {
      {"B12", "X2"},
      {"B13", "Y1 X2 Y1^-1"},
      {"B14", "Z1 Y2 X2 Y2^-1 Z1^-1"},
      {"B23", "Y1 Y2"},
      {"B24", "Z1 Y2 Y1 Z1^-1"},
      {"B34", "Z1 Z2"},
      {"r1 B12 r1^-1", "A1 X4 A1^-1"},
      {"r1 B13 r1^-1", "A1 Y4 X4 Y4^-1 A1^-1"},
      {"r1 B14 r1^-1", "A1 Z4 Y3 X4 Y3^-1 Z4^-1 A1^-1"},
      {"r1^2", "A1 A4"},
      {"r2^2", "B1 B4"},
      {"r3^2", "C1 C4"},
      {"r4^2", "D1 D4"},
      {"r1 r2", "A1 B4"},
      {"r1 r3", "A1 C4"},
      {"r1 r4", "A1 D4"},
  };
  r.pass = k.size() == 48;
  r.note("K has index " + std::to_string(k.size()));
  std::vector<Word> gens;
  std::size_t members = 0, free_equal = 0;
  for (auto const& e : entries) {
    Word lhs = bg.expr(e.braid);
    Word rhs = words(Word::parse(letters, e.letters));
    bool member = k.contains(lhs);
    bool same = lhs == rhs;
    members += member;
    free_equal += same;
    if (!member) r.note(std::string(e.braid) + " is not in K");
    if (!same) r.note(std::string(e.braid) + " and " + e.letters + " differ as free words");
    r.pass = r.pass && member && same;
    gens.push_back(lhs);
  }
  r.note(std::to_string(members) + "/16 in K, " + std::to_string(free_equal) +
         "/16 equal to their letter expressions");
  auto sub = todd_coxeter(bg.presentation(), gens);
  r.note("the listed words generate a subgroup of index " + std::to_string(sub.size()));
  r.pass = r.pass && sub.size() == 48;
  bool rho1_out = !k.contains(bg.rho(1));
  r.note("r1 in K: " + yes_no(!rho1_out));
  r.pass = r.pass && rho1_out;
  return r;
}

PhiReport phi_check() {
  PhiReport out;
  auto& r = out.check;
  auto const& lmodel = group_model("L").presentation;
  auto lt = todd_coxeter(lmodel, {});
  auto phi = phi_to_l();
  auto computed = gamma2_b4_computed_letters();
  auto listed = gamma2_b4_letter_presentation();

  // permutation images of the letters in the regular representation of L
  PermHom h{computed, {}};
  for (std::size_t g = 0; g < computed.generator_count(); ++g) {
    Permutation p = Permutation::identity(lt.size());
    for (auto l : phi.image(g).letters()) {
      auto q = lt.permutation(l.gen());
      p = p * (l.is_inverse() ? q.inverse() : q);
    }
    h.images.push_back(std::move(p));
  }
  auto killed = [&](Presentation const& p) {
    std::size_t ok = 0;
    for (auto const& rel : p.relators()) ok += h.evaluate(rel).is_identity();
    return ok;
  };
  std::size_t ok_computed = killed(computed), ok_listed = killed(listed);
  r.note("phi kills " + std::to_string(ok_computed) + "/" +
         std::to_string(computed.relators().size()) + " computed and " +
         std::to_string(ok_listed) + "/" + std::to_string(listed.relators().size()) +
         " listed relators");
  bool hom = ok_computed == computed.relators().size() &&
             ok_listed == listed.relators().size();

  auto kernel = kernel_presentation(h);
  out.kernel_generators = kernel.presentation.generator_count();
  out.via_phi = abelian_invariants(kernel.presentation);
  r.note("image order " + std::to_string(kernel.table().size()) + ", kernel has " +
         std::to_string(out.kernel_generators) + " generators, invariants " +
         out.via_phi.str());

  BraidGroup bg(4);
  DerivedSeries ds(bg.presentation(), 3);
  out.via_series = ds.stage(3).invariants;
  r.note("B4^(3) from the derived series: index " + std::to_string(ds.stage(3).index) +
         ", invariants " + out.via_series.str());

  // Gamma2(B4)/B4^(3) as a permutation group, matched against L
  auto q = ds.relative_quotient_table(1, 3);
  auto id = identify(permutation_group(q));
  auto iso = find_isomorphism(lmodel, permutation_group(q));
  r.note("Gamma2/B4^(3): order " + std::to_string(q.size()) + ", " + id.str());

  r.pass = hom && kernel.table().size() == 48 && out.kernel_generators == 1153 &&
           out.via_phi == out.via_series && ds.stage(3).index == 192 && q.size() == 48 &&
           iso.has_value() && id.name == "L" && id.exact;
  return out;
}

namespace {

std::vector<IdentitySpec> make_identity_specs() {
  std::vector<IdentitySpec> out;
  auto add = [&](int n, std::string name, std::string lhs, std::string rhs) {
    out.push_back({std::move(name), n, std::move(lhs), std::move(rhs)});
  };

  // conjugation actions of x, y, u on z1, z2, z3, and of u on x, y
  add(3, "action.x.z1", "x z1 x^-1", "z1^-1");
  add(3, "action.x.z2", "x z2 x^-1", "z1^-1 z3^-1 z1");
  add(3, "action.x.z3", "x z3 x^-1", "z1^-1 z2^-1 z1");
  add(3, "action.y.z1", "y z1 y^-1", "z2 z3 z1");
  add(3, "action.y.z2", "y z2 y^-1", "z2^-1");
  add(3, "action.y.z3", "y z3 y^-1", "z2 z3^-1 z2^-1");
  add(3, "action.u.z1", "u z1 u^-1", "x^2 z3 z1");
  add(3, "action.u.z2", "u z2 u^-1", "x^2 z1^-1");
  add(3, "action.u.z3", "u z3 u^-1", "x^2 z2^-1 z1^-1 z3^-1");
  add(3, "action.u.x", "u x u^-1", "x y");
  add(3, "action.u.y", "u y u^-1", "x");
  add(3, "quaternion.x2_eq_y2", "x^2", "y^2");
  add(3, "quaternion.yxy", "y x y^-1", "x^-1");
  add(3, "order.u", "u^3", "1");

  for (int n = 2; n <= 5; ++n) {
    std::string sn = std::to_string(n);
    std::string bpow, apow;
    for (int j = n - 1; j >= 1; --j) bpow += "r" + std::to_string(j) + " ";
    bpow.pop_back();
    apow = "r" + sn + " " + bpow;
    add(n, "powers.b.n" + sn, "b^" + std::to_string(n - 1), bpow);
    add(n, "powers.a.n" + sn, "a^" + sn, apow);
    add(n, "order.a.n" + sn, "a^" + std::to_string(4 * n), "1");
    add(n, "order.b.n" + sn, "b^" + std::to_string(4 * (n - 1)), "1");
  }

  // conjugation by a^n inverts every generator
  for (int i = 1; i <= 2; ++i)
    add(3, "invert.s" + std::to_string(i), "a^3 s" + std::to_string(i) + " a^-3",
        "s" + std::to_string(i) + "^-1");
  for (int j = 1; j <= 3; ++j)
    add(3, "invert.r" + std::to_string(j), "a^3 r" + std::to_string(j) + " a^-3",
        "r" + std::to_string(j) + "^-1");

  for (int i = 1; i <= 3; ++i)
    add(3, "garside.r" + std::to_string(i), "Delta r" + std::to_string(i) + " Delta^-1",
        "r" + std::to_string(4 - i) + "^-1");
  add(3, "garside.a", "Delta a Delta^-1", "a^-1");

  add(3, "twist.x2", "r2 r1 r2 r1", "r2 B12 r3^-1 r2 B12 r3^-1");
  add(3, "twist.b4", "r2 B12 r3^-1 r2 B12 r3^-1", "b^4");
  add(3, "twist.delta2", "b^4", "Delta2");
  add(3, "twist.pure", "Delta2", "B12 B13 B23");
  add(3, "pure.r3sq", "r3^-2", "B13 B23");
  add(3, "pure.b12", "B12", "r2 r1 r2 r1 B23^-1 B13^-1");
  add(3, "pure.b12.r3", "r2 r1 r2 r1 B23^-1 B13^-1", "r2 r1 r2 r1 r3^2");
  add(3, "quaternion.bda", "b Delta a^-1", "s1^-1 r1 s1 r3^-1");
  add(3, "quaternion.bda.pure", "s1^-1 r1 s1 r3^-1", "r2 B12 r3^-1");
  return out;
}

}  // namespace

std::vector<IdentitySpec> const& identity_specs() {
  static auto const specs = make_identity_specs();
  return specs;
}

IdentityCheck check_identity_spec(GroupRegistry const& reg, IdentitySpec const& spec) {
  auto id = "bn:" + std::to_string(spec.n);
  BraidGroup bg(spec.n);
  auto v = check_identity(reg, id, bg.expr(spec.lhs), bg.expr(spec.rhs));
  return {spec.name, id, spec.lhs, spec.rhs, std::move(v)};
}

std::vector<IdentityCheck> consistency_identities(GroupRegistry const& reg) {
  std::vector<IdentityCheck> out;
  for (auto const& spec : identity_specs())
    if (reg.has("bn:" + std::to_string(spec.n))) out.push_back(check_identity_spec(reg, spec));
  return out;
}

}  // namespace fpg::rp2
