#include "fpg/rp2/braid.hpp"

#include <array>
#include <string>

#include "fpg/errors.hpp"
#include "gamma2_b4_relators.hpp"

namespace fpg::rp2 {

namespace {

std::string s(int i) { return "s" + std::to_string(i); }
std::string r(int j) { return "r" + std::to_string(j); }

void require_n(int n) {
  if (n < 1) throw InvalidStrandCount("n = " + std::to_string(n));
}

}  // namespace

std::size_t braid_relator_count(int n) {
  require_n(n);
  if (n == 1) return 1;
  std::size_t m = static_cast<std::size_t>(n);
  return (m - 2) * (m >= 3 ? m - 3 : 0) / 2 + (m - 2) + (m - 1) * (m - 2) +
         (m - 1) + (m - 1) + 1;
}

Presentation braid_presentation(int n) {
  require_n(n);
  if (n == 1) return Presentation({"r1"}, {"r1^2"});
  std::vector<std::string> gens;
  for (int i = 1; i < n; ++i) gens.push_back(s(i));
  for (int j = 1; j <= n; ++j) gens.push_back(r(j));
  std::vector<std::string> rels;
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      rels.push_back(s(i) + " " + s(j) + " " + s(i) + "^-1 " + s(j) + "^-1");
  for (int i = 1; i + 1 < n; ++i)
    rels.push_back(s(i) + " " + s(i + 1) + " " + s(i) + " " + s(i + 1) + "^-1 " +
                   s(i) + "^-1 " + s(i + 1) + "^-1");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1)
        rels.push_back(s(i) + " " + r(j) + " " + s(i) + "^-1 " + r(j) + "^-1");
  for (int i = 1; i < n; ++i)
    rels.push_back(s(i) + "^-1 " + r(i) + " " + s(i) + "^-1 " + r(i + 1) + "^-1");
  for (int i = 1; i < n; ++i)
    rels.push_back(r(i + 1) + "^-1 " + r(i) + "^-1 " + r(i + 1) + " " + r(i) + " " +
                   s(i) + "^-2");
  std::string surf;
  for (int i = 1; i < n; ++i) surf += s(i) + " ";
  for (int i = n - 1; i >= 1; --i) surf += s(i) + " ";
  rels.push_back(surf + "r1^-2");
  return Presentation(gens, rels);
}

BraidGroup::BraidGroup(int n) : n_(n), p_(braid_presentation(n)) {}

Word BraidGroup::sigma(int i) const {
  if (i < 1 || i >= n_) throw UnknownGenerator(s(i));
  return p_.word(s(i));
}

Word BraidGroup::rho(int j) const {
  if (j < 1 || j > n_) throw UnknownGenerator(r(j));
  return p_.word(r(j));
}

Word BraidGroup::pure(int i, int j) const {
  if (i < 1 || i >= j || j > n_) {
    throw UnknownGenerator("B" + std::to_string(i) + std::to_string(j));
  }
  Word c = p_.identity();
  for (int k = j - 1; k > i; --k) c *= sigma(k);
  return conjugate(c, sigma(i).pow(2));
}

Word BraidGroup::a() const {
  Word w = rho(n_);
  for (int i = n_ - 1; i >= 1; --i) w *= sigma(i);
  return w;
}

Word BraidGroup::b() const {
  if (n_ < 2) throw InvalidStrandCount("b needs n >= 2");
  Word w = rho(n_ - 1);
  for (int i = n_ - 2; i >= 1; --i) w *= sigma(i);
  return w;
}

Word BraidGroup::garside() const {
  Word w = p_.identity();
  for (int top = n_ - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w *= sigma(i);
  return w;
}

Word BraidGroup::full_twist() const { return garside().pow(2); }

std::optional<Word> BraidGroup::element(std::string_view name) const {
  if (name == "a") return a();
  if (name == "b") return b();
  if (name == "Delta") return garside();
  if (name == "Delta2") return full_twist();
  if (name.size() == 3 && name[0] == 'B') {
    int i = name[1] - '0', j = name[2] - '0';
    if (i >= 1 && i <= 9 && j >= 1 && j <= 9) return pure(i, j);
  }
  if (n_ >= 3) {
    if (name == "x") return rho(2) * rho(1);
    if (name == "y") return rho(2) * pure(1, 2) * rho(3).inverse();
    if (name == "z1") return rho(3).pow(2);
    if (name == "z2") return pure(2, 3);
    if (name == "z3") return conjugate(rho(3), pure(2, 3));
    if (name == "u") return (rho(3) * sigma(2) * sigma(1)).pow(4);
  }
  return std::nullopt;
}

Word BraidGroup::expr(std::string_view text) const {
  return parse_expression(alphabet(), text,
                          [this](std::string_view nm) { return element(nm); });
}

PermHom BraidGroup::permutation_hom() const {
  PermHom h{p_, {}};
  auto deg = static_cast<std::size_t>(n_);
  for (int i = 1; i < n_; ++i) {
    std::array<Point, 2> c{static_cast<Point>(i - 1), static_cast<Point>(i)};
    h.images.push_back(Permutation::cycle(deg, c));
  }
  for (int j = 1; j <= n_; ++j) h.images.push_back(Permutation::identity(deg));
  return h;
}

PermHom BraidGroup::abelianization_hom() const {
  // point = sigma-bit + 2 * rho-bit
  Permutation flip_s({1, 0, 3, 2}), flip_r({2, 3, 0, 1});
  PermHom h{p_, {}};
  for (int i = 1; i < n_; ++i) h.images.push_back(flip_s);
  for (int j = 1; j <= n_; ++j) h.images.push_back(flip_r);
  return h;
}

PermHom BraidGroup::pure_commutator_hom() const {
  auto tau = permutation_hom();
  auto alpha = abelianization_hom();
  std::size_t n = static_cast<std::size_t>(n_);
  PermHom h{p_, {}};
  for (std::size_t g = 0; g < tau.images.size(); ++g) {
    std::vector<Point> img(n + 4);
    for (std::size_t x = 0; x < n; ++x) img[x] = tau.images[g][static_cast<Point>(x)];
    for (std::size_t x = 0; x < 4; ++x)
      img[n + x] = static_cast<Point>(n + alpha.images[g][static_cast<Point>(x)]);
    h.images.emplace_back(std::move(img));
  }
  return h;
}

std::vector<Word> BraidGroup::gamma2_transversal() const {
  if (n_ < 2) throw InvalidStrandCount("transversal needs n >= 2");
  return {p_.identity(), expr("s1"), expr("s1 r1"), expr("s1 r1 s1")};
}

std::string gamma2_generator_name(bool is_rho, int index, int family) {
  static constexpr std::array<char const*, 4> sig{"alpha", "beta", "gamma", "tau"};
  static constexpr std::array<char const*, 4> rh{"eta", "kappa", "theta", "lambda"};
  return std::string(is_rho ? rh.at(family) : sig.at(family)) + std::to_string(index);
}

namespace {

// alpha1, gamma1 and kappa1 are the tree edges of the transversal.
bool is_unit(bool is_rho, int index, int family) {
  return index == 1 && (is_rho ? family == 1 : (family == 0 || family == 2));
}

class GreekBuilder {
 public:
  explicit GreekBuilder(int n) : n_(n) {
    std::vector<std::string> names;
    auto add = [&](bool rho, int fam, int from, int to) {
      for (int i = from; i <= to; ++i)
        if (!is_unit(rho, i, fam)) names.push_back(gamma2_generator_name(rho, i, fam));
    };
    add(false, 0, 1, n - 1);
    add(false, 1, 1, n - 1);
    add(false, 2, 1, n - 1);
    add(false, 3, 1, n - 1);
    add(true, 0, 1, n);
    add(true, 1, 1, n);
    add(true, 2, 1, n);
    add(true, 3, 1, n);
    alpha_ = make_alphabet(std::move(names));
  }

  AlphabetPtr const& alphabet() const { return alpha_; }

  // Letter for a family member; identity for the unit ones.
  Word g(char kind, int i, int inv = 1) const {
    bool rho = false;
    int fam = 0;
    switch (kind) {
      case 'a': fam = 0; break;
      case 'b': fam = 1; break;
      case 'c': fam = 2; break;  // gamma
      case 't': fam = 3; break;
      case 'e': rho = true; fam = 0; break;
      case 'k': rho = true; fam = 1; break;
      case 'h': rho = true; fam = 2; break;  // theta
      case 'l': rho = true; fam = 3; break;
      default: throw UnknownGenerator(std::string(1, kind));
    }
    if (is_unit(rho, i, fam)) return Word(alpha_);
    return Word::generator(alpha_, gamma2_generator_name(rho, i, fam), inv);
  }

  int n() const { return n_; }

 private:
  int n_;
  AlphabetPtr alpha_;
};

// Alternating product over the indices 2..n-1 then n-1..2, starting with
// letter `first` and switching to `second` at every step.
Word surface_run(GreekBuilder const& G, char first, char second) {
  Word w(G.alphabet());
  int n = G.n();
  bool use_first = true;
  auto step = [&](int k) {
    w *= G.g(use_first ? first : second, k);
    use_first = !use_first;
  };
  for (int k = 2; k <= n - 1; ++k) step(k);
  for (int k = n - 1; k >= 2; --k) step(k);
  return w;
}

}  // namespace

Presentation gamma2_presentation_literal(int n) {
  if (n < 3) throw InvalidStrandCount("Gamma2 presentation needs n >= 3");
  GreekBuilder G(n);
  std::vector<Word> rels;
  auto push = [&](std::initializer_list<Word> parts) {
    Word w(G.alphabet());
    for (auto const& p : parts) w *= p;
    rels.push_back(w);
  };
  // (a)
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      push({G.g('a', i), G.g('b', j), G.g('b', i, -1), G.g('a', j, -1)});
      push({G.g('b', i), G.g('a', j), G.g('a', i, -1), G.g('b', j, -1)});
      push({G.g('c', i), G.g('t', j), G.g('t', i, -1), G.g('c', j, -1)});
      push({G.g('t', i), G.g('c', j), G.g('c', i, -1), G.g('t', j, -1)});
    }
  // (b)
  for (int i = 1; i + 1 < n; ++i) {
    push({G.g('a', i), G.g('b', i + 1), G.g('a', i), G.g('a', i + 1, -1),
          G.g('b', i, -1), G.g('a', i + 1, -1)});
    push({G.g('b', i), G.g('a', i + 1), G.g('b', i), G.g('b', i + 1, -1),
          G.g('a', i, -1), G.g('b', i + 1, -1)});
    push({G.g('c', i), G.g('t', i + 1), G.g('c', i), G.g('c', i + 1, -1),
          G.g('t', i, -1), G.g('c', i + 1, -1)});
    push({G.g('t', i), G.g('c', i + 1), G.g('t', i), G.g('t', i + 1, -1),
          G.g('c', i, -1), G.g('t', i + 1, -1)});
  }
  // (c)
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      push({G.g('a', i), G.g('k', j), G.g('t', i, -1), G.g('e', j, -1)});
      push({G.g('b', i), G.g('e', j), G.g('c', i, -1), G.g('k', j, -1)});
      push({G.g('c', i), G.g('l', j), G.g('b', i, -1), G.g('h', j, -1)});
      push({G.g('t', i), G.g('h', j), G.g('a', i, -1), G.g('l', j, -1)});
    }
  // (d)
  for (int i = 1; i < n; ++i) {
    push({G.g('b', i, -1), G.g('k', i), G.g('t', i, -1), G.g('e', i + 1, -1)});
    push({G.g('a', i, -1), G.g('e', i), G.g('c', i, -1), G.g('k', i + 1, -1)});
    push({G.g('t', i, -1), G.g('l', i), G.g('b', i, -1), G.g('h', i + 1, -1)});
    push({G.g('c', i, -1), G.g('h', i), G.g('a', i, -1), G.g('l', i + 1, -1)});
  }
  // (e)
  for (int i = 1; i < n; ++i) {
    push({G.g('l', i + 1, -1), G.g('e', i, -1), G.g('e', i + 1), G.g('l', i),
          G.g('b', i, -1), G.g('a', i, -1)});
    push({G.g('h', i + 1, -1), G.g('k', i, -1), G.g('k', i + 1), G.g('h', i),
          G.g('a', i, -1), G.g('b', i, -1)});
    push({G.g('k', i + 1, -1), G.g('h', i, -1), G.g('h', i + 1), G.g('k', i),
          G.g('t', i, -1), G.g('c', i, -1)});
    push({G.g('e', i + 1, -1), G.g('l', i, -1), G.g('l', i + 1), G.g('e', i),
          G.g('c', i, -1), G.g('t', i, -1)});
  }
  // (f): the index pattern is the same for both parities once written as an
  // alternating run.
  push({surface_run(G, 'b', 'a'), G.g('b', 1), G.g('l', 1, -1), G.g('e', 1, -1)});
  push({G.g('b', 1), surface_run(G, 'a', 'b'), G.g('h', 1, -1)});
  push({surface_run(G, 't', 'c'), G.g('t', 1), G.g('h', 1, -1)});
  push({G.g('t', 1), surface_run(G, 'c', 't'), G.g('e', 1, -1), G.g('l', 1, -1)});
  return Presentation(G.alphabet(), rels);
}

GeneratorMap gamma2_rs_naming(SubgroupPresentation const& rs, int n) {
  BraidGroup bg(n);
  auto const& sch = *rs.schreier;
  auto const& table = sch.table();
  auto trans = bg.gamma2_transversal();
  // family of each coset = position of its listed representative
  std::vector<int> family(table.size(), -1);
  for (int k = 0; k < 4; ++k) family.at(table.trace(trans[k])) = k;
  auto target = gamma2_presentation_literal(n).alphabet();
  GeneratorMap m(sch.alphabet(), target);
  auto const& amb = bg.alphabet();
  for (std::size_t x = 0; x < sch.size(); ++x) {
    auto [c, g] = sch.origin(x);
    auto const& gname = amb->name(g);
    bool is_rho = gname[0] == 'r';
    int idx = std::stoi(gname.substr(1));
    m.set(x, Word::generator(target, gamma2_generator_name(is_rho, idx, family.at(c))));
  }
  return m;
}

namespace {

std::string letter_name(bool is_rho, int index, int family) {
  static constexpr std::array<char, 3> sig{'X', 'Y', 'Z'};
  static constexpr std::array<char, 4> rh{'A', 'B', 'C', 'D'};
  char c = is_rho ? rh.at(index - 1) : sig.at(index - 1);
  return std::string(1, c) + std::to_string(family + 1);
}

}  // namespace

Presentation gamma2_b4_letter_presentation() {
  std::vector<std::string> names{"X2", "X4"};
  for (char c : {'Y', 'Z'})
    for (int k = 1; k <= 4; ++k) names.push_back(std::string(1, c) + std::to_string(k));
  names.insert(names.end(), {"A1", "A3", "A4"});
  for (char c : {'B', 'C', 'D'})
    for (int k = 1; k <= 4; ++k) names.push_back(std::string(1, c) + std::to_string(k));
  std::vector<std::string> rels(std::begin(kGamma2B4Relators), std::end(kGamma2B4Relators));
  return Presentation(names, rels);
}

GeneratorMap gamma2_b4_greek_to_letters() {
  auto greek = gamma2_presentation_literal(4).alphabet();
  auto letters = gamma2_b4_letter_presentation().alphabet();
  GeneratorMap m(greek, letters);
  static const std::array<std::string, 8> fam{"alpha", "beta", "gamma", "tau",
                                              "eta", "kappa", "theta", "lambda"};
  for (std::size_t i = 0; i < greek->size(); ++i) {
    auto const& g = greek->name(i);
    for (int f = 0; f < 8; ++f) {
      if (g.rfind(fam[f], 0) == 0 && g.size() == fam[f].size() + 1) {
        m.set(i, Word::generator(letters, letter_name(f >= 4, g.back() - '0', f % 4)));
      }
    }
  }
  return m;
}

GeneratorMap gamma2_b4_letter_words() {
  BraidGroup bg(4);
  auto letters = gamma2_b4_letter_presentation().alphabet();
  GeneratorMap m(letters, bg.alphabet());
  auto trans = bg.gamma2_transversal();
  auto alpha = bg.abelianization_hom();
  // representative of the coset reached by a word, among the transversal
  auto rep_of = [&](Word const& w) -> Word const& {
    auto img = alpha.evaluate(w);
    for (auto const& t : trans)
      if (alpha.evaluate(t) == img) return t;
    throw InvalidTransversal("no representative");
  };
  for (std::size_t i = 0; i < letters->size(); ++i) {
    auto const& nm = letters->name(i);
    char c = nm[0];
    int fam = nm[1] - '1';
    std::string gen;
    switch (c) {
      case 'X': gen = "s1"; break;
      case 'Y': gen = "s2"; break;
      case 'Z': gen = "s3"; break;
      case 'A': gen = "r1"; break;
      case 'B': gen = "r2"; break;
      case 'C': gen = "r3"; break;
      case 'D': gen = "r4"; break;
    }
    Word tg = trans[fam] * bg.expr(gen);
    m.set(i, tg * rep_of(tg).inverse());
  }
  return m;
}

}  // namespace fpg::rp2
