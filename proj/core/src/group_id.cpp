#include "fpg/group_id.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fpg/errors.hpp"

namespace fpg {

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::size_t degree)
    : degree_(degree), gens_(std::move(generators)) {
  if (!gens_.empty()) degree_ = gens_.front().degree();
  for (auto const& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("mixed degrees");
  }
}

void FiniteGroup::enumerate() const {
  auto& c = *cache_;
  std::call_once(c.once, [this, &c] {
    auto id = Permutation::identity(degree_);
    c.index.emplace(id.images(), 0);
    c.elements.push_back(id);
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      for (auto const& g : gens_) {
        auto next = c.elements[i] * g;
        if (c.index.emplace(next.images(), c.elements.size()).second) {
          c.elements.push_back(std::move(next));
          if (c.elements.size() > kMaxOrder) {
            c.too_large = true;
            return;
          }
        }
      }
    }
  });
  if (c.too_large) {
    throw TooLarge("group order exceeds " + std::to_string(kMaxOrder));
  }
}

std::size_t FiniteGroup::order() const {
  enumerate();
  return cache_->elements.size();
}

std::vector<Permutation> const& FiniteGroup::elements() const {
  enumerate();
  return cache_->elements;
}

std::optional<std::size_t> FiniteGroup::index_of(Permutation const& p) const {
  enumerate();
  auto it = cache_->index.find(p.images());
  if (it == cache_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::closure_order(std::vector<Permutation> const& gens,
                                       std::size_t degree) {
  return FiniteGroup(gens, degree).order();
}

FiniteGroup permutation_group(CosetTable const& t) {
  return FiniteGroup(t.permutations(), t.size());
}

namespace {

// Elements indexed 0..n-1 with identity 0 and a full multiplication table.
struct Table {
  std::size_t n;
  std::vector<std::uint32_t> mul;  // mul[a * n + b] = a * b
  std::vector<std::uint32_t> inv;

  explicit Table(FiniteGroup const& g) : n(g.order()), mul(n * n), inv(n) {
    auto const& el = g.elements();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        mul[a * n + b] = static_cast<std::uint32_t>(*g.index_of(el[a] * el[b]));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul[a * n + b] == 0) inv[a] = static_cast<std::uint32_t>(b);
      }
    }
  }
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

// Works on element indices of g through permutation products; used where
// a full table would be too big.
struct Indexer {
  FiniteGroup const& g;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto const& el = g.elements();
    return static_cast<std::uint32_t>(*g.index_of(el[a] * el[b]));
  }
  std::uint32_t inv(std::uint32_t a) const {
    return static_cast<std::uint32_t>(*g.index_of(g.elements()[a].inverse()));
  }
};

std::vector<std::uint32_t> subgroup_closure(Indexer const& ix,
                                            std::vector<std::uint32_t> const& gens,
                                            std::size_t n) {
  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : gens) {
      auto x = ix.mul(out[i], s);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  }
  return out;
}

// Normal closure of seeds inside the subgroup generated by ambient.
// Returns a generating set and the element list.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> normal_closure(
    Indexer const& ix, std::vector<std::uint32_t> seeds,
    std::vector<std::uint32_t> const& ambient, std::size_t n) {
  std::vector<std::uint32_t> gens;
  for (auto s : seeds) {
    if (s != 0) gens.push_back(s);
  }
  while (true) {
    auto elems = subgroup_closure(ix, gens, n);
    std::vector<bool> in(n, false);
    for (auto e : elems) in[e] = true;
    bool grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i) {
      for (auto a : ambient) {
        auto c = ix.mul(ix.mul(ix.inv(a), gens[i]), a);
        if (!in[c]) {
          gens.push_back(c);
          grew = true;
          break;
        }
      }
    }
    if (!grew) return {gens, elems};
  }
}

std::vector<std::uint32_t> commutators(Indexer const& ix,
                                       std::vector<std::uint32_t> const& gens) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto a = gens[i], b = gens[j];
      auto c = ix.mul(ix.mul(ix.mul(a, b), ix.inv(a)), ix.inv(b));
      if (c != 0) out.push_back(c);
    }
  }
  return out;
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors of a finite abelian group from its element-order counts.
AbelianInvariants abelian_from_orders(std::map<std::size_t, std::size_t> const& hist,
                                      std::size_t order) {
  std::map<std::size_t, std::vector<std::size_t>> exps;  // prime -> exponents desc
  for (auto p : prime_factors(order)) {
    std::vector<std::size_t> a{0};  // log_p |A[p^k]|
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t cnt = 0;
      for (auto [o, c] : hist) {
        if (pk % o == 0) cnt += c;
      }
      std::size_t lg = 0;
      for (std::size_t x = cnt; x > 1; x /= p) ++lg;
      if (lg == a.back()) break;
      a.push_back(lg);
    }
    // n_k = a_k - a_{k-1} factors have exponent >= k
    std::vector<std::size_t> e;
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
      std::size_t atleast = a[k] - a[k - 1];
      std::size_t above = k + 1 < a.size() ? a[k + 1] - a[k] : 0;
      for (std::size_t i = 0; i < atleast - above; ++i) e.push_back(k);
    }
    exps[p] = e;
  }
  std::size_t width = 0;
  for (auto const& [p, e] : exps) width = std::max(width, e.size());
  std::vector<Integer> factors;
  for (std::size_t j = 0; j < width; ++j) {
    Integer f = 1;
    for (auto const& [p, e] : exps) {
      if (j < e.size()) {
        for (std::size_t i = 0; i < e[j]; ++i) f *= static_cast<unsigned long>(p);
      }
    }
    factors.push_back(f);
  }
  std::reverse(factors.begin(), factors.end());
  AbelianInvariants inv;
  for (auto& f : factors) {
    if (f > 1) inv.torsion.push_back(f);
  }
  return inv;
}

}  // namespace

std::string Fingerprint::str() const {
  std::string s = "order " + std::to_string(order) + "; element orders {";
  bool first = true;
  for (auto [o, c] : element_orders) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(o) + ":" + std::to_string(c);
  }
  s += "}; classes [";
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(class_sizes[i]);
  }
  s += "]; center " + std::to_string(center_order) + "; abelianization " +
       abelianization.str() + "; derived length " +
       (derived_length < 0 ? std::string("none") : std::to_string(derived_length));
  return s;
}

Fingerprint fingerprint(FiniteGroup const& g) {
  Fingerprint f;
  auto const& el = g.elements();
  std::size_t n = el.size();
  f.order = n;
  Indexer ix{g};
  for (auto const& e : el) ++f.element_orders[e.order()];

  std::vector<std::uint32_t> gens;
  for (auto const& p : g.generators()) gens.push_back(static_cast<std::uint32_t>(*g.index_of(p)));

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint32_t> ginv;
  for (auto s : gens) ginv.push_back(ix.inv(s));
  std::size_t center = 0;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool central = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto c = ix.mul(ix.mul(ginv[i], e), gens[i]);
      if (c != e) central = false;
      auto a = find(e), b = find(c);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    if (central) ++center;
  }
  f.center_order = center;
  std::map<std::uint32_t, std::size_t> cls;
  for (std::uint32_t e = 0; e < n; ++e) ++cls[find(e)];
  for (auto [r, c] : cls) f.class_sizes.push_back(c);
  std::sort(f.class_sizes.begin(), f.class_sizes.end());

  // G / G'
  auto [dgens, delems] = normal_closure(ix, commutators(ix, gens), gens, n);
  std::vector<std::int64_t> label(n, -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (label[e] >= 0) continue;
    for (auto d : delems) label[ix.mul(e, d)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(e);
  }
  std::map<std::size_t, std::size_t> qhist;
  for (auto r : reps) {
    std::size_t k = 1;
    std::uint32_t x = r;
    while (label[x] != label[0]) {
      x = ix.mul(x, r);
      ++k;
    }
    ++qhist[k];
  }
  f.abelianization = abelian_from_orders(qhist, reps.size());

  // derived series
  std::vector<std::uint32_t> hgens = gens;
  std::size_t hsize = n;
  int length = 0;
  while (hsize > 1) {
    auto [ng, ne] = normal_closure(ix, commutators(ix, hgens), hgens, n);
    if (ne.size() == hsize) {
      length = -1;
      break;
    }
    ++length;
    hgens = ng;
    hsize = ne.size();
  }
  f.derived_length = length;
  return f;
}

namespace {

std::vector<GroupModel> build_models() {
  std::vector<GroupModel> m;
  auto add = [&](std::string name, std::vector<std::string> gens,
                 std::vector<std::string> rels) {
    m.push_back({std::move(name), Presentation(std::move(gens), rels)});
  };
  add("Z2", {"a"}, {"a^2"});
  add("Z3", {"a"}, {"a^3"});
  add("Z4", {"a"}, {"a^4"});
  add("Z6", {"a"}, {"a^6"});
  add("Z8", {"a"}, {"a^8"});
  add("Z2^2", {"a", "b"}, {"a^2", "b^2", "a b a^-1 b^-1"});
  add("Z2xZ4", {"a", "b"}, {"a^2", "b^4", "a b a^-1 b^-1"});
  add("Z2^3", {"a", "b", "c"},
      {"a^2", "b^2", "c^2", "a b a^-1 b^-1", "a c a^-1 c^-1", "b c b^-1 c^-1"});
  add("Z2^4", {"a", "b", "c", "d"},
      {"a^2", "b^2", "c^2", "d^2", "a b a^-1 b^-1", "a c a^-1 c^-1", "a d a^-1 d^-1",
       "b c b^-1 c^-1", "b d b^-1 d^-1", "c d c^-1 d^-1"});
  add("S3", {"a", "b"}, {"a^2", "b^3", "a b a b"});
  add("D8", {"r", "s"}, {"r^4", "s^2", "s r s r"});
  add("Q8", {"x", "y"}, {"x^2 y^-2", "y x y^-1 x"});
  add("Q16", {"x", "y"}, {"x^4 y^-2", "y x y^-1 x"});
  add("D12", {"r", "s"}, {"r^6", "s^2", "s r s r"});
  add("Dic12", {"a", "x"}, {"a^6", "x^2 a^-3", "x^-1 a x a"});
  add("A4", {"a", "b"}, {"a^2", "b^3", "a b a b a b"});
  add("S4", {"a", "b"}, {"a^2", "b^4", "a b a b a b"});
  add("L", {"w1", "w2", "w3", "w4", "t"},
      {"w1^2", "w2^2", "w3^2", "w4^2", "t^3", "w1 w2 w1^-1 w2^-1", "w1 w3 w1^-1 w3^-1",
       "w1 w4 w1^-1 w4^-1", "w2 w3 w2^-1 w3^-1", "w2 w4 w2^-1 w4^-1",
       "w3 w4 w3^-1 w4^-1", "t w1 t^-1 w2^-1", "t w2 t^-1 w2^-1 w1^-1",
       "t w3 t^-1 w4^-1", "t w4 t^-1 w4^-1 w3^-1"});
  return m;
}

struct ModelData {
  FiniteGroup group;
  Fingerprint print;
};

ModelData const& model_data(std::size_t i) {
  static std::once_flag once;
  static std::vector<std::unique_ptr<ModelData>> data;
  std::call_once(once, [] {
    for (auto const& m : group_models()) {
      auto t = todd_coxeter(m.presentation, {}, {100'000, 100'000});
      FiniteGroup g = permutation_group(t);
      auto fp = fingerprint(g);
      data.push_back(std::make_unique<ModelData>(ModelData{std::move(g), std::move(fp)}));
    }
  });
  return *data.at(i);
}

}  // namespace

std::vector<GroupModel> const& group_models() {
  static std::vector<GroupModel> const models = build_models();
  return models;
}

GroupModel const& group_model(std::string const& name) {
  for (auto const& m : group_models()) {
    if (m.name == name) return m;
  }
  throw UnknownModel(name);
}

std::optional<std::vector<Permutation>> find_isomorphism(Presentation const& model,
                                                         FiniteGroup const& g) {
  std::size_t n = g.order();
  auto mt = todd_coxeter(model, {}, {std::max<std::size_t>(4 * n, 1000), 100'000});
  if (mt.size() != n) return std::nullopt;
  std::size_t r = model.generator_count();
  if (n == 1) return std::vector<Permutation>(r, Permutation::identity(g.degree()));
  Table tab(g);
  std::vector<std::size_t> want(r);
  for (std::size_t i = 0; i < r; ++i) want[i] = mt.permutation(i).order();
  std::vector<std::size_t> elem_order(n);
  for (std::size_t e = 0; e < n; ++e) elem_order[e] = g.elements()[e].order();

  // assignment order: greedily complete as many relators as early as possible
  std::vector<std::size_t> seq;
  std::vector<bool> placed(r, false);
  std::vector<std::set<std::uint32_t>> rel_gens;
  for (auto const& w : model.relators()) {
    std::set<std::uint32_t> s;
    for (auto l : w.letters()) s.insert(l.gen());
    rel_gens.push_back(s);
  }
  std::vector<std::size_t> cand_count(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t e = 0; e < n; ++e) cand_count[i] += elem_order[e] == want[i];
  }
  while (seq.size() < r) {
    std::size_t best = r;
    std::pair<std::size_t, long> score{0, 0};
    for (std::size_t i = 0; i < r; ++i) {
      if (placed[i]) continue;
      std::size_t touching = 0;
      for (auto const& s : rel_gens) {
        if (!s.count(static_cast<std::uint32_t>(i))) continue;
        bool other_placed = true;
        for (auto x : s) {
          if (x != i && !placed[x]) other_placed = false;
        }
        if (other_placed && s.size() > 1) ++touching;
      }
      std::pair<std::size_t, long> sc{touching, -static_cast<long>(cand_count[i])};
      if (best == r || sc > score) {
        best = i;
        score = sc;
      }
    }
    placed[best] = true;
    seq.push_back(best);
  }
  // relators checked once their last generator (in seq order) is assigned
  std::vector<std::size_t> pos(r);
  for (std::size_t i = 0; i < r; ++i) pos[seq[i]] = i;
  std::vector<std::vector<std::size_t>> check_at(r);
  for (std::size_t k = 0; k < model.relators().size(); ++k) {
    std::size_t last = 0;
    for (auto x : rel_gens[k]) last = std::max(last, pos[x]);
    check_at[last].push_back(k);
  }
  std::vector<std::uint32_t> img(r, 0);
  auto eval = [&](Word const& w) {
    std::uint32_t x = 0;
    for (auto l : w.letters()) {
      auto y = img[l.gen()];
      x = tab(x, l.is_inverse() ? tab.inv[y] : y);
    }
    return x;
  };
  auto generates = [&] {
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> q{0};
    in[0] = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (auto s : img) {
        auto x = tab(q[i], s);
        if (!in[x]) {
          in[x] = true;
          q.push_back(x);
        }
      }
    }
    return q.size() == n;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == r) return generates();
    std::size_t gi = seq[depth];
    for (std::uint32_t e = 0; e < n; ++e) {
      if (elem_order[e] != want[gi]) continue;
      img[gi] = e;
      bool ok = true;
      for (auto k : check_at[depth]) {
        if (eval(model.relators()[k]) != 0) {
          ok = false;
          break;
        }
      }
      if (ok && search(depth + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  std::vector<Permutation> out;
  for (auto e : img) out.push_back(g.elements()[e]);
  return out;
}

std::string Identification::str() const {
  if (name.empty()) return "unknown (" + fingerprint.str() + ")";
  return name + (exact ? " (explicit isomorphism)" : " (fingerprint match)");
}

Identification identify(FiniteGroup const& g) {
  Identification id;
  id.fingerprint = fingerprint(g);
  auto const& models = group_models();
  for (std::size_t i = 0; i < models.size(); ++i) {
    auto const& md = model_data(i);
    if (md.print != id.fingerprint) continue;
    if (id.fingerprint.order <= 48) {
      auto iso = find_isomorphism(models[i].presentation, g);
      if (!iso) continue;
      id.name = models[i].name;
      id.exact = true;
      id.images = std::move(*iso);
      return id;
    }
    id.name = models[i].name;
    return id;
  }
  return id;
}

}  // namespace fpg
