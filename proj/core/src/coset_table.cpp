#include "fpg/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "fpg/errors.hpp"

namespace fpg {

CosetTable::CosetTable(AlphabetPtr alphabet, std::size_t n, std::vector<Coset> data,
                       std::vector<Word> subgroup)
    : alphabet_(std::move(alphabet)),
      n_(n),
      data_(std::move(data)),
      subgroup_(std::move(subgroup)) {
  std::size_t k = columns();
  if (data_.size() != n_ * k) throw std::invalid_argument("coset table size mismatch");
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t x = 0; x < k; ++x) {
      Coset d = data_[c * k + x];
      if (d >= n_ || data_[d * k + (x ^ 1)] != c) {
        throw std::invalid_argument("coset table incomplete or inconsistent");
      }
    }
  }
}

Coset CosetTable::trace(Coset c, std::span<Letter const> w) const {
  std::size_t k = columns();
  for (auto l : w) c = data_[c * k + l.column()];
  return c;
}

bool CosetTable::satisfies(Presentation const& p) const {
  require_compatible(p.alphabet(), alphabet_);
  for (auto const& r : p.relators()) {
    for (Coset c = 0; c < n_; ++c) {
      if (trace(c, r.letters()) != c) return false;
    }
  }
  for (auto const& w : subgroup_) {
    if (trace(w) != 0) return false;
  }
  return true;
}

namespace {

std::vector<Coset> bfs_order(std::vector<Coset> const& data, std::size_t n,
                             std::size_t k) {
  std::vector<Coset> order;
  std::vector<Coset> number(n, static_cast<Coset>(-1));
  order.reserve(n);
  order.push_back(0);
  number[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      Coset d = data[order[i] * k + x];
      if (number[d] == static_cast<Coset>(-1)) {
        number[d] = static_cast<Coset>(order.size());
        order.push_back(d);
      }
    }
  }
  return number;
}

}  // namespace

bool CosetTable::is_standardized() const {
  auto number = bfs_order(data_, n_, columns());
  for (std::size_t c = 0; c < n_; ++c) {
    if (number[c] != c) return false;
  }
  return true;
}

CosetTable CosetTable::standardized() const {
  std::size_t k = columns();
  auto number = bfs_order(data_, n_, k);
  std::vector<Coset> out(data_.size());
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t x = 0; x < k; ++x) out[number[c] * k + x] = number[data_[c * k + x]];
  }
  return CosetTable(alphabet_, n_, std::move(out), subgroup_);
}

Permutation CosetTable::permutation(std::size_t gen) const {
  std::vector<Point> img(n_);
  for (Coset c = 0; c < n_; ++c) img[c] = data_[c * columns() + 2 * gen];
  return Permutation(std::move(img));
}

std::vector<Permutation> CosetTable::permutations() const {
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < alphabet_->size(); ++g) out.push_back(permutation(g));
  return out;
}

namespace {

constexpr std::int64_t kUndef = -1;

// Hasse-Lisowski-Thompson enumeration with Felsch-style deduction
// processing, union-find coincidences, and lookahead plus compaction when
// the coset space fills up.
class Enumerator {
 public:
  Enumerator(Presentation const& p, std::vector<Word> const& subgroup,
             EnumerationLimits limits)
      : p_(p), subgroup_(subgroup), limits_(limits), k_(2 * p.generator_count()) {
    for (auto const& r : p.relators()) {
      std::vector<std::uint32_t> cols;
      for (auto l : r.letters()) cols.push_back(l.column());
      rels_.push_back(cols);
    }
    rotations_.resize(k_);
    for (auto const& r : rels_) {
      for (std::size_t s = 0; s < r.size(); ++s) {
        std::vector<std::uint32_t> rot(r.begin() + s, r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + s);
        rotations_[rot.front()].push_back(rot);
      }
    }
    for (auto& v : rotations_) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto const& w : subgroup) {
      require_compatible(w.alphabet(), p.alphabet());
      std::vector<std::uint32_t> cols;
      for (auto l : w.letters()) cols.push_back(l.column());
      gens_.push_back(cols);
    }
    max_rel_ = 1;
    for (auto const& r : rels_) max_rel_ = std::max(max_rel_, r.size());
    for (auto const& r : gens_) max_rel_ = std::max(max_rel_, r.size());
    if (k_ == 0) return;
    new_coset();
  }

  CosetTable run() {
    if (k_ == 0) return CosetTable(p_.alphabet(), 1, {}, subgroup_);
    for (auto const& w : gens_) {
      ensure_space(0);
      scan_and_fill(0, w, true);
    }
    process_deductions();
    for (std::size_t a = 0; a < n_; ++a) {
      a = ensure_space(a);
      if (!live(a)) continue;
      for (auto const& r : rels_) {
        scan_and_fill(a, r, true);
        if (!live(a)) break;
      }
      process_deductions();
      if (!live(a)) continue;
      for (std::size_t x = 0; x < k_; ++x) {
        if (at(a, x) == kUndef) define(a, x);
      }
      process_deductions();
    }
    compact(0);
    std::vector<Coset> data(n_ * k_);
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (tab_[i] == kUndef) throw EnumerationExceeded("incomplete table after enumeration");
      data[i] = static_cast<Coset>(tab_[i]);
    }
    CosetTable t(p_.alphabet(), n_, std::move(data), subgroup_);
    t = t.standardized();
    if (!t.satisfies(p_)) throw std::logic_error("enumeration produced an invalid table");
    return t;
  }

 private:
  std::int64_t& at(std::size_t c, std::size_t x) { return tab_[c * k_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t new_coset() {
    std::size_t c = n_++;
    tab_.resize(n_ * k_, kUndef);
    parent_.push_back(c);
    ++active_;
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    if (n_ >= limits_.max_cosets) {
      throw EnumerationExceeded("coset limit " + std::to_string(limits_.max_cosets) +
                                " reached");
    }
    std::size_t d = new_coset();
    at(c, x) = static_cast<std::int64_t>(d);
    at(d, x ^ 1) = static_cast<std::int64_t>(c);
    push_deduction(c, x);
  }

  void push_deduction(std::size_t c, std::size_t x) {
    if (deductions_.size() >= limits_.max_deductions) {
      overflowed_ = true;
      return;
    }
    deductions_.push_back({c, x});
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --active_;
    queue.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t g = queue[i];
      for (std::size_t x = 0; x < k_; ++x) {
        if (at(g, x) == kUndef) continue;
        auto d = static_cast<std::size_t>(at(g, x));
        at(d, x ^ 1) = kUndef;
        std::size_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, static_cast<std::size_t>(at(mu, x)), queue);
        } else if (at(nu, x ^ 1) != kUndef) {
          merge(mu, static_cast<std::size_t>(at(nu, x ^ 1)), queue);
        } else {
          at(mu, x) = static_cast<std::int64_t>(nu);
          at(nu, x ^ 1) = static_cast<std::int64_t>(mu);
          push_deduction(mu, x);
        }
      }
    }
  }

  // Returns false when scanning stalled without defining.
  void scan_and_fill(std::size_t a, std::vector<std::uint32_t> const& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = a, b = a;
    std::size_t i = 0, j = w.size();  // unscanned part is w[i, j)
    while (true) {
      while (i < j && at(f, w[i]) != kUndef) f = static_cast<std::size_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1) != kUndef) {
        b = static_cast<std::size_t>(at(b, w[j - 1] ^ 1));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = static_cast<std::int64_t>(b);
        at(b, w[i] ^ 1) = static_cast<std::int64_t>(f);
        push_deduction(f, w[i]);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void process_deductions() {
    if (overflowed_) {
      deductions_.clear();
      overflowed_ = false;
      return;
    }
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c) || at(c, x) == kUndef) continue;
      for (auto const& rot : rotations_[x]) {
        if (!live(c)) break;
        scan_and_fill(c, rot, false);
      }
      if (!live(c) || at(c, x) == kUndef) continue;
      auto d = static_cast<std::size_t>(at(c, x));
      for (auto const& rot : rotations_[x ^ 1]) {
        if (!live(d)) break;
        scan_and_fill(d, rot, false);
      }
      if (overflowed_) {
        deductions_.clear();
        overflowed_ = false;
      }
    }
  }

  // Makes room for one full round at coset a; returns a's new number.
  std::size_t ensure_space(std::size_t a) {
    std::size_t need = max_rel_ * (rels_.size() + 1) + k_;
    if (n_ + need <= limits_.max_cosets) return a;
    for (std::size_t c = 0; c < n_; ++c) {
      for (auto const& r : rels_) {
        if (!live(c)) break;
        scan_and_fill(c, r, false);
      }
      process_deductions();
    }
    a = compact(a);
    if (n_ + need > limits_.max_cosets) {
      throw EnumerationExceeded("coset limit " + std::to_string(limits_.max_cosets) +
                                " reached with " + std::to_string(active_) +
                                " live cosets");
    }
    return a;
  }

  // Renumbers live cosets preserving order; returns the new number of the
  // first live coset at or after a.
  std::size_t compact(std::size_t a) {
    std::vector<std::int64_t> number(n_, kUndef);
    std::size_t m = 0;
    std::size_t new_a = kUndef;
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == a) new_a = m;
      if (live(c)) number[c] = static_cast<std::int64_t>(m++);
    }
    if (new_a == static_cast<std::size_t>(kUndef)) new_a = m;
    std::vector<std::int64_t> tab(m * k_, kUndef);
    for (std::size_t c = 0; c < n_; ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < k_; ++x) {
        auto d = at(c, x);
        if (d != kUndef) {
          tab[static_cast<std::size_t>(number[c]) * k_ + x] =
              number[rep(static_cast<std::size_t>(d))];
        }
      }
    }
    tab_ = std::move(tab);
    n_ = m;
    parent_.resize(m);
    for (std::size_t c = 0; c < m; ++c) parent_[c] = c;
    active_ = m;
    deductions_.clear();
    return new_a;
  }

  Presentation const& p_;
  std::vector<Word> subgroup_;
  EnumerationLimits limits_;
  std::size_t k_;
  std::vector<std::vector<std::uint32_t>> rels_, gens_;
  std::vector<std::vector<std::vector<std::uint32_t>>> rotations_;
  std::size_t max_rel_ = 1;
  std::vector<std::int64_t> tab_;
  std::vector<std::size_t> parent_;
  std::size_t n_ = 0, active_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> deductions_;
  bool overflowed_ = false;
};

}  // namespace

CosetTable todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup,
                        EnumerationLimits limits) {
  return Enumerator(p, subgroup, limits).run();
}

CosetTable kernel_coset_table(PermHom const& h) {
  auto verdicts = check_homomorphism(h);
  for (auto const& v : verdicts) {
    if (!v.trivial) {
      throw NotAHomomorphism("relator " + h.source.relators()[v.relator].str() +
                             " has nontrivial image");
    }
  }
  std::size_t ngens = h.source.generator_count();
  std::size_t k = 2 * ngens;
  std::vector<std::vector<Point>> acts;
  for (auto const& g : h.images) {
    acts.push_back(g.images());
    acts.push_back(g.inverse().images());
  }
  std::size_t deg = h.degree();
  std::unordered_map<std::vector<Point>, Coset, PermutationHash> index;
  std::vector<std::vector<Point>> elems;
  auto id = Permutation::identity(deg).images();
  index.emplace(id, 0);
  elems.push_back(id);
  std::vector<Coset> data;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) {
      std::vector<Point> next(deg);
      for (std::size_t q = 0; q < deg; ++q) next[q] = acts[x][elems[i][q]];
      auto [it, fresh] = index.emplace(next, static_cast<Coset>(elems.size()));
      if (fresh) elems.push_back(std::move(next));
      data.push_back(it->second);
    }
  }
  return CosetTable(h.source.alphabet(), elems.size(), std::move(data));
}

std::vector<Word> schreier_transversal(CosetTable const& t) {
  std::vector<std::optional<Letters>> reps(t.size());
  reps[0] = Letters{};
  std::vector<Coset> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Coset c = queue[i];
    for (std::uint32_t x = 0; x < t.columns(); ++x) {
      Letter l = Letter::from_column(x);
      Coset d = t.act(c, l);
      if (!reps[d]) {
        Letters w = *reps[c];
        w.push_back(l);
        reps[d] = std::move(w);
        queue.push_back(d);
      }
    }
  }
  std::vector<Word> out;
  for (auto& r : reps) out.emplace_back(t.alphabet(), std::move(*r));
  return out;
}

TransversalCheck validate_transversal(CosetTable const& t,
                                      std::vector<Word> const& candidate) {
  TransversalCheck out;
  if (candidate.size() != t.size()) {
    out.reason = "expected " + std::to_string(t.size()) + " words, got " +
                 std::to_string(candidate.size());
    return out;
  }
  std::vector<std::optional<Word>> slots(t.size());
  std::set<Letters> words;
  for (auto const& w : candidate) {
    require_compatible(w.alphabet(), t.alphabet());
    Coset c = t.trace(w);
    if (slots[c]) {
      out.reason = "'" + w.str() + "' and '" + slots[c]->str() + "' reach coset " +
                   std::to_string(c + 1);
      return out;
    }
    slots[c] = w;
    words.insert(w.letters());
  }
  for (auto const& w : candidate) {
    auto const& l = w.letters();
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!words.count(Letters(l.begin(), l.begin() + k))) {
        out.reason = "prefix of '" + w.str() + "' of length " + std::to_string(k) +
                     " missing";
        return out;
      }
    }
  }
  out.accepted = true;
  for (auto& s : slots) out.by_coset.push_back(std::move(*s));
  return out;
}

bool CosetTableDecider::is_trivial(Word const& w) const {
  require_compatible(w.alphabet(), table_->alphabet());
  for (Coset c = 0; c < table_->size(); ++c)
    if (table_->trace(c, w.letters()) != c) return false;
  return true;
}

}  // namespace fpg
