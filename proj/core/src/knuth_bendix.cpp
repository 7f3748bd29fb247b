#include <algorithm>
#include <deque>

#include "fpg/errors.hpp"
#include "fpg/wp.hpp"

namespace fpg {

namespace {

bool shortlex_greater(Letters const& a, Letters const& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

class Trie {
 public:
  explicit Trie(std::size_t k) : k_(k) { nodes_.push_back(Node{std::vector<std::int32_t>(k, -1), -1}); }

  void insert(Letters const& lhs, std::int32_t rule) {
    std::size_t n = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      auto& nx = nodes_[n].next[it->column()];
      if (nx < 0) {
        nx = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(Node{std::vector<std::int32_t>(k_, -1), -1});
      }
      n = static_cast<std::size_t>(nodes_[n].next[it->column()]);
    }
    nodes_[n].rule = rule;
  }

  void remove(Letters const& lhs) {
    std::size_t n = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      auto nx = nodes_[n].next[it->column()];
      if (nx < 0) return;
      n = static_cast<std::size_t>(nx);
    }
    nodes_[n].rule = -1;
  }

  // A rule whose left-hand side is a suffix of w, or -1.
  std::int32_t suffix_match(Letters const& w) const {
    std::size_t n = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto nx = nodes_[n].next[it->column()];
      if (nx < 0) return -1;
      n = static_cast<std::size_t>(nx);
      if (nodes_[n].rule >= 0) return nodes_[n].rule;
    }
    return -1;
  }

 private:
  struct Node {
    std::vector<std::int32_t> next;
    std::int32_t rule;
  };
  std::size_t k_;
  std::vector<Node> nodes_;
};

Letters rewrite(Trie const& trie, std::vector<std::pair<Letters, Letters>> const& rules,
                std::span<Letter const> w) {
  Letters out;
  Letters todo(w.rbegin(), w.rend());
  while (!todo.empty()) {
    out.push_back(todo.back());
    todo.pop_back();
    auto r = trie.suffix_match(out);
    if (r < 0) continue;
    auto const& [lhs, rhs] = rules[static_cast<std::size_t>(r)];
    out.resize(out.size() - lhs.size());
    todo.insert(todo.end(), rhs.rbegin(), rhs.rend());
  }
  return out;
}

class Completion {
 public:
  Completion(Presentation const& p, KnuthBendixCaps caps)
      : p_(p), caps_(caps), trie_(2 * p.generator_count()) {}

  RewritingSystem run() {
    for (std::uint32_t g = 0; g < p_.generator_count(); ++g) {
      pending_.push_back({{Letter(g, false), Letter(g, true)}, {}});
      pending_.push_back({{Letter(g, true), Letter(g, false)}, {}});
    }
    for (auto const& r : p_.relators()) {
      auto const& l = r.letters();
      std::size_t k = (l.size() + 2) / 2;
      Letters u(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
      Letters v = inverse_letters(std::span<Letter const>(l).subspan(k));
      pending_.push_back({u, v});
    }
    flush();
    for (std::size_t i = 0; i < rules_.size() && !capped_; ++i) {
      for (std::size_t j = 0; j <= i && !capped_; ++j) {
        if (!active_[i]) break;
        if (!active_[j]) continue;
        overlaps(i, j);
        if (i != j && active_[i] && active_[j]) overlaps(j, i);
        flush();
      }
    }
    std::vector<std::pair<Letters, Letters>> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (active_[i]) out.push_back(rules_[i]);
    }
    std::vector<std::pair<Letters, Letters>> final_rules;
    for (auto& [l, r] : out) final_rules.push_back({l, reduce(r)});
    std::sort(final_rules.begin(), final_rules.end(), [](auto const& a, auto const& b) {
      return shortlex_greater(b.first, a.first);
    });
    return RewritingSystem(p_.alphabet(), std::move(final_rules),
                           capped_ ? RewritingSystem::Status::Capped
                                   : RewritingSystem::Status::Completed);
  }

 private:
  Letters reduce(std::span<Letter const> w) const { return rewrite(trie_, rules_, w); }

  // a's suffix overlapping b's prefix
  void overlaps(std::size_t i, std::size_t j) {
    Letters const a = rules_[i].first;
    Letters const b = rules_[j].first;
    std::size_t lim = std::min(a.size(), b.size());
    for (std::size_t o = 1; o < lim; ++o) {
      if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(o), a.end(), b.begin())) continue;
      Letters x = rules_[i].second;
      x.insert(x.end(), b.begin() + static_cast<std::ptrdiff_t>(o), b.end());
      Letters y(a.begin(), a.end() - static_cast<std::ptrdiff_t>(o));
      y.insert(y.end(), rules_[j].second.begin(), rules_[j].second.end());
      pending_.push_back({std::move(x), std::move(y)});
    }
  }

  void flush() {
    while (!pending_.empty() && !capped_) {
      auto [u, v] = std::move(pending_.front());
      pending_.pop_front();
      add(std::move(u), std::move(v));
    }
  }

  void add(Letters u, Letters v) {
    u = reduce(u);
    v = reduce(v);
    if (u == v) return;
    if (!shortlex_greater(u, v)) std::swap(u, v);
    if (u.size() > caps_.max_lhs) {
      capped_ = true;
      return;
    }
    if (live_ >= caps_.max_rules) {
      capped_ = true;
      return;
    }
    auto idx = static_cast<std::int32_t>(rules_.size());
    // rules whose left side contains the new one are retired and re-queued
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      if (!active_[j]) continue;
      auto const& l = rules_[j].first;
      if (l.size() >= u.size() && std::search(l.begin(), l.end(), u.begin(), u.end()) != l.end()) {
        active_[j] = false;
        --live_;
        trie_.remove(l);
        pending_.push_back(rules_[j]);
      }
    }
    trie_.insert(u, idx);
    rules_.push_back({std::move(u), std::move(v)});
    active_.push_back(true);
    ++live_;
  }

  Presentation const& p_;
  KnuthBendixCaps caps_;
  Trie trie_;
  std::vector<std::pair<Letters, Letters>> rules_;
  std::vector<bool> active_;
  std::size_t live_ = 0;
  std::deque<std::pair<Letters, Letters>> pending_;
  bool capped_ = false;
};

}  // namespace

RewritingSystem::RewritingSystem(AlphabetPtr alphabet,
                                 std::vector<std::pair<Letters, Letters>> rules,
                                 Status status)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), status_(status) {
  std::size_t k = 2 * alphabet_->size();
  trie_.push_back(Node{std::vector<std::int32_t>(k, -1), -1});
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    std::size_t n = 0;
    auto const& lhs = rules_[r].first;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      auto nx = trie_[n].next[it->column()];
      if (nx < 0) {
        nx = static_cast<std::int32_t>(trie_.size());
        trie_[n].next[it->column()] = nx;
        trie_.push_back(Node{std::vector<std::int32_t>(k, -1), -1});
      }
      n = static_cast<std::size_t>(nx);
    }
    if (trie_[n].rule < 0) trie_[n].rule = static_cast<std::int32_t>(r);
  }
}

Letters RewritingSystem::reduce(std::span<Letter const> w) const {
  Letters out;
  Letters todo(w.rbegin(), w.rend());
  while (!todo.empty()) {
    out.push_back(todo.back());
    todo.pop_back();
    std::size_t n = 0;
    std::int32_t hit = -1;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      auto nx = trie_[n].next[it->column()];
      if (nx < 0) break;
      n = static_cast<std::size_t>(nx);
      if (trie_[n].rule >= 0) {
        hit = trie_[n].rule;
        break;
      }
    }
    if (hit < 0) continue;
    auto const& [lhs, rhs] = rules_[static_cast<std::size_t>(hit)];
    out.resize(out.size() - lhs.size());
    todo.insert(todo.end(), rhs.rbegin(), rhs.rend());
  }
  return out;
}

Word RewritingSystem::normal_form(Word const& w) const {
  require_compatible(w.alphabet(), alphabet_);
  return Word(alphabet_, reduce(w.letters()));
}

namespace {

template <class F>
void walk_irreducible(RewritingSystem const& rws, std::size_t max_length, F&& level) {
  std::size_t k = 2 * rws.alphabet()->size();
  std::vector<Letters> current{Letters{}};
  for (std::size_t len = 0; len <= max_length && !current.empty(); ++len) {
    if (!level(len, current.size())) return;
    std::vector<Letters> next;
    for (auto const& w : current) {
      for (std::uint32_t c = 0; c < k; ++c) {
        Letters x = w;
        x.push_back(Letter::from_column(c));
        // w is irreducible, so only a suffix can match
        if (rws.reduce(x) == x) next.push_back(std::move(x));
      }
    }
    current = std::move(next);
  }
}

}  // namespace

std::optional<std::size_t> RewritingSystem::count_normal_forms(std::size_t limit) const {
  std::size_t total = 0;
  bool over = false;
  bool finished = false;
  walk_irreducible(*this, static_cast<std::size_t>(-1) / 2,
                   [&](std::size_t, std::size_t count) {
                     if (count == 0) {
                       finished = true;
                       return false;
                     }
                     total += count;
                     if (total > limit) {
                       over = true;
                       return false;
                     }
                     return true;
                   });
  (void)finished;
  if (over) return std::nullopt;
  return total;
}

std::vector<std::size_t> RewritingSystem::growth(std::size_t max_length) const {
  std::vector<std::size_t> out;
  walk_irreducible(*this, max_length, [&](std::size_t, std::size_t count) {
    out.push_back(count);
    return true;
  });
  out.resize(max_length + 1, 0);
  return out;
}

RewritingSystem knuth_bendix(Presentation const& p, KnuthBendixCaps caps) {
  return Completion(p, caps).run();
}

}  // namespace fpg
