#include "fpg/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

struct LettersHash {
  std::size_t operator()(Letters const& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto l : w) {
      h ^= l.column() + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators)
    : alphabet_(std::move(alphabet)) {
  for (auto& r : relators) {
    require_compatible(r.alphabet(), alphabet_);
    auto core = cyclically_reduce(r).core;
    if (!core.empty()) relators_.push_back(Word(alphabet_, core.letters()));
  }
}

Presentation::Presentation(std::vector<std::string> generators,
                           std::vector<std::string> const& relator_texts)
    : alphabet_(make_alphabet(std::move(generators))) {
  for (auto const& t : relator_texts) {
    auto core = cyclically_reduce(Word::parse(alphabet_, t)).core;
    if (!core.empty()) relators_.push_back(std::move(core));
  }
}

Presentation Presentation::parse(std::string_view text) {
  std::optional<AlphabetPtr> alphabet;
  std::vector<Word> rels;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (line.starts_with("gens:")) {
      if (alphabet) throw ParseError("second gens: line" + where);
      std::istringstream ns{std::string(line.substr(5))};
      std::vector<std::string> names;
      for (std::string n; ns >> n;) names.push_back(n);
      alphabet = make_alphabet(std::move(names));
    } else if (line.starts_with("rel:")) {
      if (!alphabet) throw ParseError("rel: before gens:" + where);
      rels.push_back(Word::parse(*alphabet, line.substr(4)));
    } else {
      throw ParseError("unrecognised line" + where);
    }
  }
  if (!alphabet) throw ParseError("missing gens: line");
  return Presentation(*alphabet, std::move(rels));
}

std::string Presentation::text() const {
  std::string out = "gens:";
  for (auto const& n : alphabet_->names()) out += " " + n;
  out += "\n";
  for (auto const& r : relators_) out += "rel: " + r.str() + "\n";
  return out;
}

Presentation Presentation::with_relators(std::vector<Word> const& extra) const {
  auto rels = relators_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Presentation(alphabet_, std::move(rels));
}

std::size_t PermHom::degree() const {
  return images.empty() ? 0 : images.front().degree();
}

Permutation PermHom::evaluate(Word const& w) const {
  require_compatible(w.alphabet(), source.alphabet());
  if (images.size() != source.generator_count()) {
    throw UnmappedGenerator("permutation images missing");
  }
  std::vector<Point> pts(degree());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Point>(i);
  std::vector<Permutation> inv;
  inv.reserve(images.size());
  for (auto const& p : images) inv.push_back(p.inverse());
  for (auto l : w.letters()) {
    auto const& p = l.is_inverse() ? inv[l.gen()] : images[l.gen()];
    for (auto& x : pts) x = p[x];
  }
  return Permutation(std::move(pts));
}

std::vector<RelatorVerdict> check_homomorphism(GroupHom const& h,
                                               WordDecider const* decider) {
  if (!decider) {
    throw OracleUnavailable("target presentation has no exact word-problem oracle");
  }
  require_compatible(h.images.source(), h.source.alphabet());
  require_compatible(h.images.target(), h.target.alphabet());
  require_compatible(decider->alphabet(), h.target.alphabet());
  std::vector<RelatorVerdict> out;
  auto const& rels = h.source.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out.push_back({i, decider->is_trivial(h.images(rels[i]))});
  }
  return out;
}

std::vector<RelatorVerdict> check_homomorphism(PermHom const& h) {
  std::vector<RelatorVerdict> out;
  auto const& rels = h.source.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out.push_back({i, h.evaluate(rels[i]).is_identity()});
  }
  return out;
}

bool all_trivial(std::vector<RelatorVerdict> const& v) {
  return std::all_of(v.begin(), v.end(), [](auto const& x) { return x.trivial; });
}

Letters canonical_relator(std::span<Letter const> w) {
  Letters core = cyclically_reduce_letters(w);
  if (core.empty()) return core;
  Letters inv = inverse_letters(core);
  std::size_t n = core.size();
  Letters best;
  auto consider = [&](Letters const& base) {
    for (std::size_t s = 0; s < n; ++s) {
      bool less = best.empty();
      if (!less) {
        for (std::size_t i = 0; i < n; ++i) {
          auto a = base[(s + i) % n];
          if (a != best[i]) {
            less = a < best[i];
            break;
          }
        }
      }
      if (less) {
        best.assign(base.begin() + s, base.end());
        best.insert(best.end(), base.begin(), base.begin() + s);
      }
    }
  };
  consider(core);
  consider(inv);
  return best;
}

namespace {

class Tietze {
 public:
  Tietze(Presentation const& p, TietzeBudget budget)
      : p_(p), budget_(budget), alive_(p.generator_count(), true) {
    for (auto const& r : p.relators()) rels_.push_back(r.letters());
  }

  TietzeResult run() {
    for (std::size_t pass = 0; pass < budget_.max_passes; ++pass) {
      bool changed = normalize();
      changed |= eliminate();
      changed |= shorten();
      if (!changed) break;
    }
    normalize();
    return finish();
  }

 private:
  static void cyc(Letters& w) { w = cyclically_reduce_letters(w); }

  bool normalize() {
    bool changed = false;
    std::vector<Letters> out;
    std::unordered_set<Letters, LettersHash> seen;
    for (auto& r : rels_) {
      auto before = r.size();
      cyc(r);
      if (r.size() != before) changed = true;
      if (r.empty()) {
        changed = true;
        continue;
      }
      Letters key = r.size() <= 256 ? canonical_relator(r) : r;
      if (!seen.insert(key).second) {
        changed = true;
        continue;
      }
      out.push_back(std::move(r));
    }
    rels_ = std::move(out);
    return changed;
  }

  bool eliminate() {
    bool any = false;
    std::set<std::pair<std::size_t, std::uint32_t>> rejected;
    while (true) {
      std::vector<std::size_t> occ(alive_.size(), 0);
      for (auto const& r : rels_) {
        for (auto l : r) ++occ[l.gen()];
      }
      // pick the candidate with the least growth
      long long best_cost = 0;
      std::size_t best_r = 0;
      std::uint32_t best_g = 0;
      bool found = false;
      std::vector<std::size_t> local(alive_.size(), 0);
      for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
        auto const& r = rels_[ri];
        for (auto l : r) ++local[l.gen()];
        for (auto l : r) {
          if (local[l.gen()] != 1 || rejected.count({ri, l.gen()})) continue;
          long long cost = static_cast<long long>(occ[l.gen()] - 1) *
                               (static_cast<long long>(r.size()) - 2) -
                           static_cast<long long>(r.size());
          if (!found || cost < best_cost ||
              (cost == best_cost && std::make_pair(ri, l.gen()) <
                                        std::make_pair(best_r, best_g))) {
            best_cost = cost;
            best_r = ri;
            best_g = l.gen();
            found = true;
          }
        }
        for (auto l : r) local[l.gen()] = 0;
      }
      if (!found) break;

      Letters const& r = rels_[best_r];
      std::size_t pos = 0;
      while (r[pos].gen() != best_g) ++pos;
      // r rotated to g^e w; so g = w^-1 when e = +1, g = w when e = -1
      Letters w;
      for (std::size_t i = 1; i < r.size(); ++i) w.push_back(r[(pos + i) % r.size()]);
      Letters image = r[pos].is_inverse() ? w : inverse_letters(w);
      Letters image_inv = inverse_letters(image);

      std::vector<Letters> next;
      next.reserve(rels_.size());
      bool too_long = false;
      for (std::size_t ri = 0; ri < rels_.size() && !too_long; ++ri) {
        if (ri == best_r) continue;
        Letters out;
        for (auto l : rels_[ri]) {
          if (l.gen() == best_g) {
            auto const& im = l.is_inverse() ? image_inv : image;
            for (auto x : im) {
              if (!out.empty() && out.back() == x.inverse()) {
                out.pop_back();
              } else {
                out.push_back(x);
              }
            }
          } else if (!out.empty() && out.back() == l.inverse()) {
            out.pop_back();
          } else {
            out.push_back(l);
          }
        }
        cyc(out);
        if (out.size() > budget_.max_length) too_long = true;
        next.push_back(std::move(out));
      }
      if (too_long) {
        rejected.insert({best_r, best_g});
        continue;
      }
      rejected.clear();
      alive_[best_g] = false;
      elims_.push_back({best_g, std::move(image)});
      rels_.clear();
      for (auto& x : next) {
        if (!x.empty()) rels_.push_back(std::move(x));
      }
      any = true;
    }
    return any;
  }

  // Replace a piece of a relator by the shorter complement of a short
  // relator it overlaps in more than half.
  bool shorten() {
    constexpr std::size_t kShort = 12;
    struct Piece {
      Letters full;
      std::size_t k;
    };
    std::unordered_map<Letters, std::vector<Piece>, LettersHash> index;
    std::vector<std::size_t> prefix_lengths;
    for (auto const& s : rels_) {
      if (s.size() > kShort) continue;
      std::size_t m = s.size();
      std::size_t k = m / 2 + 1;
      for (auto const& base : {s, inverse_letters(s)}) {
        for (std::size_t rot = 0; rot < m; ++rot) {
          Letters q(base.begin() + rot, base.end());
          q.insert(q.end(), base.begin(), base.begin() + rot);
          index[Letters(q.begin(), q.begin() + k)].push_back({q, k});
        }
      }
      if (std::find(prefix_lengths.begin(), prefix_lengths.end(), k) ==
          prefix_lengths.end()) {
        prefix_lengths.push_back(k);
      }
    }
    if (index.empty()) return false;
    std::sort(prefix_lengths.begin(), prefix_lengths.end());
    bool any = false;
    Letters key;
    // One left-to-right sweep over r read linearly; after a substitution the
    // sweep resumes just before the edit.
    auto sweep = [&](Letters& r) {
      bool changed = false;
      std::size_t start = 0;
      while (start < r.size()) {
        bool replaced = false;
        std::size_t n = r.size();
        for (std::size_t k : prefix_lengths) {
          if (start + k > n) break;
          key.assign(r.begin() + start, r.begin() + start + k);
          auto it = index.find(key);
          if (it == index.end()) continue;
          for (auto const& piece : it->second) {
            std::size_t m = piece.full.size();
            std::size_t len = k;
            while (len < m && start + len < n && r[start + len] == piece.full[len]) ++len;
            if (2 * len <= m) continue;
            Letters nr(r.begin(), r.begin() + start);
            for (auto it2 = piece.full.rbegin(); it2 != piece.full.rend() - len; ++it2) {
              Letter x = it2->inverse();
              if (!nr.empty() && nr.back() == x.inverse()) {
                nr.pop_back();
              } else {
                nr.push_back(x);
              }
            }
            for (std::size_t i = start + len; i < n; ++i) {
              if (!nr.empty() && nr.back() == r[i].inverse()) {
                nr.pop_back();
              } else {
                nr.push_back(r[i]);
              }
            }
            std::size_t same = 0;
            while (same < nr.size() && same < start && nr[same] == r[same]) ++same;
            r = std::move(nr);
            start = same > kShort ? same - kShort : 0;
            replaced = changed = true;
            break;
          }
          if (replaced) break;
        }
        if (!replaced) ++start;
      }
      return changed;
    };
    // sources stay fixed for the whole pass; only longer relators change
    for (auto& r : rels_) {
      if (r.size() <= kShort) continue;
      // a second sweep on the half-rotated word catches pieces that wrap
      for (int quiet = 0; quiet < 2 && !r.empty();) {
        bool changed = sweep(r);
        cyc(r);
        std::rotate(r.begin(), r.begin() + r.size() / 2, r.end());
        if (changed) {
          any = true;
          quiet = 0;
        } else {
          ++quiet;
        }
      }
    }
    return any;
  }

  TietzeResult finish() {
    std::vector<std::string> names;
    std::vector<std::uint32_t> newindex(alive_.size(), 0);
    for (std::size_t g = 0; g < alive_.size(); ++g) {
      if (alive_[g]) {
        newindex[g] = static_cast<std::uint32_t>(names.size());
        names.push_back(p_.alphabet()->name(g));
      }
    }
    auto alpha = make_alphabet(names);
    auto remap = [&](Letters const& w) {
      Letters out;
      out.reserve(w.size());
      for (auto l : w) out.emplace_back(newindex[l.gen()], l.is_inverse());
      return out;
    };
    std::vector<Word> rels;
    for (auto const& r : rels_) rels.emplace_back(alpha, remap(r));

    std::vector<Letters> final_images(alive_.size());
    for (std::size_t g = 0; g < alive_.size(); ++g) {
      if (alive_[g]) final_images[g] = {Letter(newindex[g], false)};
    }
    for (auto it = elims_.rbegin(); it != elims_.rend(); ++it) {
      Letters out;
      for (auto l : it->second) {
        auto const& im = final_images[l.gen()];
        auto piece = l.is_inverse() ? inverse_letters(im) : im;
        for (auto x : piece) {
          if (!out.empty() && out.back() == x.inverse()) {
            out.pop_back();
          } else {
            out.push_back(x);
          }
        }
      }
      final_images[it->first] = std::move(out);
    }
    GeneratorMap dict(p_.alphabet(), alpha);
    for (std::size_t g = 0; g < alive_.size(); ++g) {
      dict.set(g, Word(alpha, final_images[g]));
    }
    return {Presentation(alpha, std::move(rels)), std::move(dict)};
  }

  Presentation const& p_;
  TietzeBudget budget_;
  std::vector<bool> alive_;
  std::vector<Letters> rels_;
  std::vector<std::pair<std::uint32_t, Letters>> elims_;
};

}  // namespace

TietzeResult tietze_simplify(Presentation const& p, TietzeBudget budget) {
  return Tietze(p, budget).run();
}

}  // namespace fpg
