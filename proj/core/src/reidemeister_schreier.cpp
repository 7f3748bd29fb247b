#include "fpg/reidemeister_schreier.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "fpg/errors.hpp"

namespace fpg {

SchreierGenerators::SchreierGenerators(std::shared_ptr<CosetTable const> table,
                                       std::vector<Word> const& trans)
    : table_(std::move(table)) {
  auto check = validate_transversal(*table_, trans);
  if (!check.accepted) throw InvalidTransversal(check.reason);
  reps_ = std::move(check.by_coset);
  auto const& amb = table_->alphabet();
  std::size_t ngens = amb->size();
  std::vector<std::string> names;
  slot_.assign(table_->size() * ngens, -1);
  for (Coset c = 0; c < table_->size(); ++c) {
    for (std::uint32_t g = 0; g < ngens; ++g) {
      Coset d = table_->act(c, Letter(g, false));
      Word w = reps_[c] * Word::generator(amb, g) * reps_[d].inverse();
      if (w.empty()) continue;
      slot_[c * ngens + g] = static_cast<std::int64_t>(origin_.size());
      origin_.push_back({c, g});
      dictionary_.push_back(std::move(w));
      names.push_back(amb->name(g) + "@" + std::to_string(c + 1));
    }
  }
  alphabet_ = make_alphabet(std::move(names));
}

std::optional<std::uint32_t> SchreierGenerators::index(Coset c, std::size_t gen) const {
  auto s = slot_.at(c * table_->alphabet()->size() + gen);
  if (s < 0) return std::nullopt;
  return static_cast<std::uint32_t>(s);
}

Letters SchreierGenerators::rewrite_from(Coset c, std::span<Letter const> w,
                                         Coset& end) const {
  std::size_t ngens = table_->alphabet()->size();
  Letters out;
  auto push = [&](Letter l) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  };
  for (auto l : w) {
    if (l.is_inverse()) {
      Coset d = table_->act(c, l);
      auto s = slot_[d * ngens + l.gen()];
      if (s >= 0) push(Letter(static_cast<std::uint32_t>(s), true));
      c = d;
    } else {
      auto s = slot_[c * ngens + l.gen()];
      if (s >= 0) push(Letter(static_cast<std::uint32_t>(s), false));
      c = table_->act(c, l);
    }
  }
  end = c;
  return out;
}

Word SchreierGenerators::rewrite(Word const& w) const {
  require_compatible(w.alphabet(), table_->alphabet());
  Coset end = 0;
  auto letters = rewrite_from(0, w.letters(), end);
  if (end != 0) {
    throw NotInSubgroup("'" + w.str() + "' ends at coset " + std::to_string(end + 1));
  }
  return Word(alphabet_, std::move(letters));
}

SubgroupPresentation subgroup_presentation(Presentation const& ambient,
                                           std::shared_ptr<CosetTable const> table,
                                           std::vector<Word> const& trans) {
  require_compatible(ambient.alphabet(), table->alphabet());
  auto sg = std::make_shared<SchreierGenerators const>(table, trans);
  std::vector<Word> rels;
  for (auto const& r : ambient.relators()) {
    for (Coset c = 0; c < table->size(); ++c) {
      Coset end = 0;
      auto letters = sg->rewrite_from(c, r.letters(), end);
      if (end != c) {
        throw NotAHomomorphism("relator " + r.str() + " moves coset " +
                               std::to_string(c + 1));
      }
      rels.emplace_back(sg->alphabet(), std::move(letters));
    }
  }
  std::size_t raw = rels.size();
  return {Presentation(sg->alphabet(), std::move(rels)), ambient, sg, raw};
}

SubgroupPresentation subgroup_presentation(Presentation const& ambient,
                                           CosetTable const& table,
                                           std::vector<Word> const& trans) {
  return subgroup_presentation(ambient, std::make_shared<CosetTable const>(table),
                               trans);
}

std::string MatchReport::summary() const {
  std::string s = pass ? "matched" : "mismatch";
  s += ": " + std::to_string(matched_a) + " of " +
       std::to_string(matched_a + unmatched_a.size()) + " relators found in target, " +
       std::to_string(matched_b) + " of " +
       std::to_string(matched_b + unmatched_b.size()) + " found in source";
  return s;
}

MatchReport match_presentations(Presentation const& a, Presentation const& b,
                                GeneratorMap const& naming) {
  require_compatible(naming.source(), a.alphabet());
  require_compatible(naming.target(), b.alphabet());
  if (a.generator_count() != b.generator_count()) {
    throw std::invalid_argument("naming is not a bijection: generator counts differ");
  }
  std::set<std::uint32_t> hit;
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    auto const& im = naming.image(g);
    if (im.size() != 1 || !hit.insert(im[0].gen()).second) {
      throw std::invalid_argument("naming is not a bijection at " + a.alphabet()->name(g));
    }
  }
  std::map<Letters, std::size_t> in_b;
  for (auto const& r : b.relators()) ++in_b[canonical_relator(r.letters())];
  std::set<Letters> in_a;
  MatchReport rep;
  for (auto const& r : a.relators()) {
    auto key = canonical_relator(naming(r).letters());
    in_a.insert(key);
    if (in_b.count(key)) {
      ++rep.matched_a;
    } else {
      rep.unmatched_a.push_back(r);
    }
  }
  for (auto const& r : b.relators()) {
    if (in_a.count(canonical_relator(r.letters()))) {
      ++rep.matched_b;
    } else {
      rep.unmatched_b.push_back(r);
    }
  }
  rep.pass = rep.unmatched_a.empty() && rep.unmatched_b.empty();
  return rep;
}

}  // namespace fpg
