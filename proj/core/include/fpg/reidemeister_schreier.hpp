#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// Nontrivial Schreier generators t_c g t_{cg}^-1 for a transversal of a
// coset table, named "g@c" with cosets counted from 1.
class SchreierGenerators {
 public:
  // Throws InvalidTransversal unless trans is prefix-closed and hits each
  // coset once; trans may be in any order.
  SchreierGenerators(std::shared_ptr<CosetTable const> table,
                     std::vector<Word> const& trans);

  CosetTable const& table() const noexcept { return *table_; }
  std::shared_ptr<CosetTable const> const& table_ptr() const noexcept { return table_; }
  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::vector<Word> const& transversal() const noexcept { return reps_; }
  std::size_t size() const noexcept { return alphabet_->size(); }

  // Index of the Schreier generator for (coset, ambient generator), or
  // nullopt when it is freely trivial.
  std::optional<std::uint32_t> index(Coset c, std::size_t gen) const;
  std::pair<Coset, std::uint32_t> origin(std::size_t s) const { return origin_[s]; }
  // The ambient word t_c g t_{cg}^-1.
  Word const& ambient_word(std::size_t s) const { return dictionary_[s]; }
  std::vector<Word> const& dictionary() const noexcept { return dictionary_; }

  // Rewrites w read from coset c; end receives the coset reached.
  Letters rewrite_from(Coset c, std::span<Letter const> w, Coset& end) const;
  // Throws NotInSubgroup.
  Word rewrite(Word const& w) const;

 private:
  std::shared_ptr<CosetTable const> table_;
  std::vector<Word> reps_;
  AlphabetPtr alphabet_;
  std::vector<std::int64_t> slot_;  // coset * ngens + gen -> index or -1
  std::vector<std::pair<Coset, std::uint32_t>> origin_;
  std::vector<Word> dictionary_;
};

struct SubgroupPresentation {
  Presentation presentation;
  Presentation ambient;
  std::shared_ptr<SchreierGenerators const> schreier;
  // index * (ambient relator count), before empty relators are dropped
  std::size_t raw_relator_count = 0;

  std::vector<Word> const& dictionary() const { return schreier->dictionary(); }
  std::vector<Word> const& transversal() const { return schreier->transversal(); }
  CosetTable const& table() const { return schreier->table(); }
};

// Relators t_c r t_c^-1 for every relator r (outer loop) and coset c.
SubgroupPresentation subgroup_presentation(Presentation const& ambient,
                                           std::shared_ptr<CosetTable const> table,
                                           std::vector<Word> const& trans);
SubgroupPresentation subgroup_presentation(Presentation const& ambient,
                                           CosetTable const& table,
                                           std::vector<Word> const& trans);

struct MatchReport {
  bool pass = false;
  std::size_t matched_a = 0;
  std::size_t matched_b = 0;
  std::vector<Word> unmatched_a;  // relators of a missing from b
  std::vector<Word> unmatched_b;  // relators of b missing from a
  std::string summary() const;
};

// naming sends each generator of a to a generator of b (a bijection).
// Relators are compared up to free and cyclic reduction, rotation and
// inversion.
MatchReport match_presentations(Presentation const& a, Presentation const& b,
                                GeneratorMap const& naming);

}  // namespace fpg
