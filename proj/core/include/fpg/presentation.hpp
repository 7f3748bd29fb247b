#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/permutation.hpp"
#include "fpg/word.hpp"

namespace fpg {

// Generators plus relators. Relators are stored cyclically reduced; empty
// ones are dropped, order is preserved otherwise.
class Presentation {
 public:
  explicit Presentation(AlphabetPtr alphabet, std::vector<Word> relators = {});
  Presentation(std::vector<std::string> generators,
               std::vector<std::string> const& relator_texts);

  // Line format: one "gens: a b c" line, then "rel: ..." lines, '#' comments.
  static Presentation parse(std::string_view text);
  std::string text() const;

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::size_t generator_count() const noexcept { return alphabet_->size(); }
  std::vector<Word> const& relators() const noexcept { return relators_; }
  Word word(std::string_view text) const { return Word::parse(alphabet_, text); }
  Word generator(std::size_t g) const { return Word::generator(alphabet_, g); }
  Word identity() const { return Word(alphabet_); }

  Presentation with_relators(std::vector<Word> const& extra) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
};

// Exact word-problem oracle for some target group.
class WordDecider {
 public:
  virtual ~WordDecider() = default;
  virtual AlphabetPtr alphabet() const = 0;
  virtual bool is_trivial(Word const& w) const = 0;
};

// Homomorphism between presentations given by generator images.
struct GroupHom {
  Presentation source;
  Presentation target;
  GeneratorMap images;
};

// Homomorphism onto a permutation group.
struct PermHom {
  Presentation source;
  std::vector<Permutation> images;

  std::size_t degree() const;
  Permutation evaluate(Word const& w) const;
};

struct RelatorVerdict {
  std::size_t relator;
  bool trivial;
};

// Throws OracleUnavailable if decider is null.
std::vector<RelatorVerdict> check_homomorphism(GroupHom const& h,
                                               WordDecider const* decider);
std::vector<RelatorVerdict> check_homomorphism(PermHom const& h);
bool all_trivial(std::vector<RelatorVerdict> const& v);

struct TietzeBudget {
  std::size_t max_passes = 50;
  std::size_t max_length = 10000;
};

struct TietzeResult {
  Presentation presentation;
  // old generator -> word in the new generators
  GeneratorMap dictionary;
};

TietzeResult tietze_simplify(Presentation const& p, TietzeBudget budget = {});

}  // namespace fpg

namespace fpg {

// Least rotation of w or w^-1 in letter order, after cyclic reduction.
// Two relators generate the same normal closure trivially iff these agree.
Letters canonical_relator(std::span<Letter const> w);

}  // namespace fpg
