#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fpg/permutation.hpp"
#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

namespace fpg {

using Coset = std::uint32_t;

struct EnumerationLimits {
  std::size_t max_cosets = 2'000'000;
  std::size_t max_deductions = 1'000'000;
};

// Complete right action of generators (and inverses) on cosets.
// Coset 0 is the subgroup itself.
class CosetTable {
 public:
  // data[c * columns + letter.column()], complete and inverse-consistent.
  CosetTable(AlphabetPtr alphabet, std::size_t n_cosets, std::vector<Coset> data,
             std::vector<Word> subgroup_generators = {});

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t columns() const noexcept { return 2 * alphabet_->size(); }
  std::vector<Coset> const& data() const noexcept { return data_; }
  std::vector<Word> const& subgroup_generators() const noexcept { return subgroup_; }

  Coset act(Coset c, Letter l) const { return data_[c * columns() + l.column()]; }
  Coset trace(Coset c, std::span<Letter const> w) const;
  Coset trace(Word const& w) const { return trace(0, w.letters()); }
  bool contains(Word const& w) const { return trace(w) == 0; }

  // Every relator acts as the identity on every coset.
  bool satisfies(Presentation const& p) const;
  bool is_standardized() const;
  CosetTable standardized() const;
  Permutation permutation(std::size_t gen) const;
  std::vector<Permutation> permutations() const;

  friend bool operator==(CosetTable const& a, CosetTable const& b) {
    return a.n_ == b.n_ && a.data_ == b.data_ && compatible(a.alphabet_, b.alphabet_);
  }

 private:
  AlphabetPtr alphabet_;
  std::size_t n_;
  std::vector<Coset> data_;
  std::vector<Word> subgroup_;
};

// Throws EnumerationExceeded.
CosetTable todd_coxeter(Presentation const& p, std::vector<Word> const& subgroup,
                        EnumerationLimits limits = {});

// Cosets of the kernel of a homomorphism onto a permutation group: one coset
// per element of the image. Throws NotAHomomorphism.
CosetTable kernel_coset_table(PermHom const& h);

// Word problem of the group acting on the cosets of a table: a word is
// trivial iff it fixes every coset. Exact for the table of the trivial
// subgroup, and for G/N when the subgroup N is normal.
class CosetTableDecider : public WordDecider {
 public:
  explicit CosetTableDecider(std::shared_ptr<CosetTable const> table) : table_(std::move(table)) {}
  AlphabetPtr alphabet() const override { return table_->alphabet(); }
  bool is_trivial(Word const& w) const override;

 private:
  std::shared_ptr<CosetTable const> table_;
};

// Breadth-first prefix-closed representatives, indexed by coset.
std::vector<Word> schreier_transversal(CosetTable const& t);

struct TransversalCheck {
  bool accepted = false;
  std::string reason;
  // candidate words re-indexed by the coset they reach
  std::vector<Word> by_coset;
};

TransversalCheck validate_transversal(CosetTable const& t,
                                      std::vector<Word> const& candidate);

}  // namespace fpg
