#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/group_id.hpp"
#include "fpg/presentation.hpp"
#include "fpg/reidemeister_schreier.hpp"

namespace fpg {

struct SeriesStage {
  std::size_t level = 0;
  // Stage 0 is the input; later stages are raw RS presentations.
  Presentation presentation;
  AbelianInvariants invariants;
  // [G^(k-1) : G^(k)], 1 at level 0
  std::size_t step_index = 1;
  // [G : G^(k)]
  std::size_t index = 1;
  // How this stage sits in the previous one; null at level 0.
  std::shared_ptr<SubgroupPresentation const> rs;
};

struct SeriesLimits {
  std::size_t max_index = 100'000;  // cap on [G : G^(k)]
};

// Derived series G = G^(0) > G^(1) > ... computed by repeated
// Reidemeister-Schreier over the kernel of each stage's abelianization.
// Stops at depth or at the first stage with infinite abelianization.
class DerivedSeries {
 public:
  DerivedSeries(Presentation g, std::size_t depth, SeriesLimits limits = {});

  std::vector<SeriesStage> const& stages() const noexcept { return stages_; }
  SeriesStage const& stage(std::size_t k) const { return stages_.at(k); }
  // true when the last computed stage has an infinite abelianization
  bool stopped_infinite() const noexcept { return stopped_infinite_; }

  // G acting on the cosets of G^(k), 1 <= k < stages().size(). Coset 0 is
  // G^(k); the table is built level by level, so no enumeration is involved.
  CosetTable quotient_table(std::size_t k) const;
  // G^(j) acting on the cosets of G^(k), j < k, over stage j's alphabet.
  CosetTable relative_quotient_table(std::size_t j, std::size_t k) const;

  // Rewrites a word of G^(j) into the generators of G^(k), j <= k. Throws
  // NotInSubgroup.
  Word rewrite(std::size_t j, std::size_t k, Word const& w) const;

 private:
  std::vector<SeriesStage> stages_;
  bool stopped_infinite_ = false;
};

// Invariants of Gamma2/Gamma3 given the RS presentation of Gamma2 = [G,G]:
// Gamma2^ab modulo the rows rewrite(g x g^-1) x^-1, g ambient, x Schreier.
AbelianInvariants lower_central_step(SubgroupPresentation const& gamma2);

// RS presentation of the kernel of h (h must be a homomorphism).
SubgroupPresentation kernel_presentation(PermHom const& h);

// RS presentation of [G,G] over the kernel of the abelianization.
SubgroupPresentation commutator_subgroup(Presentation const& g);

}  // namespace fpg
