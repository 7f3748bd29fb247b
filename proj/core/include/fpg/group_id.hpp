#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/permutation.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// Permutation group given by generators; elements are enumerated on demand.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 100'000;

  explicit FiniteGroup(std::vector<Permutation> generators, std::size_t degree = 0);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return gens_; }

  // Throws TooLarge beyond kMaxOrder.
  std::size_t order() const;
  std::vector<Permutation> const& elements() const;
  std::optional<std::size_t> index_of(Permutation const& p) const;
  bool contains(Permutation const& p) const { return index_of(p).has_value(); }

  // Order of the subgroup generated by the given elements.
  static std::size_t closure_order(std::vector<Permutation> const& gens,
                                   std::size_t degree);

 private:
  void enumerate() const;

  std::size_t degree_;
  std::vector<Permutation> gens_;
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
    std::unordered_map<std::vector<Point>, std::size_t, PermutationHash> index;
    bool too_large = false;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Permutation action of the ambient generators on the cosets of a table.
FiniteGroup permutation_group(CosetTable const& t);

struct Fingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::vector<std::size_t> class_sizes;               // sorted
  std::size_t center_order = 0;
  AbelianInvariants abelianization;
  int derived_length = -1;  // -1 when not solvable

  std::string str() const;
  friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
};

Fingerprint fingerprint(FiniteGroup const& g);

struct GroupModel {
  std::string name;
  Presentation presentation;
};

// Q8, Q16, D12, Dic12, A4, L, S3, S4, D8 and small abelian groups.
std::vector<GroupModel> const& group_models();
GroupModel const& group_model(std::string const& name);  // throws UnknownModel

// Images of the model generators in g defining an isomorphism, when one
// exists; relators are checked exactly and the images must generate g.
std::optional<std::vector<Permutation>> find_isomorphism(Presentation const& model,
                                                         FiniteGroup const& g);

struct Identification {
  std::string name;    // empty when unknown
  bool exact = false;  // an explicit isomorphism was verified
  Fingerprint fingerprint;
  std::vector<Permutation> images;  // of the model generators
  std::string str() const;
};

// Exact search against the registry up to order 48, fingerprint comparison
// above that.
Identification identify(FiniteGroup const& g);

}  // namespace fpg
