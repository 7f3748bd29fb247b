#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

struct KnuthBendixCaps {
  std::size_t max_rules = 5000;
  std::size_t max_lhs = 64;
};

// Shortlex rewriting system over generators and their inverses, letters
// ordered by declaration (g1 < g1^-1 < g2 < ...).
class RewritingSystem {
 public:
  enum class Status { Completed, Capped };

  RewritingSystem(AlphabetPtr alphabet, std::vector<std::pair<Letters, Letters>> rules,
                  Status status);

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  std::vector<std::pair<Letters, Letters>> const& rules() const noexcept { return rules_; }
  Status status() const noexcept { return status_; }
  bool completed() const noexcept { return status_ == Status::Completed; }

  Letters reduce(std::span<Letter const> w) const;
  Word normal_form(Word const& w) const;
  // Number of irreducible words, or nullopt if more than limit.
  std::optional<std::size_t> count_normal_forms(std::size_t limit) const;
  // Irreducible words of each length up to max_length.
  std::vector<std::size_t> growth(std::size_t max_length) const;

 private:
  struct Node {
    std::vector<std::int32_t> next;
    std::int32_t rule = -1;
  };
  // trie of reversed left-hand sides for suffix matching
  std::vector<Node> trie_;
  AlphabetPtr alphabet_;
  std::vector<std::pair<Letters, Letters>> rules_;
  Status status_;
};

RewritingSystem knuth_bendix(Presentation const& p, KnuthBendixCaps caps = {});

// A finite quotient: the ambient generators acting on the cosets of a
// subgroup. A word is trivial in the image iff it fixes every coset.
struct Quotient {
  std::string name;
  std::shared_ptr<CosetTable const> table;

  bool kills(Word const& w) const;
};

struct RegisteredGroup {
  std::string id;
  Presentation presentation;
  std::vector<Quotient> quotients;
  std::shared_ptr<RewritingSystem const> rewriting;
};

struct TrivialityVerdict {
  enum class Kind { ProvedTrivial, Refuted, Consistent };
  Kind kind = Kind::Consistent;
  std::string witness;
  std::vector<std::string> quotients_checked;

  bool refuted() const { return kind == Kind::Refuted; }
  std::string str() const;
};

TrivialityVerdict check_identity(RegisteredGroup const& g, Word const& lhs,
                                 Word const& rhs);

class GroupRegistry {
 public:
  void add(RegisteredGroup g);
  RegisteredGroup const& get(std::string const& id) const;  // throws UnknownGroup
  bool has(std::string const& id) const { return groups_.count(id) > 0; }
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, std::shared_ptr<RegisteredGroup const>> groups_;
};

TrivialityVerdict check_identity(GroupRegistry const& r, std::string const& id,
                                 Word const& lhs, Word const& rhs);

}  // namespace fpg
