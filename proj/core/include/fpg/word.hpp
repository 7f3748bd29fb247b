#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fpg {

struct GeneratorSymbol {
  std::string name;
  std::size_t index;
};

// An ordered list of distinct generator names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  std::string const& name(std::size_t i) const { return names_.at(i); }
  GeneratorSymbol symbol(std::size_t i) const { return {name(i), i}; }
  std::vector<std::string> const& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownGenerator.
  std::size_t index(std::string_view name) const;

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
bool compatible(AlphabetPtr const& a, AlphabetPtr const& b);
void require_compatible(AlphabetPtr const& a, AlphabetPtr const& b);

// A generator or its inverse. Letters are ordered g1 < g1^-1 < g2 < g2^-1 ...
// which is the precedence used by shortlex and by coset table columns.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t gen, bool inverse)
      : code_(2 * gen + (inverse ? 1 : 0)) {}

  static constexpr Letter from_column(std::uint32_t c) {
    Letter l;
    l.code_ = c;
    return l;
  }

  constexpr std::uint32_t gen() const noexcept { return code_ >> 1; }
  constexpr bool is_inverse() const noexcept { return code_ & 1; }
  constexpr int sign() const noexcept { return is_inverse() ? -1 : 1; }
  constexpr std::uint32_t column() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return from_column(code_ ^ 1); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = 0;
};

using Letters = std::vector<Letter>;

void free_reduce_in_place(Letters& w);
Letters inverse_letters(std::span<Letter const> w);

// Freely reduced word over a shared alphabet.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  Word(AlphabetPtr alphabet, Letters letters);

  static Word generator(AlphabetPtr alphabet, std::size_t gen,
                        long long power = 1);
  static Word generator(AlphabetPtr alphabet, std::string_view name,
                        long long power = 1);
  // Tokens: name, name^-1, name^k. The token "1" is the identity.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  AlphabetPtr const& alphabet() const noexcept { return alphabet_; }
  Letters const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(long long k) const;
  // Minimal exponent form, "1" for the identity.
  std::string str() const;

  Word& operator*=(Word const& other);
  friend Word operator*(Word a, Word const& b) { return a *= b; }

  friend bool operator==(Word const& a, Word const& b) {
    return a.letters_ == b.letters_ && compatible(a.alphabet_, b.alphabet_);
  }
  // Shortlex, letters compared by precedence.
  friend bool shortlex_less(Word const& a, Word const& b);

 private:
  AlphabetPtr alphabet_;
  Letters letters_;
};

Word free_reduce(AlphabetPtr alphabet, std::span<Letter const> raw);

// Like Word::parse, but a token may also name a word known to lookup
// (consulted first), e.g. "a^3 B12^-1".
using WordLookup = std::function<std::optional<Word>(std::string_view)>;
Word parse_expression(AlphabetPtr alphabet, std::string_view text,
                      WordLookup const& lookup);
// Product of a list of words; throws AlphabetMismatch when they disagree.
Word concat(std::span<Word const> words);

Word commutator(Word const& a, Word const& b);
// g w g^-1
Word conjugate(Word const& g, Word const& w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclically_reduce(Word const& w);
Letters cyclically_reduce_letters(std::span<Letter const> w);

std::vector<long long> exponent_sums(Word const& w);

// Assigns to each generator of a source alphabet a word over a target
// alphabet.
class GeneratorMap {
 public:
  GeneratorMap(AlphabetPtr source, AlphabetPtr target);

  GeneratorMap& set(std::size_t gen, Word image);
  GeneratorMap& set(std::string_view name, Word image);
  GeneratorMap& set(std::string_view name, std::string_view image_text);

  AlphabetPtr const& source() const noexcept { return source_; }
  AlphabetPtr const& target() const noexcept { return target_; }
  bool defined(std::size_t gen) const { return images_.at(gen).has_value(); }
  bool total() const;
  // Throws UnmappedGenerator.
  Word const& image(std::size_t gen) const;

  Word operator()(Word const& w) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<std::optional<Word>> images_;
};

Word substitute(GeneratorMap const& map, Word const& w);
// Substitution without a Word wrapper, for hot loops.
void substitute_into(std::vector<Letters> const& images,
                     std::span<Letter const> w, Letters& out);

}  // namespace fpg

template <>
struct std::hash<fpg::Letter> {
  std::size_t operator()(fpg::Letter l) const noexcept {
    return std::hash<std::uint32_t>()(l.column());
  }
};
