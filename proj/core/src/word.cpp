#include "fpg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "fpg/errors.hpp"

namespace fpg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto const& n = names_[i];
    if (n.empty()) throw ParseError("empty generator name");
    if (n == "1" || n.find_first_of(" \t^#") != std::string::npos) {
      throw ParseError("invalid generator name '" + n + "'");
    }
    if (!lookup_.emplace(n, i).second) {
      throw ParseError("duplicate generator name '" + n + "'");
    }
  }
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UnknownGenerator(std::string(name));
  return *i;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

bool compatible(AlphabetPtr const& a, AlphabetPtr const& b) {
  return a == b || (a && b && *a == *b);
}

void require_compatible(AlphabetPtr const& a, AlphabetPtr const& b) {
  if (!compatible(a, b)) throw AlphabetMismatch("words over different alphabets");
}

void free_reduce_in_place(Letters& w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == w[i].inverse()) {
      --top;
    } else {
      w[top++] = w[i];
    }
  }
  w.resize(top);
}

Letters inverse_letters(std::span<Letter const> w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

namespace {

void check_range(AlphabetPtr const& a, std::span<Letter const> w) {
  for (auto l : w) {
    if (l.gen() >= a->size()) {
      throw UnknownGenerator("generator index " + std::to_string(l.gen()) +
                             " outside alphabet of size " +
                             std::to_string(a->size()));
    }
  }
}

void append_reduced(Letters& out, std::span<Letter const> w) {
  for (auto l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
}

}  // namespace

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetMismatch("null alphabet");
}

Word::Word(AlphabetPtr alphabet, Letters letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw AlphabetMismatch("null alphabet");
  check_range(alphabet_, letters_);
  free_reduce_in_place(letters_);
}

Word Word::generator(AlphabetPtr alphabet, std::size_t gen, long long power) {
  if (gen >= alphabet->size()) {
    throw UnknownGenerator("generator index " + std::to_string(gen));
  }
  Letters l(static_cast<std::size_t>(power < 0 ? -power : power),
            Letter(static_cast<std::uint32_t>(gen), power < 0));
  Word w(std::move(alphabet));
  w.letters_ = std::move(l);
  return w;
}

Word Word::generator(AlphabetPtr alphabet, std::string_view name,
                     long long power) {
  auto g = alphabet->index(name);
  return generator(std::move(alphabet), g, power);
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  Letters out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long long k = 1;
    if (caret != std::string::npos) {
      auto e = std::string_view(tok).substr(caret + 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
      if (ec != std::errc() || p != e.data() + e.size() || k == 0) {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
    }
    auto g = alphabet->index(name);
    Letter l(static_cast<std::uint32_t>(g), k < 0);
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) append_reduced(out, {&l, 1});
  }
  Word w(std::move(alphabet));
  w.letters_ = std::move(out);
  return w;
}

Word parse_expression(AlphabetPtr alphabet, std::string_view text,
                      WordLookup const& lookup) {
  Word out(alphabet);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long long k = 1;
    if (caret != std::string::npos) {
      auto e = std::string_view(tok).substr(caret + 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
      if (ec != std::errc() || p != e.data() + e.size() || k == 0) {
        throw ParseError("bad exponent in token '" + tok + "'");
      }
    }
    std::optional<Word> base = lookup ? lookup(name) : std::nullopt;
    if (!base) base = Word::generator(alphabet, name);
    require_compatible(base->alphabet(), alphabet);
    out *= base->pow(k);
  }
  return out;
}

Word Word::inverse() const {
  Word w(alphabet_);
  w.letters_ = inverse_letters(letters_);
  return w;
}

Word Word::pow(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Word out(alphabet_);
  // conjugator * core^k * conjugator^-1 keeps this linear in k
  auto cr = cyclically_reduce(base);
  Letters body;
  body.reserve(cr.core.size() * static_cast<std::size_t>(k));
  for (long long i = 0; i < k; ++i) {
    body.insert(body.end(), cr.core.letters_.begin(), cr.core.letters_.end());
  }
  Letters all = cr.conjugator.letters_;
  append_reduced(all, body);
  append_reduced(all, inverse_letters(cr.conjugator.letters_));
  out.letters_ = std::move(all);
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long long run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    out += alphabet_->name(letters_[i].gen());
    if (letters_[i].is_inverse()) run = -run;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word& Word::operator*=(Word const& other) {
  require_compatible(alphabet_, other.alphabet_);
  append_reduced(letters_, other.letters_);
  return *this;
}

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

Word free_reduce(AlphabetPtr alphabet, std::span<Letter const> raw) {
  return Word(std::move(alphabet), Letters(raw.begin(), raw.end()));
}

Word concat(std::span<Word const> words) {
  if (words.empty()) throw AlphabetMismatch("empty product has no alphabet");
  Word out(words.front().alphabet());
  for (auto const& w : words) out *= w;
  return out;
}

Word commutator(Word const& a, Word const& b) {
  require_compatible(a.alphabet(), b.alphabet());
  return a * b * a.inverse() * b.inverse();
}

Word conjugate(Word const& g, Word const& w) {
  require_compatible(g.alphabet(), w.alphabet());
  return g * w * g.inverse();
}

CyclicReduction cyclically_reduce(Word const& w) {
  auto const& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == l[j - 1].inverse()) {
    ++i;
    --j;
  }
  return {Word(w.alphabet(), Letters(l.begin() + i, l.begin() + j)),
          Word(w.alphabet(), Letters(l.begin(), l.begin() + i))};
}

Letters cyclically_reduce_letters(std::span<Letter const> w) {
  Letters r(w.begin(), w.end());
  free_reduce_in_place(r);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inverse()) {
    ++i;
    --j;
  }
  return Letters(r.begin() + i, r.begin() + j);
}

std::vector<long long> exponent_sums(Word const& w) {
  std::vector<long long> v(w.alphabet()->size(), 0);
  for (auto l : w.letters()) v[l.gen()] += l.sign();
  return v;
}

GeneratorMap::GeneratorMap(AlphabetPtr source, AlphabetPtr target)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(source_->size()) {}

GeneratorMap& GeneratorMap::set(std::size_t gen, Word image) {
  require_compatible(image.alphabet(), target_);
  images_.at(gen) = std::move(image);
  return *this;
}

GeneratorMap& GeneratorMap::set(std::string_view name, Word image) {
  return set(source_->index(name), std::move(image));
}

GeneratorMap& GeneratorMap::set(std::string_view name,
                                std::string_view image_text) {
  return set(source_->index(name), Word::parse(target_, image_text));
}

bool GeneratorMap::total() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](auto const& x) { return x.has_value(); });
}

Word const& GeneratorMap::image(std::size_t gen) const {
  auto const& im = images_.at(gen);
  if (!im) throw UnmappedGenerator(source_->name(gen));
  return *im;
}

Word GeneratorMap::operator()(Word const& w) const {
  require_compatible(w.alphabet(), source_);
  Letters out;
  for (auto l : w.letters()) {
    auto const& im = image(l.gen()).letters();
    if (l.is_inverse()) {
      append_reduced(out, inverse_letters(im));
    } else {
      append_reduced(out, im);
    }
  }
  Word r(target_);
  return r *= Word(target_, std::move(out));
}

Word substitute(GeneratorMap const& map, Word const& w) { return map(w); }

void substitute_into(std::vector<Letters> const& images,
                     std::span<Letter const> w, Letters& out) {
  for (auto l : w) {
    auto const& im = images[l.gen()];
    if (l.is_inverse()) {
      for (auto it = im.rbegin(); it != im.rend(); ++it) {
        Letter x = it->inverse();
        if (!out.empty() && out.back() == x.inverse()) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
    } else {
      append_reduced(out, im);
    }
  }
}

}  // namespace fpg
