#include <set>

#include "fpg/errors.hpp"
#include "fpg/wp.hpp"

namespace fpg {

bool Quotient::kills(Word const& w) const {
  for (Coset c = 0; c < table->size(); ++c) {
    if (table->trace(c, w.letters()) != c) return false;
  }
  return true;
}

std::string TrivialityVerdict::str() const {
  std::string s;
  switch (kind) {
    case Kind::ProvedTrivial: s = "ProvedTrivial"; break;
    case Kind::Refuted: s = "Refuted"; break;
    case Kind::Consistent: s = "Consistent"; break;
  }
  if (!witness.empty()) s += " [" + witness + "]";
  if (!quotients_checked.empty()) {
    s += " in {";
    for (std::size_t i = 0; i < quotients_checked.size(); ++i) {
      if (i) s += ", ";
      s += quotients_checked[i];
    }
    s += "}";
  }
  return s;
}

TrivialityVerdict check_identity(RegisteredGroup const& g, Word const& lhs,
                                 Word const& rhs) {
  require_compatible(lhs.alphabet(), g.presentation.alphabet());
  require_compatible(rhs.alphabet(), g.presentation.alphabet());
  TrivialityVerdict v;
  Word w = lhs * rhs.inverse();
  if (w.empty()) {
    v.kind = TrivialityVerdict::Kind::ProvedTrivial;
    v.witness = "freely trivial";
    return v;
  }
  for (auto const& q : g.quotients) {
    v.quotients_checked.push_back(q.name);
    if (!q.kills(w)) {
      v.kind = TrivialityVerdict::Kind::Refuted;
      std::vector<Point> pts(q.table->size());
      for (Coset c = 0; c < q.table->size(); ++c) pts[c] = q.table->trace(c, w.letters());
      v.witness = "image in " + q.name + " is " + Permutation(pts).str();
      return v;
    }
  }
  auto key = canonical_relator(w.letters());
  for (auto const& r : g.presentation.relators()) {
    if (canonical_relator(r.letters()) == key) {
      v.kind = TrivialityVerdict::Kind::ProvedTrivial;
      v.witness = "conjugate of relator " + r.str();
      return v;
    }
  }
  if (g.rewriting) {
    auto nf = g.rewriting->reduce(w.letters());
    if (nf.empty()) {
      // every rule is a consequence of the relators, so this is a proof
      // whether or not completion finished
      v.kind = TrivialityVerdict::Kind::ProvedTrivial;
      v.witness = "rewrites to the identity";
      return v;
    }
    if (g.rewriting->completed()) {
      v.kind = TrivialityVerdict::Kind::Refuted;
      v.witness = "confluent normal form " + Word(g.presentation.alphabet(), nf).str() +
                  " is not the identity";
      return v;
    }
  }
  return v;
}

void GroupRegistry::add(RegisteredGroup g) {
  auto id = g.id;
  groups_[id] = std::make_shared<RegisteredGroup const>(std::move(g));
}

RegisteredGroup const& GroupRegistry::get(std::string const& id) const {
  auto it = groups_.find(id);
  if (it == groups_.end()) throw UnknownGroup(id);
  return *it->second;
}

std::vector<std::string> GroupRegistry::ids() const {
  std::vector<std::string> out;
  for (auto const& [id, g] : groups_) out.push_back(id);
  return out;
}

TrivialityVerdict check_identity(GroupRegistry const& r, std::string const& id,
                                 Word const& lhs, Word const& rhs) {
  return check_identity(r.get(id), lhs, rhs);
}

}  // namespace fpg
