#include "fpg/series.hpp"

#include <map>

#include "fpg/errors.hpp"

namespace fpg {

SubgroupPresentation kernel_presentation(PermHom const& h) {
  auto table = std::make_shared<CosetTable const>(kernel_coset_table(h));
  return subgroup_presentation(h.source, table, schreier_transversal(*table));
}

SubgroupPresentation commutator_subgroup(Presentation const& g) {
  auto ab = abelianization_map(g);
  return kernel_presentation(ab.regular_hom(g));
}

DerivedSeries::DerivedSeries(Presentation g, std::size_t depth, SeriesLimits limits) {
  auto inv = abelian_invariants(g);
  SeriesStage s0{0, std::move(g), std::move(inv), 1, 1, nullptr};
  stages_.push_back(std::move(s0));
  while (stages_.size() <= depth) {
    auto const& last = stages_.back();
    if (!last.invariants.is_finite()) {
      stopped_infinite_ = true;
      break;
    }
    auto ord = last.invariants.order();
    if (ord * last.index > limits.max_index) {
      throw TooLarge("derived stage " + std::to_string(last.level + 1) + " has index " +
                     Integer(ord * last.index).get_str());
    }
    auto rs = std::make_shared<SubgroupPresentation const>(
        commutator_subgroup(last.presentation));
    std::size_t step = rs->table().size();
    SeriesStage next{last.level + 1, rs->presentation, abelian_invariants(rs->presentation),
                     step, last.index * step, rs};
    stages_.push_back(std::move(next));
  }
  stopped_infinite_ = !stages_.back().invariants.is_finite();
}

CosetTable DerivedSeries::relative_quotient_table(std::size_t j, std::size_t k) const {
  if (j >= k || k >= stages_.size()) {
    throw std::out_of_range("relative_quotient_table(" + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
  }
  std::size_t levels = k - j;
  auto const& alphabet = stages_[j].presentation.alphabet();
  std::size_t cols = 2 * alphabet->size();

  // A state records one coset per level; a letter moves the coset at its
  // level and hands at most one Schreier letter to the level below.
  using State = std::vector<Coset>;
  auto act = [&](State s, Letter l) {
    std::optional<Letter> cur = l;
    for (std::size_t lv = 0; lv < levels && cur; ++lv) {
      auto const& sch = *stages_[j + lv + 1].rs->schreier;
      auto const& t = sch.table();
      Letter x = *cur;
      Coset c = s[lv];
      Coset d = t.act(c, x);
      auto idx = sch.index(x.is_inverse() ? d : c, x.gen());
      s[lv] = d;
      cur.reset();
      if (idx) cur = Letter(*idx, x.is_inverse());
    }
    return s;
  };

  std::map<State, Coset> ids;
  std::vector<State> states;
  State start(levels, 0);
  ids.emplace(start, 0);
  states.push_back(start);
  std::vector<Coset> data;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::uint32_t col = 0; col < cols; ++col) {
      State s = act(states[i], Letter::from_column(col));
      auto [it, fresh] = ids.emplace(s, static_cast<Coset>(states.size()));
      if (fresh) states.push_back(std::move(s));
      data.push_back(it->second);
    }
  }
  return CosetTable(alphabet, states.size(), std::move(data));
}

CosetTable DerivedSeries::quotient_table(std::size_t k) const {
  return relative_quotient_table(0, k);
}

Word DerivedSeries::rewrite(std::size_t j, std::size_t k, Word const& w) const {
  if (j > k || k >= stages_.size()) throw std::out_of_range("rewrite levels");
  Word cur = w;
  for (std::size_t lv = j + 1; lv <= k; ++lv) cur = stages_[lv].rs->schreier->rewrite(cur);
  return cur;
}

AbelianInvariants lower_central_step(SubgroupPresentation const& gamma2) {
  auto const& sch = *gamma2.schreier;
  auto const& amb = gamma2.ambient.alphabet();
  std::vector<Word> extra;
  extra.reserve(amb->size() * sch.size());
  for (std::size_t g = 0; g < amb->size(); ++g) {
    Word gw = Word::generator(amb, g);
    for (std::size_t x = 0; x < sch.size(); ++x) {
      Word conj = sch.rewrite(conjugate(gw, sch.ambient_word(x)));
      extra.push_back(conj * Word::generator(sch.alphabet(), x).inverse());
    }
  }
  return quotient_with_extra_rows(gamma2.presentation, extra);
}

}  // namespace fpg
