#include "fpg/rp2/registry.hpp"

#include <optional>

#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/series.hpp"

namespace fpg::rp2 {

namespace {

using TablePtr = std::shared_ptr<CosetTable const>;

TablePtr share(CosetTable t) { return std::make_shared<CosetTable const>(std::move(t)); }

std::string describe(CosetTable const& t) {
  auto id = identify(permutation_group(t));
  if (!id.name.empty()) return id.name;
  return "order-" + std::to_string(t.size()) + " quotient";
}

// Adds the tables of G/G^(k) for every computed stage, skipping repeats.
void add_chain(std::vector<Quotient>& out, DerivedSeries const& ds, std::size_t from,
               std::string const& prefix) {
  std::size_t last = 1;
  for (std::size_t k = from + 1; k < ds.stages().size(); ++k) {
    std::size_t idx = ds.stage(k).index / ds.stage(from).index;
    if (idx == last) continue;
    last = idx;
    auto t = ds.relative_quotient_table(from, k);
    out.push_back({prefix + "(" + std::to_string(k) + ") " + describe(t), share(std::move(t))});
  }
}

void finish(RegisteredGroup& g, RegistryOptions const& opts) {
  if (opts.rewriting) {
    g.rewriting = std::make_shared<RewritingSystem const>(knuth_bendix(g.presentation, opts.kb));
  }
}

RegisteredGroup regular_group(std::string id, Presentation p, RegistryOptions const& opts) {
  auto t = share(todd_coxeter(p, {}, opts.limits));
  RegisteredGroup g{std::move(id), std::move(p), {}, nullptr};
  g.quotients.push_back({"regular " + describe(*t), t});
  finish(g, opts);
  return g;
}

}  // namespace

GroupRegistry build_registry(RegistryOptions const& opts) {
  GroupRegistry reg;
  for (int n = 1; n <= opts.max_strands; ++n) {
    BraidGroup bg(n);
    RegisteredGroup g{"bn:" + std::to_string(n), bg.presentation(), {}, nullptr};
    if (n == 1) {
      auto ab = abelianization_map(g.presentation);
      g.quotients.push_back({"Z2", share(kernel_coset_table(ab.regular_hom(g.presentation)))});
    } else {
      g.quotients.push_back(
          {"S" + std::to_string(n), share(kernel_coset_table(bg.permutation_hom()))});
      g.quotients.push_back(
          {"S" + std::to_string(n) + "xZ2", share(kernel_coset_table(bg.pure_commutator_hom()))});
      // stage 1 is perfect from n = 5 on
      DerivedSeries ds(bg.presentation(), n >= 5 ? 1 : (n == 2 ? 2 : 3));
      add_chain(g.quotients, ds, 0, "G/G");
      if (n >= 3) {
        // Greek generators act on B_n's quotients through their braid words
        auto t1 = ds.stage(1).rs->schreier->table_ptr();
        auto rs = subgroup_presentation(bg.presentation(), t1, bg.gamma2_transversal());
        auto naming = gamma2_rs_naming(rs, n);
        auto greek = gamma2_presentation_literal(n);
        std::vector<Word> words(greek.generator_count(), bg.presentation().identity());
        for (std::size_t x = 0; x < rs.schreier->size(); ++x)
          words[naming.image(x)[0].gen()] = rs.schreier->ambient_word(x);
        RegisteredGroup h{"gamma2:" + std::to_string(n), greek, {}, nullptr};
        for (auto const& q : g.quotients) {
          PermHom ph{greek, {}};
          for (auto const& w : words) {
            std::vector<Point> img(q.table->size());
            for (Coset c = 0; c < q.table->size(); ++c) img[c] = q.table->trace(c, w.letters());
            ph.images.emplace_back(std::move(img));
          }
          auto t = kernel_coset_table(ph).standardized();
          if (t.size() == 1) continue;
          bool seen = false;
          for (auto const& prev : h.quotients) seen = seen || *prev.table == t;
          if (seen) continue;
          auto name = "image in " + q.name.substr(0, q.name.find(' ')) + ": " + describe(t);
          h.quotients.push_back({std::move(name), share(std::move(t))});
        }
        finish(h, opts);
        reg.add(std::move(h));
      }
    }
    finish(g, opts);
    reg.add(std::move(g));
  }

  reg.add(regular_group("L", group_model("L").presentation, opts));
  {
    RegisteredGroup lam{"Lambda", lambda_presentation(), {}, nullptr};
    try {
      auto t = share(todd_coxeter(lam.presentation, {}, opts.limits));
      lam.quotients.push_back({"regular " + describe(*t), t});
    } catch (EnumerationExceeded const&) {
      auto phi = lambda_to_l();
      auto lt = todd_coxeter(group_model("L").presentation, {});
      PermHom h{lam.presentation, {}};
      for (std::size_t g = 0; g < lam.presentation.generator_count(); ++g) {
        Permutation p = Permutation::identity(lt.size());
        for (auto l : phi.image(g).letters()) {
          auto q = lt.permutation(l.gen());
          p = p * (l.is_inverse() ? q.inverse() : q);
        }
        h.images.push_back(p);
      }
      lam.quotients.push_back({"image in L", share(kernel_coset_table(h))});
    }
    finish(lam, opts);
    reg.add(std::move(lam));
  }
  {
    RegisteredGroup m{"M3", m3_presentation(), {}, nullptr};
    DerivedSeries ds(m.presentation, 2);
    add_chain(m.quotients, ds, 0, "G/G");
    finish(m, opts);
    reg.add(std::move(m));
  }
  for (auto name : {"Q8", "Q16", "D12", "Dic12", "A4"})
    reg.add(regular_group(name, group_model(name).presentation, opts));
  return reg;
}

Presentation group_presentation(std::string const& id) {
  auto strands = [&](std::string const& prefix) -> std::optional<int> {
    if (id.rfind(prefix, 0) != 0) return std::nullopt;
    auto rest = id.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw UnknownGroup(id);
    return std::stoi(rest);
  };
  if (auto n = strands("bn:")) return braid_presentation(*n);
  if (auto n = strands("gamma2:")) {
    if (*n < 3) throw UnknownGroup(id + " (gamma2 needs at least 3 strands)");
    return gamma2_presentation_literal(*n);
  }
  if (id == "M3") return m3_presentation();
  if (id == "Lambda") return lambda_presentation();
  try {
    return group_model(id).presentation;
  } catch (UnknownModel const&) {
    throw UnknownGroup(id);
  }
}

}  // namespace fpg::rp2
