#include "fpg/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/actions.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/rp2/models.hpp"
#include "fpg/rp2/registry.hpp"
#include "fpg/series.hpp"
#include "fpg/table_cache.hpp"

#ifndef FPG_VERSION
#define FPG_VERSION "0.0.0"
#endif

namespace fpg::verify {

std::string version() { return FPG_VERSION; }

std::string to_string(ClaimClass c) { return c == ClaimClass::Exact ? "EXACT" : "CONSISTENCY"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Consistent: return "CONSISTENT";
    case Status::Undecided: return "UNDECIDED";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

int Report::exit_code() const {
  for (auto const& r : results) {
    if (r.status == Status::Fail) return 1;
    if (r.status == Status::Undecided && r.cls == ClaimClass::Exact) return 1;
  }
  return 0;
}

namespace {

template <class T>
class Lazy {
 public:
  template <class F>
  T const& get(F&& make) {
    std::call_once(once_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  std::once_flag once_;
  std::optional<T> value_;
};

// Shared, immutable once built. Each member is computed by the first claim
// that needs it.
class Context {
 public:
  explicit Context(Config const& c) : cfg(c) {
    if (cfg.cache_dir) cache_.emplace(*cfg.cache_dir);
  }

  Config cfg;

  EnumerationLimits limits() const {
    EnumerationLimits l;
    l.max_cosets = cfg.max_cosets;
    return l;
  }
  TableCache const* cache() const { return cache_ ? &*cache_ : nullptr; }

  GroupRegistry const& registry() {
    return registry_.get([&] {
      rp2::RegistryOptions o;
      o.limits = limits();
      o.kb.max_rules = cfg.kb_max_rules;
      return rp2::build_registry(o);
    });
  }

  // B_n's derived series to the depth the chain claims look at
  DerivedSeries const& braid_series(int n) {
    return series_.at(n).get([&] {
      std::size_t depth = n == 2 ? 2 : (n >= 5 ? 1 : 3);
      return DerivedSeries(rp2::braid_presentation(n), depth);
    });
  }

  DerivedSeries const& m3_series() {
    return m3_.get([] { return DerivedSeries(rp2::m3_presentation(), 2); });
  }

  rp2::PhiReport const& phi() {
    return phi_.get([] { return rp2::phi_check(); });
  }

  CosetTable const& b2_regular() {
    return b2_.get([&] {
      return cached_todd_coxeter(cache(), rp2::braid_presentation(2), {}, limits());
    });
  }

 private:
  std::optional<TableCache> cache_;
  Lazy<GroupRegistry> registry_;
  std::array<Lazy<DerivedSeries>, 6> series_;
  Lazy<DerivedSeries> m3_;
  Lazy<rp2::PhiReport> phi_;
  Lazy<CosetTable> b2_;
};

struct Outcome {
  Status status;
  std::string details;
};

Outcome exact(bool ok, std::string details) {
  return {ok ? Status::Pass : Status::Fail, std::move(details)};
}

Outcome from_check(rp2::CheckResult const& r) { return exact(r.pass, r.details()); }

struct Claim {
  ClaimInfo info;
  std::function<Outcome(Context&)> check;
};

std::string join(std::vector<std::string> const& parts, char const* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

Permutation word_permutation(CosetTable const& t, Word const& w) {
  std::vector<Point> img(t.size());
  for (Coset c = 0; c < t.size(); ++c) img[c] = t.trace(c, w.letters());
  return Permutation(std::move(img));
}

bool is_scalar(IntegerMatrix const& m, long d) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? d : 0)) return false;
  return true;
}

std::string chain_str(DerivedSeries const& ds, std::size_t from) {
  std::vector<std::string> parts;
  for (std::size_t k = from; k < ds.stages().size(); ++k) {
    auto const& s = ds.stage(k);
    parts.push_back("(" + std::to_string(k) + ") " + s.invariants.str() + " index " +
                    std::to_string(s.index));
  }
  return join(parts, " -> ");
}

Outcome chain_claim(DerivedSeries const& ds, std::size_t from,
                    std::vector<std::string> const& invariants,
                    std::vector<std::size_t> const& steps) {
  bool ok = ds.stages().size() >= from + invariants.size();
  for (std::size_t i = 0; ok && i < invariants.size(); ++i) {
    ok = ds.stage(from + i).invariants.str() == invariants[i];
    if (ok && i > 0) ok = ds.stage(from + i).step_index == steps[i - 1];
  }
  return exact(ok, chain_str(ds, from));
}

Outcome identified_as(CosetTable const& t, std::string const& model) {
  auto g = permutation_group(t);
  auto id = identify(g);
  auto iso = find_isomorphism(group_model(model).presentation, g);
  return exact(id.name == model && id.exact && iso.has_value(),
               "order " + std::to_string(t.size()) + ", " + id.str() +
                   (iso ? ", explicit isomorphism from " + model : ", no isomorphism from " + model));
}

Outcome identity_claim(Context& ctx, rp2::IdentitySpec const& spec) {
  auto c = rp2::check_identity_spec(ctx.registry(), spec);
  auto details = spec.lhs + " = " + spec.rhs + " in " + c.group + ": " + c.verdict.str();
  if (c.verdict.refuted()) return {Status::Fail, details};
  if (c.verdict.kind == TrivialityVerdict::Kind::Consistent && c.verdict.quotients_checked.empty())
    return {Status::Undecided, details};
  return {Status::Consistent, details};
}

struct ActionKey {
  char const* key;
  rp2::ActionTable (*make)();
  char const* conjugator;
};

constexpr ActionKey kActions[] = {
    {"z4", rp2::action_z4, "a^4"},
    {"b23", rp2::action_b23, "B23"},
    {"r3b23", rp2::action_r3b23, "r3 B23 r3^-1"},
    {"r3sq", rp2::action_r3sq, "r3^2"},
};

// c g c^-1 against the listed image, both read in B_4
Outcome action_claim(Context& ctx, ActionKey const& a, std::size_t gen) {
  auto t = a.make();
  rp2::BraidGroup bg(4);
  auto bw = rp2::f5f3_braid_words();
  auto embed = [&](Word const& w) {
    Word r = bg.presentation().identity();
    for (auto l : w.letters()) {
      auto x = bw.image(bw.source()->index(t.basis()->name(l.gen())));
      r *= l.is_inverse() ? x.inverse() : x;
    }
    return r;
  };
  Word c = bg.expr(a.conjugator);
  Word g = Word::generator(t.basis(), gen);
  auto v = check_identity(ctx.registry(), "bn:4", c * embed(g) * c.inverse(),
                          embed(apply_action(t, g)));
  auto details = "(" + std::string(a.conjugator) + ") " + t.basis()->name(gen) + " (" +
                 a.conjugator + ")^-1 = " + apply_action(t, g).str() + ": " + v.str();
  if (v.refuted()) return {Status::Fail, details};
  return {Status::Consistent, details};
}

std::vector<Claim> build_claims() {
  std::vector<Claim> out;
  auto add = [&](std::string id, ClaimClass cls, std::string statement,
                 std::function<Outcome(Context&)> f) {
    out.push_back({{std::move(id), cls, std::move(statement)}, std::move(f)});
  };
  auto const E = ClaimClass::Exact;
  auto const C = ClaimClass::Consistency;

  add("lcsbn.n2.q16", E, "B_2 enumerates to 16 elements and is the generalized quaternion group",
      [](Context& ctx) {
        auto const& t = ctx.b2_regular();
        auto o = identified_as(t, "Q16");
        o.status = t.size() == 16 && o.status == Status::Pass ? Status::Pass : Status::Fail;
        return o;
      });
  add("lcsbn.n2.twist_unique_involution", E,
      "the full twist of B_2 is its unique element of order 2", [](Context& ctx) {
        auto const& t = ctx.b2_regular();
        auto g = permutation_group(t);
        std::size_t involutions = 0;
        for (auto const& p : g.elements()) involutions += p.order() == 2;
        rp2::BraidGroup bg(2);
        auto twist = word_permutation(t, bg.full_twist());
        return exact(involutions == 1 && twist.order() == 2,
                     std::to_string(involutions) + " element(s) of order 2; full twist has order " +
                         std::to_string(twist.order()));
      });

  for (int n = 1; n <= 5; ++n) {
    std::string want = n == 1 ? "(0,[2])" : "(0,[2,2])";
    add("bnabz.n" + std::to_string(n), E,
        "B_" + std::to_string(n) + " abelianizes to " + want, [n, want](Context&) {
          auto inv = abelian_invariants(rp2::braid_presentation(n));
          return exact(inv.str() == want, inv.str());
        });
  }

  for (int n = 3; n <= 5; ++n) {
    add("fullpres.n" + std::to_string(n), E,
        "Reidemeister-Schreier over {1, s1, s1 r1, s1 r1 s1} gives the Greek presentation of "
        "Gamma2(B_" + std::to_string(n) + ") with 8n-7 generators",
        [n](Context&) { return from_check(rp2::fullpres_check(n)); });
  }
  add("fullpres.n4.listed", E,
      "the explicit 64-relator list for Gamma2(B_4) agrees relator by relator with the "
      "computed presentation",
      [](Context&) { return from_check(rp2::letter_list_check()); });

  for (int n = 3; n <= 5; ++n) {
    add("lcs.n" + std::to_string(n) + ".gamma2_eq_gamma3", E,
        "Gamma2/Gamma3 of B_" + std::to_string(n) + " is trivial", [n](Context&) {
          auto inv = lower_central_step(rp2::gamma2_rs(n));
          return exact(inv.is_trivial(), "Gamma2/Gamma3 = " + inv.str());
        });
  }
  add("dsbn.n5.perfect", E, "Gamma2(B_5) is perfect", [](Context& ctx) {
    auto const& s = ctx.braid_series(5).stage(1);
    return exact(s.index == 4 && s.invariants.is_trivial(),
                 "index " + std::to_string(s.index) + ", abelianization " + s.invariants.str());
  });

  add("dsbn.b2.chain", E, "B_2^(1) is cyclic of order 4 and B_2^(2) is trivial",
      [](Context& ctx) {
        return chain_claim(ctx.braid_series(2), 0, {"(0,[2,2])", "(0,[4])", "(0,[])"}, {4, 4});
      });
  add("dsbn.b3.chain", E,
      "derived series of B_3: (0,[2,2]) -> (0,[3]) -> (0,[2,2,2,2]) -> (9,[2])",
      [](Context& ctx) {
        return chain_claim(ctx.braid_series(3), 0,
                           {"(0,[2,2])", "(0,[3])", "(0,[2,2,2,2])", "(9,[2])"}, {4, 3, 16});
      });
  add("dsbn.b3.depth2.is_d12", E, "B_3/B_3^(2) is dihedral of order 12", [](Context& ctx) {
    return identified_as(ctx.braid_series(3).quotient_table(2), "D12");
  });
  add("dsbn.b3.depth3.order192", E, "B_3/B_3^(3) has order 192", [](Context& ctx) {
    auto t = ctx.braid_series(3).quotient_table(3);
    auto order = permutation_group(t).order();
    return exact(t.size() == 192 && order == 192,
                 std::to_string(t.size()) + " cosets, permutation group of order " +
                     std::to_string(order));
  });

  add("dsb4.chain", E,
      "derived series of B_4: (0,[2,2]) -> (0,[3]) -> (0,[2,2,2,2]) -> (0,[2,2,2,2,2,2,2,2,4])",
      [](Context& ctx) {
        return chain_claim(ctx.braid_series(4), 0,
                           {"(0,[2,2])", "(0,[3])", "(0,[2,2,2,2])", "(0,[2,2,2,2,2,2,2,2,4])"},
                           {4, 3, 16});
      });
  add("dsb4.depth2.is_d12", E, "B_4/B_4^(2) is dihedral of order 12", [](Context& ctx) {
    return identified_as(ctx.braid_series(4).quotient_table(2), "D12");
  });
  add("dsb4.gamma2_mod_d3.is_l", E,
      "phi: Gamma2(B_4) -> L is a homomorphism with kernel B_4^(3), and Gamma2(B_4)/B_4^(3) is "
      "isomorphic to L of order 48",
      [](Context& ctx) { return from_check(ctx.phi().check); });
  add("dsb4.d3.invariants", E,
      "B_4^(3) abelianizes to (0,[2,2,2,2,2,2,2,2,4]) both as ker(phi) and along the derived "
      "series",
      [](Context& ctx) {
        auto const& p = ctx.phi();
        std::string want = "(0,[2,2,2,2,2,2,2,2,4])";
        return exact(p.via_phi.str() == want && p.via_series.str() == want,
                     "ker(phi) " + p.via_phi.str() + ", series " + p.via_series.str());
      });
  add("dsb4.b_power", E, "b^3 = r3 r2 r1 and b^4 rewrites to C1 B4 A1 C4 Y1 X2 in Gamma2(B_4)",
      [](Context&) { return from_check(rp2::b4_power_check()); });
  add("dsb4.gensk", E, "the sixteen listed braids generate K = ker(tau, alpha) of index 48",
      [](Context&) { return from_check(rp2::gensk_check()); });

  add("gamma2rp34.m3.chain", E,
      "M3 has derived series (0,[3]) -> (0,[2,2,2,2]) -> (9,[2]) with steps 3 and 16, matching "
      "Gamma2(B_3), and M3/M3^(2) is isomorphic to Gamma2(B_3)/B_3^(3)",
      [](Context& ctx) {
        auto const& m = ctx.m3_series();
        auto const& b = ctx.braid_series(3);
        auto o = chain_claim(m, 0, {"(0,[3])", "(0,[2,2,2,2])", "(9,[2])"}, {3, 16});
        bool ok = o.status == Status::Pass;
        for (std::size_t k = 0; k < 3; ++k) {
          ok = ok && m.stage(k).invariants == b.stage(k + 1).invariants;
          if (k > 0) ok = ok && m.stage(k).step_index == b.stage(k + 1).step_index;
        }
        auto im = identify(permutation_group(m.quotient_table(2)));
        auto ib = identify(permutation_group(b.relative_quotient_table(1, 3)));
        ok = ok && im.exact && ib.exact && im.name == ib.name && !im.name.empty();
        return exact(ok, o.details + "; M3/M3^(2) " + im.str() + "; Gamma2(B_3)/B_3^(3) " +
                             ib.str());
      });
  for (auto const& spec : rp2::identity_specs()) {
    add("identity." + spec.name, C,
        spec.lhs + " = " + spec.rhs + " in B_" + std::to_string(spec.n),
        [spec](Context& ctx) { return identity_claim(ctx, spec); });
  }
  add("lambda.order", C, "Lambda is finite of order 48 and maps isomorphically onto L",
      [](Context& ctx) {
        auto lam = rp2::lambda_presentation();
        std::optional<CosetTable> t;
        try {
          t = cached_todd_coxeter(ctx.cache(), lam, {}, ctx.limits());
        } catch (EnumerationExceeded const& e) {
          return Outcome{Status::Undecided, std::string("enumeration capped: ") + e.what()};
        }
        auto lp = group_model("L").presentation;
        auto lt = cached_todd_coxeter(ctx.cache(), lp, {}, ctx.limits());
        auto phi = rp2::lambda_to_l();
        PermHom h{lam, {}};
        for (std::size_t g = 0; g < lam.generator_count(); ++g)
          h.images.push_back(word_permutation(lt, phi.image(g)));
        bool hom = all_trivial(check_homomorphism(h));
        auto image = FiniteGroup(h.images, lt.size()).order();
        auto details = "order " + std::to_string(t->size()) + ", relators of Lambda " +
                       (hom ? "hold" : "fail") + " in L, image of order " +
                       std::to_string(image);
        if (!hom) return Outcome{Status::Fail, details};
        if (t->size() != 48 || image != 48) return Outcome{Status::Fail, details};
        return Outcome{Status::Consistent, details};
      });

  add("actions.phi_rho3_sq", E,
      "conjugation by r3^2 on F5, moved to the basis e1..e5, is the listed action letter for "
      "letter",
      [](Context&) { return from_check(rp2::phi_rho3_sq_check()); });
  add("actions.z4.minus_identity", E,
      "conjugation by a^4 induces -1 on the abelianization of F5 x| F3, and its square is the "
      "identity on the free group since a^8 is central",
      [](Context&) {
        auto t = rp2::action_z4();
        auto t2 = rp2::power(t, 2);
        bool id2 = true;
        for (std::size_t g = 0; g < t.basis()->size(); ++g)
          id2 = id2 && t2.images.image(g) == Word::generator(t.basis(), g);
        bool minus = is_scalar(induced_matrix(t), -1);
        return exact(minus && id2, std::string("induced matrix ") + (minus ? "is" : "is not") +
                                       " -I; square " + (id2 ? "is" : "is not") +
                                       " the identity");
      });
  add("actions.f3.trivial_on_f5ab", E,
      "conjugation by B23, r3 B23 r3^-1 and r3^2 acts trivially on the abelianization of F5",
      [](Context&) {
        std::vector<std::string> parts;
        bool ok = true;
        for (auto make : {rp2::action_b23, rp2::action_r3b23, rp2::action_r3sq}) {
          auto t = make();
          bool id = is_scalar(induced_matrix(t), 1);
          ok = ok && id;
          parts.push_back(t.name + (id ? ": identity" : ": not the identity"));
        }
        return exact(ok, join(parts, "; "));
      });
  for (auto const& a : kActions) {
    auto t = a.make();
    for (std::size_t g = 0; g < t.basis()->size(); ++g) {
      add("actions.conj." + std::string(a.key) + "." + t.basis()->name(g), C,
          "conjugation by " + std::string(a.conjugator) + " sends " + t.basis()->name(g) +
              " to " + apply_action(t, Word::generator(t.basis(), g)).str() + " in B_4",
          [&a, g](Context& ctx) { return action_claim(ctx, a, g); });
    }
  }

  add("remark.f129", E,
      "the tau-prefix transversal has 32 cosets, the Schreier basis has 129 elements, and "
      "phi^2(tau5 e3 tau2^-1) abelianizes to the eleven-term vector, which differs from the "
      "input",
      [](Context&) { return from_check(rp2::remark_f129_check().check); });

  std::sort(out.begin(), out.end(),
            [](Claim const& a, Claim const& b) { return a.info.id < b.info.id; });
  return out;
}

std::vector<Claim> const& registry() {
  static auto const all = build_claims();
  return all;
}

ClaimResult run_one(Claim const& c, Context& ctx) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.check(ctx);
  } catch (EnumerationExceeded const& e) {
    o = {c.info.cls == ClaimClass::Exact ? Status::Fail : Status::Undecided,
         std::string("limit reached: ") + e.what()};
  } catch (TooLarge const& e) {
    o = {c.info.cls == ClaimClass::Exact ? Status::Fail : Status::Undecided,
         std::string("limit reached: ") + e.what()};
  } catch (std::exception const& e) {
    o = {Status::Fail, std::string("error: ") + e.what()};
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ctx.cfg.deterministic) ms = 0;
  return {c.info.id, c.info.cls, o.status, c.info.statement, std::move(o.details), ms};
}

}  // namespace

std::vector<ClaimInfo> const& claims() {
  static auto const infos = [] {
    std::vector<ClaimInfo> v;
    for (auto const& c : registry()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

Report run_claims(std::vector<std::string> const& selection, Config const& config) {
  auto const& all = registry();
  std::vector<Claim const*> todo;
  if (selection.empty()) {
    for (auto const& c : all) todo.push_back(&c);
  } else {
    for (auto const& id : selection) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](Claim const& c) { return c.info.id == id; });
      if (it == all.end()) throw UnknownClaimId(id);
      if (std::find(todo.begin(), todo.end(), &*it) == todo.end()) todo.push_back(&*it);
    }
    std::sort(todo.begin(), todo.end(),
              [](Claim const* a, Claim const* b) { return a->info.id < b->info.id; });
  }

  Context ctx(config);
  std::vector<ClaimResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) results[i] = run_one(*todo[i], ctx);
  };
  std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(1, todo.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report r{version(), config, std::move(results), {}};
  for (auto const& c : r.results) {
    switch (c.status) {
      case Status::Pass: ++r.summary.pass; break;
      case Status::Fail: ++r.summary.fail; break;
      case Status::Consistent: ++r.summary.consistent; break;
      case Status::Undecided: ++r.summary.undecided; break;
      case Status::Skipped: ++r.summary.skipped; break;
    }
  }
  return r;
}

std::string to_json(Report const& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  auto& cfg = j["config"];
  cfg["jobs"] = r.config.jobs;
  cfg["max_cosets"] = r.config.max_cosets;
  cfg["kb_max_rules"] = r.config.kb_max_rules;
  cfg["cache_dir"] = r.config.cache_dir ? nlohmann::ordered_json(r.config.cache_dir->string())
                                        : nlohmann::ordered_json(nullptr);
  cfg["deterministic"] = r.config.deterministic;
  auto claims = nlohmann::ordered_json::array();
  for (auto const& c : r.results) {
    nlohmann::ordered_json x;
    x["id"] = c.id;
    x["class"] = to_string(c.cls);
    x["status"] = to_string(c.status);
    x["statement"] = c.statement;
    x["details"] = c.details;
    x["elapsed_ms"] = c.elapsed_ms;
    claims.push_back(std::move(x));
  }
  j["claims"] = std::move(claims);
  auto& s = j["summary"];
  s["pass"] = r.summary.pass;
  s["fail"] = r.summary.fail;
  s["consistent"] = r.summary.consistent;
  s["undecided"] = r.summary.undecided;
  s["skipped"] = r.summary.skipped;
  return j.dump(2) + "\n";
}

std::string to_text(Report const& r) {
  std::ostringstream os;
  os << "fpg verify " << r.version << " (max cosets " << r.config.max_cosets
     << ", rewriting rules " << r.config.kb_max_rules << ")\n";
  std::size_t width = 0;
  for (auto const& c : r.results) width = std::max(width, c.id.size());
  for (auto const& c : r.results) {
    auto status = to_string(c.status);
    os << status << std::string(11 - status.size(), ' ') << c.id
       << std::string(width + 2 - c.id.size(), ' ') << c.elapsed_ms << " ms  " << c.details
       << "\n";
  }
  std::vector<std::string> undecided;
  for (auto const& c : r.results)
    if (c.status == Status::Undecided) undecided.push_back(c.id);
  if (!undecided.empty()) os << "UNDECIDED: " << join(undecided, ", ") << "\n";
  os << "summary: pass " << r.summary.pass << ", fail " << r.summary.fail << ", consistent "
     << r.summary.consistent << ", undecided " << r.summary.undecided << ", skipped "
     << r.summary.skipped << "\n";
  return os.str();
}

}  // namespace fpg::verify
