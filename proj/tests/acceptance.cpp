// Runs the claim suite and the property suites, one line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "fpg/rp2/registry.hpp"
#include "fpg/verify.hpp"
#include "properties.hpp"

using namespace fpg;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;  // claim ids starting with any of these
};

bool starts_with(std::string const& s, std::string const& p) { return s.rfind(p, 0) == 0; }

bool settled(verify::Status s) {
  return s == verify::Status::Pass || s == verify::Status::Consistent;
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "B2 has 16 elements and is Q16", {"lcsbn."}},
      {2, "abelianizations of B1..B5", {"bnabz."}},
      {3, "Reidemeister-Schreier presentations of Gamma2(B_n)", {"fullpres."}},
      {4, "lower central series stabilizes at Gamma2", {"lcs."}},
      {5, "Gamma2(B5) is perfect", {"dsbn.n5."}},
      {6, "derived series of B3", {"dsbn.b3."}},
      {7, "derived series of B4", {"dsb4."}},
      {8, "M3 pipeline and braid identities", {"gamma2rp34.", "identity."}},
      {9, "conjugation action tables", {"actions."}},
      {10, "Schreier basis of F129 and the induced action", {"remark."}},
  };

  verify::Config cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto start = std::chrono::steady_clock::now();
  auto report = verify::run_claims({}, cfg);

  bool all_ok = true;
  for (auto const& c : criteria) {
    std::size_t count = 0;
    long long ms = 0;
    std::vector<std::string> bad;
    for (auto const& r : report.results) {
      bool member = false;
      for (auto const& p : c.prefixes) member = member || starts_with(r.id, p);
      if (!member) continue;
      ++count;
      ms += r.elapsed_ms;
      if (!settled(r.status)) bad.push_back(r.id + " " + verify::to_string(r.status) + ": " + r.details);
    }
    bool ok = count > 0 && bad.empty();
    all_ok = all_ok && ok;
    std::cout << "CRITERION " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << count << " claims, " << ms << " ms)\n";
    for (auto const& b : bad) std::cout << "    " << b << "\n";
  }

  auto t0 = std::chrono::steady_clock::now();
  auto reg = rp2::build_registry({});
  std::vector<std::pair<std::string, testing::PropertyResult>> props;
  props.emplace_back("Nielsen-Schreier rank", testing::nielsen_schreier(100, 1));
  props.emplace_back("Smith normal form", testing::smith_form(100, 2));
  props.emplace_back("relator action on tables", testing::relator_triviality(testing::constructed_tables(reg)));
  props.emplace_back("word problem soundness", testing::wp_soundness(reg, 1000, 3));
  auto prop_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  bool props_ok = true;
  for (auto const& [name, r] : props) props_ok = props_ok && r.ok();
  all_ok = all_ok && props_ok;
  std::cout << "CRITERION 11: " << (props_ok ? "PASS" : "FAIL") << "  property suites (" << prop_ms << " ms)\n";
  for (auto const& [name, r] : props) std::cout << "    " << name << ": " << r.summary() << "\n";

  auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << "claims: pass " << report.summary.pass << ", fail " << report.summary.fail << ", consistent "
            << report.summary.consistent << ", undecided " << report.summary.undecided << "; total " << total
            << " ms\n";
  return all_ok ? 0 : 1;
}
