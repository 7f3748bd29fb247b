#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <set>

#include "fpg/errors.hpp"
#include "fpg/verify.hpp"

using namespace fpg;
using namespace fpg::verify;

namespace {

ClaimResult const& find(Report const& r, std::string const& id) {
  auto it = std::find_if(r.results.begin(), r.results.end(), [&](auto const& c) { return c.id == id; });
  REQUIRE(it != r.results.end());
  return *it;
}

std::vector<std::string> const kSample{"bnabz.n3", "lcs.n4.gamma2_eq_gamma3", "dsbn.b3.chain",
                                       "identity.powers.b.n3", "lambda.order", "actions.phi_rho3_sq",
                                       "dsbn.n5.perfect"};

}  // namespace

TEST_CASE("claim ids are unique and sorted", "[verify]") {
  auto const& all = claims();
  REQUIRE(all.size() > 30);
  std::set<std::string> ids;
  for (auto const& c : all) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
  }
  CHECK(std::is_sorted(all.begin(), all.end(), [](auto const& a, auto const& b) { return a.id < b.id; }));
  for (auto const& id : kSample) CHECK(ids.count(id) == 1);
}

TEST_CASE("single claims", "[verify]") {
  auto r = run_claims({"bnabz.n3"}, {});
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == Status::Pass);
  CHECK(r.results[0].details.find("(0,[2,2])") != std::string::npos);
  CHECK(r.exit_code() == 0);

  auto l = run_claims({"lcs.n4.gamma2_eq_gamma3"}, {});
  CHECK(l.results[0].status == Status::Pass);
}

TEST_CASE("status follows the claim class", "[verify]") {
  Config cfg;
  cfg.jobs = 4;
  auto r = run_claims(kSample, cfg);
  CHECK(r.results.size() == kSample.size());
  for (auto const& c : r.results) {
    INFO(c.id << " " << to_string(c.status) << " " << c.details);
    if (c.cls == ClaimClass::Exact)
      CHECK((c.status == Status::Pass || c.status == Status::Fail || c.status == Status::Skipped));
    else
      CHECK((c.status == Status::Consistent || c.status == Status::Fail || c.status == Status::Skipped ||
             c.status == Status::Undecided));
  }
  CHECK(find(r, "identity.powers.b.n3").status == Status::Consistent);
}

TEST_CASE("reports are byte identical in deterministic mode", "[verify]") {
  Config cfg;
  cfg.deterministic = true;
  auto a = to_json(run_claims(kSample, cfg));
  auto b = to_json(run_claims(kSample, cfg));
  CHECK(a == b);
  CHECK(to_text(run_claims(kSample, cfg)) == to_text(run_claims(kSample, cfg)));
}

TEST_CASE("the job count changes nothing but time", "[verify]") {
  Config one, four;
  one.deterministic = four.deterministic = true;
  four.jobs = 4;
  auto a = run_claims(kSample, one), b = run_claims(kSample, four);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].id == b.results[i].id);
    CHECK(a.results[i].status == b.results[i].status);
    CHECK(a.results[i].details == b.results[i].details);
  }
}

TEST_CASE("json report layout", "[verify]") {
  Config cfg;
  cfg.deterministic = true;
  auto j = nlohmann::json::parse(to_json(run_claims({"bnabz.n2", "bnabz.n3"}, cfg)));
  CHECK(j["version"] == version());
  CHECK(j["config"]["max_cosets"] == 2000000);
  CHECK(j["config"]["cache_dir"].is_null());
  REQUIRE(j["claims"].size() == 2);
  auto c = j["claims"][0];
  CHECK(c["id"] == "bnabz.n2");
  CHECK(c["class"] == "EXACT");
  CHECK(c["status"] == "PASS");
  CHECK(c["elapsed_ms"] == 0);
  for (auto key : {"statement", "details"}) CHECK(c.contains(key));
  CHECK(j["summary"]["pass"] == 2);
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("unknown claim ids", "[verify]") {
  CHECK_THROWS_AS(run_claims({"no.such.claim"}, {}), UnknownClaimId);
}

TEST_CASE("exit codes", "[verify]") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.results.push_back({"x", ClaimClass::Consistency, Status::Undecided, "", "", 0});
  r.summary.undecided = 1;
  CHECK(r.exit_code() == 0);
  r.results.push_back({"y", ClaimClass::Exact, Status::Undecided, "", "", 0});
  r.summary.undecided = 2;
  CHECK(r.exit_code() == 1);
  Report f;
  f.results.push_back({"z", ClaimClass::Exact, Status::Fail, "", "", 0});
  f.summary.fail = 1;
  CHECK(f.exit_code() == 1);
}

TEST_CASE("tight limits give undecided, never wrong answers", "[verify]") {
  Config cfg;
  cfg.max_cosets = 50;
  auto r = run_claims({"lambda.order", "lcsbn.n2.q16"}, cfg);
  CHECK(find(r, "lcsbn.n2.q16").status == Status::Pass);
  auto const& lam = find(r, "lambda.order");
  CHECK((lam.status == Status::Undecided || lam.status == Status::Consistent));
}
