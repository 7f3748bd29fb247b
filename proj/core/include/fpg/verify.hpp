#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fpg::verify {

enum class ClaimClass { Exact, Consistency };
enum class Status { Pass, Fail, Consistent, Undecided, Skipped };

std::string to_string(ClaimClass c);
std::string to_string(Status s);

struct Config {
  std::size_t jobs = 1;
  std::size_t max_cosets = 2'000'000;
  std::size_t kb_max_rules = 5000;
  std::optional<std::filesystem::path> cache_dir;
  // zero every elapsed_ms so reports compare byte for byte
  bool deterministic = false;
};

struct ClaimInfo {
  std::string id;
  ClaimClass cls;
  std::string statement;
};

// All claims, sorted by id.
std::vector<ClaimInfo> const& claims();

struct ClaimResult {
  std::string id;
  ClaimClass cls;
  Status status;
  std::string statement;
  std::string details;
  long long elapsed_ms = 0;
};

struct Summary {
  std::size_t pass = 0, fail = 0, consistent = 0, undecided = 0, skipped = 0;
};

struct Report {
  std::string version;
  Config config;
  std::vector<ClaimResult> results;  // sorted by id
  Summary summary;

  // 0 when nothing failed and no exact claim is undecided, else 1
  int exit_code() const;
};

// Empty selection runs everything. Throws UnknownClaimId.
Report run_claims(std::vector<std::string> const& selection, Config const& config);

std::string to_json(Report const& r);
std::string to_text(Report const& r);

std::string version();

}  // namespace fpg::verify
