#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fpg/coset_table.hpp"

namespace fpg {

// On-disk store of completed coset tables keyed by presentation and subgroup.
// One JSON file per key; writes go to a temporary file renamed into place.
class TableCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit TableCache(std::filesystem::path dir);

  std::filesystem::path const& dir() const noexcept { return dir_; }
  std::filesystem::path file_for(Presentation const& p,
                                 std::vector<Word> const& subgroup) const;

  // nullopt when absent, unreadable, stale or inconsistent with p.
  std::optional<CosetTable> load(Presentation const& p,
                                 std::vector<Word> const& subgroup) const;
  void store(Presentation const& p, std::vector<Word> const& subgroup,
             CosetTable const& t) const;

  // 64-bit FNV-1a of the canonical text, as 16 hex digits.
  static std::string presentation_hash(Presentation const& p);
  static std::string subgroup_hash(std::vector<Word> const& subgroup);

 private:
  std::filesystem::path dir_;
};

// todd_coxeter through the cache when one is given.
CosetTable cached_todd_coxeter(TableCache const* cache, Presentation const& p,
                               std::vector<Word> const& subgroup,
                               EnumerationLimits limits = {});

}  // namespace fpg
