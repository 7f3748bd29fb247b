#include "fpg/table_cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace fpg {

namespace {

std::string fnv1a(std::string const& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string TableCache::presentation_hash(Presentation const& p) { return fnv1a(p.text()); }

std::string TableCache::subgroup_hash(std::vector<Word> const& subgroup) {
  std::string s;
  for (auto const& w : subgroup) s += w.str() + "\n";
  return fnv1a(s);
}

std::filesystem::path TableCache::file_for(Presentation const& p,
                                           std::vector<Word> const& subgroup) const {
  return dir_ / ("table-" + presentation_hash(p) + "-" + subgroup_hash(subgroup) + ".json");
}

std::optional<CosetTable> TableCache::load(Presentation const& p,
                                           std::vector<Word> const& subgroup) const {
  std::ifstream in(file_for(p, subgroup));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (j.at("presentation_hash").get<std::string>() != presentation_hash(p)) return std::nullopt;
    if (j.at("subgroup_hash").get<std::string>() != subgroup_hash(subgroup)) return std::nullopt;
    auto n = j.at("n_cosets").get<std::size_t>();
    auto const& actions = j.at("actions");
    std::size_t k = p.generator_count();
    if (actions.size() != k) return std::nullopt;
    std::vector<Coset> data(n * 2 * k);
    for (std::size_t g = 0; g < k; ++g) {
      auto row = actions[g].get<std::vector<Coset>>();
      if (row.size() != n) return std::nullopt;
      for (Coset c = 0; c < n; ++c) {
        Coset d = row[c];
        if (d >= n) return std::nullopt;
        data[c * 2 * k + 2 * g] = d;
        data[d * 2 * k + 2 * g + 1] = c;
      }
    }
    CosetTable t(p.alphabet(), n, std::move(data), subgroup);
    // a damaged file must not be trusted
    if (!t.satisfies(p)) return std::nullopt;
    for (auto const& w : subgroup)
      if (!t.contains(w)) return std::nullopt;
    return t;
  } catch (std::exception const&) {
    return std::nullopt;
  }
}

void TableCache::store(Presentation const& p, std::vector<Word> const& subgroup,
                       CosetTable const& t) const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["presentation_hash"] = presentation_hash(p);
  j["subgroup_hash"] = subgroup_hash(subgroup);
  j["n_cosets"] = t.size();
  auto actions = nlohmann::json::array();
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    std::vector<Coset> row(t.size());
    for (Coset c = 0; c < t.size(); ++c) row[c] = t.act(c, Letter(static_cast<std::uint32_t>(g), false));
    actions.push_back(row);
  }
  j["actions"] = std::move(actions);

  static std::atomic<unsigned> counter{0};
  auto target = file_for(p, subgroup);
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
  auto tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      std::filesystem::remove(tmp);
      return;
    }
  }
  std::filesystem::rename(tmp, target);
}

CosetTable cached_todd_coxeter(TableCache const* cache, Presentation const& p,
                               std::vector<Word> const& subgroup, EnumerationLimits limits) {
  if (cache) {
    if (auto t = cache->load(p, subgroup)) return *t;
  }
  auto t = todd_coxeter(p, subgroup, limits);
  if (cache) cache->store(p, subgroup, t);
  return t;
}

}  // namespace fpg
