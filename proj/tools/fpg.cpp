#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/errors.hpp"
#include "fpg/group_id.hpp"
#include "fpg/presentation.hpp"
#include "fpg/rp2/registry.hpp"
#include "fpg/series.hpp"
#include "fpg/table_cache.hpp"
#include "fpg/verify.hpp"

namespace {

constexpr int kUsageError = 2;

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw fpg::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One word per line; blank lines and '#' comments are skipped.
std::vector<fpg::Word> read_words(fpg::Presentation const& p, std::string const& path) {
  std::vector<fpg::Word> out;
  std::istringstream lines(slurp(path));
  for (std::string line; std::getline(lines, line);) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(p.word(line));
  }
  return out;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

int run_series(std::string const& id, std::size_t depth, std::size_t max_index) {
  fpg::SeriesLimits limits;
  limits.max_index = max_index;
  fpg::DerivedSeries ds(fpg::rp2::group_presentation(id), depth, limits);
  std::cout << "derived series of " << id << " to depth " << depth << "\n";
  std::cout << pad("stage", 7) << pad("index", 8) << pad("gens", 7) << pad("simplified", 12)
            << pad("abelianization", 28) << "G/G^(k)\n";
  for (auto const& s : ds.stages()) {
    std::string quotient = "-";
    if (s.level > 0) {
      auto t = ds.quotient_table(s.level);
      auto id = fpg::identify(fpg::permutation_group(t));
      quotient = id.name.empty() ? "order " + std::to_string(t.size()) : id.str();
    }
    auto simplified = fpg::tietze_simplify(s.presentation).presentation.generator_count();
    std::cout << pad(std::to_string(s.level), 7) << pad(std::to_string(s.index), 8)
              << pad(std::to_string(s.presentation.generator_count()), 7)
              << pad(std::to_string(simplified), 12) << pad(s.invariants.str(), 28) << quotient
              << "\n";
  }
  if (ds.stopped_infinite())
    std::cout << "last stage has infinite abelianization; the series cannot be continued by finite index\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented groups: enumeration, rewriting and verification"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run verification claims");
  bool all = false;
  std::vector<std::string> claim_ids;
  std::string format = "text";
  std::string cache_dir;
  bool list = false;
  fpg::verify::Config cfg;
  auto* all_opt = verify->add_flag("--all", all, "Run every claim");
  verify->add_option("--claim", claim_ids, "Claim ids to run")->excludes(all_opt);
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--cache-dir", cache_dir, "Directory for cached coset tables");
  verify->add_option("--jobs", cfg.jobs, "Parallel claims")->check(CLI::PositiveNumber);
  verify->add_option("--max-cosets", cfg.max_cosets, "Coset enumeration limit")
      ->check(CLI::PositiveNumber);
  verify->add_option("--kb-max-rules", cfg.kb_max_rules, "Knuth-Bendix rule limit")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--deterministic", cfg.deterministic, "Report elapsed_ms as 0");
  verify->add_flag("--list", list, "List claim ids and exit");

  auto* series = app.add_subcommand("series", "Derived series of a registered group");
  std::string group;
  std::size_t depth = 2;
  std::size_t max_index = fpg::SeriesLimits{}.max_index;
  series->add_option("--group", group, "bn:N, gamma2:N, M3, Lambda, L, Q8, ...")->required();
  series->add_option("--depth", depth, "Number of derived stages")->required();
  series->add_option("--max-index", max_index, "Cap on [G : G^(k)]");

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  std::string pres_file, sub_file;
  std::size_t max_cosets = fpg::EnumerationLimits{}.max_cosets;
  enumerate->add_option("--presentation", pres_file, "Presentation file")
      ->required()
      ->check(CLI::ExistingFile);
  enumerate->add_option("--subgroup", sub_file, "Subgroup generators, one word per line")
      ->check(CLI::ExistingFile);
  enumerate->add_option("--max-cosets", max_cosets, "Coset limit");
  enumerate->add_option("--cache-dir", cache_dir, "Directory for cached coset tables");

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants");
  abelianize->add_option("--presentation", pres_file, "Presentation file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) {
      if (list) {
        for (auto const& c : fpg::verify::claims())
          std::cout << c.id << "  [" << fpg::verify::to_string(c.cls) << "]  " << c.statement
                    << "\n";
        return 0;
      }
      if (!all && claim_ids.empty()) {
        std::cerr << "verify: give --all or --claim ID\n";
        return kUsageError;
      }
      if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
      fpg::verify::Report report;
      try {
        report = fpg::verify::run_claims(all ? std::vector<std::string>{} : claim_ids, cfg);
      } catch (fpg::UnknownClaimId const& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
      }
      std::cout << (format == "json" ? fpg::verify::to_json(report) : fpg::verify::to_text(report));
      return report.exit_code();
    }
    if (*series) return run_series(group, depth, max_index);
    if (*enumerate) {
      auto p = fpg::Presentation::parse(slurp(pres_file));
      std::vector<fpg::Word> sub;
      if (!sub_file.empty()) sub = read_words(p, sub_file);
      std::optional<fpg::TableCache> cache;
      if (!cache_dir.empty()) cache.emplace(cache_dir);
      fpg::EnumerationLimits limits;
      limits.max_cosets = max_cosets;
      auto t = fpg::cached_todd_coxeter(cache ? &*cache : nullptr, p, sub, limits);
      std::cout << "cosets: " << t.size() << "\n";
      for (std::size_t g = 0; g < p.generator_count(); ++g)
        std::cout << p.alphabet()->name(g) << ": " << t.permutation(g).str() << "\n";
      return 0;
    }
    if (*abelianize) {
      auto p = fpg::Presentation::parse(slurp(pres_file));
      std::cout << fpg::abelian_invariants(p).str() << "\n";
      return 0;
    }
  } catch (fpg::ParseError const& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (fpg::UnknownGroup const& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (fpg::UnknownGenerator const& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
