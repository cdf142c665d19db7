#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crisis/association.hpp"
#include "crisis/clustering.hpp"
#include "crisis/panel_io.hpp"
#include "crisis/runs_test.hpp"

namespace crisis {

/// Everything a run needs; every artifact is a deterministic function of
/// (input bytes, this struct).
struct RunConfig {
  std::filesystem::path input;
  PanelLayout layout = PanelLayout::Auto;
  std::optional<YearWindow> window;            // analysis window
  std::optional<std::filesystem::path> continent_map;  // builtin when unset
  ExactPConvention convention = ExactPConvention::DoubledTail;
  bool continuity_correction = false;
  std::vector<double> alphas = default_alpha_levels();  // descending
  Coefficient coefficient = Coefficient::Tetrachoric;
  bool yates = false;
  LinkageVariant linkage = LinkageVariant::Upgma;
  std::optional<double> cutoff;
  bool cutoff_auto = false;
  std::filesystem::path out_dir;  // resolved via resolve_out_dir()
  std::set<std::string> formats = {"csv", "json", "svg", "newick"};
  std::uint64_t seed = 0;
  unsigned threads = 0;
  /// The Great Recession window defaults to 2007-2014; this flag moves the
  /// start to 2006.
  bool recession_from_2006 = false;
  /// Cluster windows for cmd_report; empty = the five canonical windows.
  std::vector<YearWindow> report_windows;

  bool wants(const std::string& format) const { return formats.count(format) > 0; }
};

/// Environment variable consulted when --out is not given.
inline constexpr const char* kOutDirEnvVar = "CRISIS_ASSOC_OUT";

std::filesystem::path resolve_out_dir(const RunConfig& config);

/// The five default cluster windows, honoring recession_from_2006.
std::vector<YearWindow> canonical_windows(const RunConfig& config);

struct CommandResult {
  std::vector<std::filesystem::path> artifacts;
  std::vector<std::string> warnings;
};

LoadResult load_input(const RunConfig& config);

CommandResult cmd_ingest(const RunConfig& config);
CommandResult cmd_summary(const RunConfig& config);
CommandResult cmd_runs(const RunConfig& config);
CommandResult cmd_corr(const RunConfig& config);
CommandResult cmd_chi2(const RunConfig& config);
CommandResult cmd_cluster(const RunConfig& config);

/// Full pipeline: summary, runs test, correlation matrices + heatmaps,
/// chi-square (skipped with a warning when no continent map is usable), and
/// one cluster run per report window, plus manifest.json tying inputs,
/// configuration, and artifact hashes together.
CommandResult cmd_report(const RunConfig& config);

/// JSON for the chi-square artifact: both pair filters, the map hash, and
/// either results or a per-filter error string.
std::string chi2_json(const AssociationMatrix& matrix, const ContinentMap& map,
                      bool yates);

std::string counts_by_country_csv(const CrisisCounts& counts);
std::string counts_by_year_csv(const CrisisCounts& counts);

}  // namespace crisis
