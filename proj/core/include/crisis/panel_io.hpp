#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "crisis/panel.hpp"

namespace crisis {

enum class PanelLayout {
  Long,  // country_code,year,crisis
  Wide,  // country_code,<year>,<year>,...
  Auto,  // decide from the header row
};

PanelLayout parse_layout(std::string_view name);

struct LoadResult {
  CrisisPanel panel;
  std::vector<std::string> warnings;
};

/// Reads a comma-separated panel. Values are trimmed; crisis cells must be
/// "0", "1" or empty (missing). Errors carry the offending line number and
/// value.
LoadResult load_panel(std::istream& in, PanelLayout layout = PanelLayout::Auto);
LoadResult load_panel_file(const std::filesystem::path& path,
                           PanelLayout layout = PanelLayout::Auto);

/// Long-format serialization; `load_panel(panel_to_csv(p))` reproduces `p`
/// cell for cell.
std::string panel_to_csv(const CrisisPanel& panel);
void write_panel(const CrisisPanel& panel, std::ostream& out);

}  // namespace crisis
