#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crisis/association.hpp"
#include "crisis/clustering.hpp"

namespace crisis {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  std::string hex() const;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Diverging palette, linear in rho: saturated blue at -1, white at 0,
/// saturated warm red at +1. Pure function of rho at 8-bit precision.
Rgb heatmap_color(double rho);

enum class HeatmapAnnotation { None, Stars };

/// k x k colored grid with per-cell axis labels, hatched undefined cells,
/// a red diagonal, a color legend, and (with Stars) per-cell significance
/// annotations plus the legend lines explaining them.
std::string render_heatmap(const AssociationMatrix& matrix,
                           HeatmapAnnotation annotate = HeatmapAnnotation::None);

/// Horizontal dendrogram: leaf labels on the left, merge heights along the
/// horizontal axis. With a cutoff, a dotted line is drawn and the groups
/// below it are colored distinctly.
std::string render_dendrogram(const Dendrogram& tree,
                              std::optional<double> cutoff = std::nullopt);

}  // namespace crisis
