#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "crisis/panel.hpp"
#include "crisis/tetrachoric.hpp"

namespace crisis {

/// country code -> continent name. The default assignment uses the
/// seven-continent convention and ships with the tool; the hash of the
/// canonical serialization is reported next to every test that depends on
/// the map.
class ContinentMap {
 public:
  static ContinentMap load(std::istream& in);
  static ContinentMap load_file(const std::filesystem::path& path);
  static const ContinentMap& builtin_default();

  void assign(std::string code, std::string continent);
  /// Throws Error for an unmapped code.
  const std::string& continent_of(const std::string& code) const;
  bool covers(const std::string& code) const;
  std::size_t size() const { return assignments_.size(); }

  /// Canonical CSV (codes sorted) used for hashing and persistence.
  std::string to_csv() const;
  std::uint64_t hash() const;

 private:
  std::map<std::string, std::string> assignments_;
};

/// Symmetric grid of pairwise binary-correlation estimates. The diagonal
/// carries rho = 1 by convention and is excluded from every statistic.
struct AssociationMatrix {
  std::vector<CountryLabel> labels;
  YearWindow window;
  Coefficient coefficient = Coefficient::Tetrachoric;
  std::vector<TetrachoricResult> entries;  // k*k row-major

  std::size_t size() const { return labels.size(); }
  const TetrachoricResult& at(std::size_t i, std::size_t j) const {
    return entries[i * labels.size() + j];
  }
};

/// Estimates all unordered pairs over overlapping years. Per-pair failures
/// (no overlap, constant series) are stored as undefined entries. `threads`
/// = 0 picks the hardware concurrency; the result is identical for every
/// thread count.
AssociationMatrix pairwise_matrix(
    const CrisisPanel& panel, Coefficient coefficient = Coefficient::Tetrachoric,
    const std::vector<double>& alphas = default_alpha_levels(),
    unsigned threads = 0);

enum class PairFilter { All, SignificantOnly };
std::string_view to_string(PairFilter f);

/// 2x2 classification of defined pairs: strength (moderate/strong) against
/// continent proximity (same/different). SignificantOnly keeps pairs with at
/// least one star at the configured levels.
struct CrossTable {
  // counts[strength][proximity]; strength 0 = moderate, proximity 0 = same.
  long counts[2][2] = {{0, 0}, {0, 0}};

  long total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
  }
};

CrossTable build_cross_table(const AssociationMatrix& matrix,
                             const ContinentMap& map, PairFilter filter);

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 1;
  double p_value = 1.0;
  bool yates = false;
};

/// Pearson chi-square test of independence on the 2x2 cross table.
/// Throws Error when a margin is zero (expected counts undefined).
ChiSquareResult chi_square_independence(const CrossTable& table,
                                        bool yates = false);

std::string matrix_rho_csv(const AssociationMatrix& m);
std::string matrix_p_csv(const AssociationMatrix& m);
std::string matrix_stars_csv(const AssociationMatrix& m);

}  // namespace crisis
