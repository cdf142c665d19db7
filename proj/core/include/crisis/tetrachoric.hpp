#pragma once

#include <string>
#include <vector>

#include "crisis/panel.hpp"

namespace crisis {

/// 2x2 joint counts of two paired binary series; first index is the first
/// series' value, so n10 counts years where a=1 and b=0.
struct ContingencyTable {
  long n11 = 0;
  long n10 = 0;
  long n01 = 0;
  long n00 = 0;

  long total() const { return n11 + n10 + n01 + n00; }
  long row1() const { return n11 + n10; }  // a = 1 margin
  long col1() const { return n11 + n01; }  // b = 1 margin
};

/// Counts over the intersection of observed years only.
/// Throws Error when the two series share no observed year.
ContingencyTable cross_tabulate(const BinarySeries& a, const BinarySeries& b);

enum class Coefficient { Tetrachoric, Phi };
std::string_view to_string(Coefficient c);
Coefficient parse_coefficient(std::string_view name);

struct TetrachoricResult {
  double rho = 0.0;
  double se = 0.0;
  double z1 = 0.0;       // latent threshold of the first series
  double z2 = 0.0;
  double p_value = 1.0;
  std::string stars;     // "", "*", "**", "***" at the configured levels
  bool corrected = false;  // 0.5 added to every cell (some raw cell was 0)
  bool defined = false;    // false when a raw margin is 0 or n
  long n = 0;
};

/// Default significance cut points (descending): 10%, 5%, 1%.
const std::vector<double>& default_alpha_levels();

/// Number-of-stars string for a p-value given descending alpha levels.
std::string stars_for_p(double p, const std::vector<double>& alphas);

/// Latent bivariate-normal threshold estimate. Thresholds are fixed from the
/// margins; rho solves the upper-orthant equation P(X > z1, Y > z2; rho) =
/// n11/n by bracketed root-finding to 1e-10. A table with a constant series
/// (raw margin 0 or n) yields defined = false.
TetrachoricResult estimate_tetrachoric(
    const ContingencyTable& table,
    const std::vector<double>& alphas = default_alpha_levels());

/// Pearson correlation applied directly to the 0/1 data, for sensitivity
/// checks. Significance via z = sqrt(n) * |phi|.
TetrachoricResult estimate_phi(
    const ContingencyTable& table,
    const std::vector<double>& alphas = default_alpha_levels());

TetrachoricResult estimate_binary_correlation(
    const ContingencyTable& table, Coefficient coefficient,
    const std::vector<double>& alphas = default_alpha_levels());

double phi_coefficient(const ContingencyTable& table);

enum class Strength { Moderate, Strong };

/// Moderate iff |rho| <= 0.7 (boundary inclusive).
Strength classify_strength(double rho);

}  // namespace crisis
