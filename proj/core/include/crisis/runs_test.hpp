#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crisis/panel.hpp"

namespace crisis {

/// Two-sided rule used to turn the exact run-count distribution into a
/// p-value. The doubled smaller tail (capped at 1) is the default; the
/// alternatives exist because published tables do not always state theirs.
enum class ExactPConvention {
  DoubledTail,   // min(1, 2 * min(P(R <= r), P(R >= r)))
  MassSum,       // sum of masses not exceeding the observed mass
  OneSidedLow,   // P(R <= r): too-few-runs (clustering) tail only
};

std::string_view to_string(ExactPConvention c);
ExactPConvention parse_convention(std::string_view name);

struct RunsTestResult {
  std::string country;
  int n = 0;
  int n_ones = 0;
  int n_zeros = 0;
  int r_observed = 0;
  double mean_runs = 0.0;
  double var_runs = 0.0;
  double z_stat = 0.0;
  double p_exact = 1.0;
  double p_approx = 1.0;
  ExactPConvention convention = ExactPConvention::DoubledTail;
  bool degenerate = false;      // series has only one symbol; p fields unset
  bool approx_defined = true;   // false when var_runs <= 0
};

/// Number of maximal blocks of equal consecutive values. Throws on empty.
int count_runs(std::span<const std::uint8_t> values);
int count_runs(const BinarySeries& series);

/// Exact distribution of the run count given the symbol counts, as a vector
/// indexed by r (index 0..n; mass zero outside [2, n]). Masses are computed
/// in log space from log-gamma and normalized. Throws when either count is
/// zero (the test is undefined for a constant series).
std::vector<double> runs_pmf(int n_ones, int n_zeros);

/// Closed-form moments of the run-count distribution.
double runs_mean(int n_ones, int n_zeros);
double runs_variance(int n_ones, int n_zeros);

double exact_p_from_counts(int n_ones, int n_zeros, int r_observed,
                           ExactPConvention convention);
double exact_p(const BinarySeries& series,
               ExactPConvention convention = ExactPConvention::DoubledTail);

struct NormalApprox {
  double mean_runs = 0.0;
  double var_runs = 0.0;
  double z_stat = 0.0;
  double p_approx = 1.0;
  bool defined = false;  // false when var_runs <= 0
};

/// Normal approximation to the runs test. No continuity correction unless
/// requested.
NormalApprox approx_p(int n_ones, int n_zeros, int r_observed,
                      bool continuity_correction = false);
NormalApprox approx_p(const BinarySeries& series,
                      bool continuity_correction = false);

RunsTestResult run_test(const BinarySeries& series,
                        ExactPConvention convention = ExactPConvention::DoubledTail,
                        bool continuity_correction = false);

/// One result per country, in panel (code) order. Degenerate countries are
/// flagged rather than failing the batch.
std::vector<RunsTestResult> run_test_all(
    const CrisisPanel& panel,
    ExactPConvention convention = ExactPConvention::DoubledTail,
    bool continuity_correction = false);

/// Batch CSV: country_code,n,n_ones,runs,mean,variance,z,p_exact,p_approx,flag
/// preceded by a `# convention: <name>` comment line.
std::string runs_results_csv(const std::vector<RunsTestResult>& results);

}  // namespace crisis
