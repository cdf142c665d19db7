#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "crisis/panel.hpp"
#include "crisis/runs_test.hpp"
#include "crisis/tetrachoric.hpp"

namespace crisis {

/// Deterministic portable generator: xoshiro256++ seeded via splitmix64.
/// Uniform doubles take the top 53 bits, shifted into (0, 1]; normals come
/// from the Box-Muller transform. Identical seeds give identical streams on
/// every platform with IEEE doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in (0, 1] (never 0, so log() is safe).
  double next_unit();
  double next_normal();
  /// Uniform integer in [0, n), unbiased via rejection. n >= 1.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> state_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// Generative counterpart of the latent threshold model: a pair of binary
/// series obtained by thresholding correlated standard normals.
struct LatentModelSpec {
  double rho = 0.0;   // |rho| < 1
  double tau1 = 0.0;
  double tau2 = 0.0;
  int length = 1;     // >= 1
  std::uint64_t seed = 0;
};

std::pair<BinarySeries, BinarySeries> generate_pair(const LatentModelSpec& spec);

/// Block-constant latent correlation: within[b] inside block b, `across`
/// everywhere else. Validated positive semidefinite (smallest eigenvalue
/// >= -1e-10) before sampling.
struct BlockStructure {
  std::vector<int> block_of;    // one entry per country
  std::vector<double> within;   // one entry per block
  double across = 0.0;
};

/// Thresholded multivariate latent draws, one column per year starting at
/// `start_year`. Country codes are generated as AAA, AAB, ... in order.
/// Throws Error when the implied correlation matrix is not PSD.
CrisisPanel generate_panel(const std::vector<double>& thresholds,
                           const BlockStructure& blocks, int length,
                           std::uint64_t seed, int start_year = 1800);

/// Monte Carlo two-sided runs-test p-value from uniformly shuffled copies,
/// under the same convention as exact_p. iterations >= 1000.
double permutation_runs_p(
    const BinarySeries& series, int iterations, std::uint64_t seed,
    ExactPConvention convention = ExactPConvention::DoubledTail);

/// P(X > h, Y > k; rho) by tensor-product Gauss-Legendre quadrature of the
/// bivariate density. Independent of the single-integral path used by
/// bvn_cdf, so the two can cross-check each other.
double orthant_2d_quadrature(double h, double k, double rho);

/// Brute-force reference for the tetrachoric estimator: the grid value in
/// {-1+step, ..., 1-step} minimizing |orthant(z1, z2; rho) - n11/n|, with the
/// orthant probability evaluated by orthant_2d_quadrature. The same zero-cell
/// correction as estimate_tetrachoric is applied first. step in (0, 0.01].
double grid_tetrachoric(const ContingencyTable& table, double step);

}  // namespace crisis
