#ifndef GSA_DELTA_HPP
#define GSA_DELTA_HPP

#include <cstdint>
#include <vector>

#include "gsa/effects.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

struct DeltaResult {
  std::vector<double> values;      // clamped to [0, 1+eps]
  std::vector<double> values_raw;
  std::vector<std::size_t> partitions;  // classes used per input
  std::size_t n = 0;
  double bandwidth = 0.0;          // pooled-density bandwidth (quantile space)
  bool zero_variance = false;
};

/// Borgonovo delta from a fixed (X, y) table. The response is mapped to
/// quantile (rank) space first, which makes the index exactly invariant
/// under strictly monotone transformations of y; densities are Gaussian
/// KDEs with per-sample Silverman bandwidths on a 512-point grid, and the
/// outer expectation uses exact equal-count class masses.
///
/// partitions = 0 picks the default max(8, floor(sqrt(n)/5)). The seed is
/// recorded for provenance; the estimator itself is deterministic.
DeltaResult delta_given_data(const Matrix& x, const std::vector<double>& y,
                             std::size_t partitions = 0, std::uint64_t seed = 0);

/// Fig-style conditional-density slices: the marginal response density and
/// the density conditional on x_i falling in each of n_slices equal-count
/// slices, all tabulated on one shared y-grid of `grid_points` points.
/// The first returned curve is the marginal (label "marginal").
std::vector<EffectCurve> conditional_density_curves(const Matrix& x,
                                                    const std::vector<double>& y,
                                                    std::size_t input_index,
                                                    std::size_t n_slices,
                                                    std::size_t grid_points = 512);

}  // namespace gsa

#endif
