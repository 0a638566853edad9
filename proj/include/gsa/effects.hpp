#ifndef GSA_EFFECTS_HPP
#define GSA_EFFECTS_HPP

#include <string>
#include <vector>

#include "gsa/dists.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

/// Tabulated one-dimensional effect.
struct EffectCurve {
  enum class Kind { SobolMain, Ale, DensitySlice };

  std::size_t input_index = 0;
  std::vector<double> grid;    // strictly increasing
  std::vector<double> value;
  std::vector<double> weight;  // probability mass per grid point (may be empty)
  Kind kind = Kind::SobolMain;
  bool reduced_bins = false;   // set when empty bins forced a coarser grid
  std::string label;

  /// Probability-weighted mean of the tabulated values (quadrature against
  /// the stored weights; uniform weights when none were stored).
  double weighted_mean() const;

  /// Piecewise-linear interpolation, clamped at the ends.
  double interpolate(double x) const;
};

std::string to_string(EffectCurve::Kind k);

/// Binned Sobol' main-effect curves f_i(x_i) = E[f | x_i] - f0 for every
/// input: equal-probability bins from the marginal quantiles, bin means of
/// y, overall mean subtracted. Requires independent inputs and n >= 10*bins.
std::vector<EffectCurve> main_effect_curves(const Matrix& x,
                                            const std::vector<double>& y,
                                            const InputSpace& space,
                                            std::size_t bins);

/// Same estimator driven purely by the data: equal-count bins of the
/// observed x_i, grid at within-bin means. Used for given-data tables.
EffectCurve main_effect_curve_data(const Matrix& x, const std::vector<double>& y,
                                   std::size_t input_index, std::size_t bins);

}  // namespace gsa

#endif
