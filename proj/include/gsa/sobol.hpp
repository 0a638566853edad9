#ifndef GSA_SOBOL_HPP
#define GSA_SOBOL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsa/design.hpp"

namespace gsa {

/// Bootstrap summaries for a Sobol' estimate (percentile intervals at 95%).
struct SobolBootstrap {
  std::vector<double> s_lo, s_hi, st_lo, st_hi;
  std::vector<double> s_se, st_se;
  std::vector<double> diff_se;  // SE of (ST_i - S_i)
  double sum_s_se = 0.0;        // SE of sum_i S_i
  std::size_t resamples = 0;
};

struct SobolResult {
  std::vector<double> first_order;      // clamped to [-eps, 1+eps]
  std::vector<double> total;            // clamped
  std::vector<double> first_order_raw;  // unclamped estimates
  std::vector<double> total_raw;
  double total_variance = 0.0;
  std::size_t n_base = 0;
  std::uint64_t n_evals = 0;
  bool zero_variance = false;
  std::string estimator;
  std::optional<SobolBootstrap> ci;
};

struct SobolOptions {
  bool bootstrap = true;
  std::size_t n_boot = 500;
  double clamp_eps = 1e-9;
};

/// First-order indices by the Saltelli (2010) pick-freeze estimator,
/// totals by the Jansen estimator, from responses aligned to the design
/// rows. Bootstrap resamples base-sample indices jointly across blocks.
SobolResult sobol_estimate(const PickFreezeDesign& design,
                           const std::vector<double>& y,
                           const SobolOptions& opts = {});

}  // namespace gsa

#endif
