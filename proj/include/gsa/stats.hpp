#ifndef GSA_STATS_HPP
#define GSA_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace gsa {

double mean(std::span<const double> x);
/// Population variance (divide by n).
double variance_pop(std::span<const double> x);
/// Sample variance (divide by n-1).
double variance_sample(std::span<const double> x);
double sd_sample(std::span<const double> x);
/// Median (copies and partially sorts).
double median(std::span<const double> x);
/// Empirical quantile with linear interpolation, q in [0,1].
double sample_quantile(std::span<const double> sorted, double q);

/// Standard normal CDF.
double normal_cdf(double z);
/// Standard normal quantile, Wichura's AS241 (PPND16), |error| ~ 1e-15.
double normal_quantile(double p);

}  // namespace gsa

#endif
