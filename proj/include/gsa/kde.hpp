#ifndef GSA_KDE_HPP
#define GSA_KDE_HPP

#include <span>
#include <vector>

namespace gsa {

/// Silverman's rule of thumb: 0.9 min(sd, IQR/1.34) n^{-1/5}.
double silverman_bandwidth(std::span<const double> sample);

/// Gaussian-kernel density estimate evaluated on an increasing grid.
/// Direct summation with the kernel truncated at 8 bandwidths; the sample
/// must be sorted ascending.
std::vector<double> kde_gaussian(std::span<const double> sorted_sample,
                                 double bandwidth,
                                 std::span<const double> grid);

/// Trapezoid integral of |f - g| tabulated on a shared increasing grid.
double l1_distance_trapezoid(std::span<const double> grid,
                             std::span<const double> f,
                             std::span<const double> g);

}  // namespace gsa

#endif
