#include "gsa/delta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/kde.hpp"
#include "gsa/parallel.hpp"

namespace gsa {

namespace {

// Midrank transform to (0,1): ties share the average of their ranks, so any
// strictly monotone transform of y yields the identical vector.
std::vector<double> rank_transform(const std::vector<double>& y) {
  std::size_t n = y.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });
  std::vector<double> u(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && y[order[j + 1]] == y[order[i]]) ++j;
    double midrank = 0.5 * static_cast<double>(i + j) + 0.5;  // 0-based -> +0.5
    double val = midrank / static_cast<double>(n);
    for (std::size_t k = i; k <= j; ++k) u[order[k]] = val;
    i = j + 1;
  }
  return u;
}

std::vector<std::size_t> order_by_column(const Matrix& x, std::size_t col) {
  std::vector<std::size_t> order(x.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x(a, col) < x(b, col);
  });
  return order;
}

}  // namespace

DeltaResult delta_given_data(const Matrix& x, const std::vector<double>& y,
                             std::size_t partitions, std::uint64_t seed) {
  (void)seed;  // estimator is deterministic; seed kept for manifest provenance
  std::size_t n = x.rows(), p = x.cols();
  if (n != y.size()) throw ConfigError("delta_given_data: X rows != y length");
  if (p == 0) throw ConfigError("delta_given_data: empty input matrix");
  if (partitions == 0)
    partitions = std::max<std::size_t>(
        8, static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) / 5.0));
  if (partitions < 2)
    throw ConfigError("delta_given_data: need at least 2 partitions");
  if (n < 50 * partitions)
    throw ConfigError("delta_given_data: need n >= 50*partitions (n=" +
                      std::to_string(n) + ", partitions=" +
                      std::to_string(partitions) + ")");

  DeltaResult res;
  res.n = n;
  res.partitions.assign(p, partitions);

  auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*ymin == *ymax) {
    res.zero_variance = true;
    res.values.assign(p, 0.0);
    res.values_raw.assign(p, 0.0);
    return res;
  }

  std::vector<double> u = rank_transform(y);
  std::vector<double> pooled = u;
  std::sort(pooled.begin(), pooled.end());
  double h_pool = silverman_bandwidth(pooled);
  res.bandwidth = h_pool;

  double pad = 8.0 * std::max(h_pool, 1e-3);
  const std::size_t g = 512;
  std::vector<double> grid(g);
  for (std::size_t k = 0; k < g; ++k)
    grid[k] = -pad + (1.0 + 2.0 * pad) * static_cast<double>(k) /
                         static_cast<double>(g - 1);

  std::vector<double> marginal = kde_gaussian(pooled, h_pool, grid);

  res.values_raw.assign(p, 0.0);
  res.values.assign(p, 0.0);
  std::vector<double> raw(p, 0.0);
  parallel_for(p, [&](std::size_t i) {
    auto order = order_by_column(x, i);
    double acc = 0.0;
    for (std::size_t c = 0; c < partitions; ++c) {
      std::size_t lo = c * n / partitions;
      std::size_t hi = (c + 1) * n / partitions;
      std::vector<double> cls(hi - lo);
      for (std::size_t k = lo; k < hi; ++k) cls[k - lo] = u[order[k]];
      std::sort(cls.begin(), cls.end());
      double h_c = silverman_bandwidth(cls);
      std::vector<double> cond = kde_gaussian(cls, h_c, grid);
      double area = l1_distance_trapezoid(grid, marginal, cond);
      double w = static_cast<double>(hi - lo) / static_cast<double>(n);
      acc += 0.5 * w * area;
    }
    raw[i] = acc;
  });
  res.values_raw = raw;
  for (std::size_t i = 0; i < p; ++i)
    res.values[i] = std::clamp(raw[i], 0.0, 1.0);
  return res;
}

std::vector<EffectCurve> conditional_density_curves(const Matrix& x,
                                                    const std::vector<double>& y,
                                                    std::size_t input_index,
                                                    std::size_t n_slices,
                                                    std::size_t grid_points) {
  std::size_t n = x.rows();
  if (n != y.size())
    throw ConfigError("conditional_density_curves: X rows != y length");
  if (input_index >= x.cols())
    throw ConfigError("conditional_density_curves: input index out of range");
  if (n_slices < 2) throw ConfigError("conditional_density_curves: n_slices >= 2");
  if (n < 50 * n_slices)
    throw ConfigError("conditional_density_curves: need n >= 50*n_slices");
  if (grid_points < 16)
    throw ConfigError("conditional_density_curves: grid too coarse");

  std::vector<double> sorted_y = y;
  std::sort(sorted_y.begin(), sorted_y.end());
  double h = silverman_bandwidth(sorted_y);
  if (!(h > 0.0)) {
    double scale = std::max(1.0, std::fabs(sorted_y.front()));
    h = 1e-3 * scale;
  }
  double lo_y = sorted_y.front() - 8.0 * h;
  double hi_y = sorted_y.back() + 8.0 * h;

  std::vector<double> grid(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k)
    grid[k] = lo_y + (hi_y - lo_y) * static_cast<double>(k) /
                         static_cast<double>(grid_points - 1);

  std::vector<EffectCurve> out;
  EffectCurve marg;
  marg.input_index = input_index;
  marg.kind = EffectCurve::Kind::DensitySlice;
  marg.grid = grid;
  marg.value = kde_gaussian(sorted_y, h, grid);
  marg.label = "marginal";
  out.push_back(std::move(marg));

  auto order = order_by_column(x, input_index);
  for (std::size_t c = 0; c < n_slices; ++c) {
    std::size_t lo = c * n / n_slices;
    std::size_t hi = (c + 1) * n / n_slices;
    std::vector<double> cls(hi - lo);
    double xmid = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      cls[k - lo] = y[order[k]];
      xmid += x(order[k], input_index);
    }
    xmid /= static_cast<double>(hi - lo);
    std::sort(cls.begin(), cls.end());
    double h_c = silverman_bandwidth(cls);
    EffectCurve curve;
    curve.input_index = input_index;
    curve.kind = EffectCurve::Kind::DensitySlice;
    curve.grid = grid;
    curve.value = kde_gaussian(cls, h_c, grid);
    curve.label = "slice_" + std::to_string(c + 1) + "_x~" + std::to_string(xmid);
    out.push_back(std::move(curve));
  }
  return out;
}

}  // namespace gsa
