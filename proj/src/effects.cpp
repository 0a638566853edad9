#include "gsa/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/stats.hpp"

namespace gsa {

double EffectCurve::weighted_mean() const {
  if (grid.empty()) return 0.0;
  double sw = 0.0, swv = 0.0;
  for (std::size_t k = 0; k < value.size(); ++k) {
    double w = weight.empty() ? 1.0 : weight[k];
    sw += w;
    swv += w * value[k];
  }
  return sw > 0.0 ? swv / sw : 0.0;
}

double EffectCurve::interpolate(double x) const {
  if (grid.empty()) return 0.0;
  if (x <= grid.front()) return value.front();
  if (x >= grid.back()) return value.back();
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  std::size_t lo = hi - 1;
  double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
  return value[lo] + t * (value[hi] - value[lo]);
}

std::string to_string(EffectCurve::Kind k) {
  switch (k) {
    case EffectCurve::Kind::SobolMain: return "sobol_main";
    case EffectCurve::Kind::Ale: return "ale";
    case EffectCurve::Kind::DensitySlice: return "density_slice";
  }
  return "?";
}

namespace {

// Shared binned conditional-mean machinery. `edges_of` maps a bin count to
// column bin edges (left-open except the first); bins with no data trigger
// a retry at half the bin count.
struct BinnedMeans {
  std::vector<double> grid;
  std::vector<double> value;
  std::vector<double> weight;
  bool reduced = false;
};

BinnedMeans binned_means_by_rank(const std::vector<double>& xi,
                                 const std::vector<double>& y,
                                 std::size_t bins, bool grid_from_data,
                                 const MarginalDist* dist) {
  std::size_t n = xi.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xi[a] < xi[b]; });

  double ybar = mean(y);
  bool reduced = false;
  while (bins >= 2) {
    BinnedMeans out;
    out.reduced = reduced;
    out.grid.reserve(bins);
    out.value.reserve(bins);
    out.weight.reserve(bins);
    bool ok = true;
    for (std::size_t b = 0; b < bins && ok; ++b) {
      std::size_t lo = b * n / bins;
      std::size_t hi = (b + 1) * n / bins;
      if (hi <= lo) {
        ok = false;
        break;
      }
      double sy = 0.0, sx = 0.0;
      for (std::size_t k = lo; k < hi; ++k) {
        sy += y[order[k]];
        sx += xi[order[k]];
      }
      double cnt = static_cast<double>(hi - lo);
      double gx = grid_from_data
                      ? sx / cnt
                      : dist->quantile((static_cast<double>(b) + 0.5) /
                                       static_cast<double>(bins));
      if (!out.grid.empty() && gx <= out.grid.back()) {
        ok = false;  // ties collapsed the grid; coarsen
        break;
      }
      out.grid.push_back(gx);
      out.value.push_back(sy / cnt - ybar);
      out.weight.push_back(cnt / static_cast<double>(n));
    }
    if (ok) return out;
    bins /= 2;
    reduced = true;
  }
  throw ConfigError("effect curve: could not form at least 2 non-empty bins");
}

}  // namespace

std::vector<EffectCurve> main_effect_curves(const Matrix& x,
                                            const std::vector<double>& y,
                                            const InputSpace& space,
                                            std::size_t bins) {
  if (!space.independent())
    throw PreconditionError("Sobol' main-effect curves require independent inputs");
  if (x.rows() != y.size())
    throw ConfigError("main_effect_curves: X rows and y length differ");
  if (bins < 2) throw ConfigError("main_effect_curves: bins must be >= 2");
  if (x.rows() < 10 * bins)
    throw ConfigError("main_effect_curves: need n >= 10*bins samples");

  std::vector<EffectCurve> out;
  for (std::size_t i = 0; i < x.cols(); ++i) {
    auto bm = binned_means_by_rank(x.col(i), y, bins, false, &space.marginal(i));
    EffectCurve c;
    c.input_index = i;
    c.grid = std::move(bm.grid);
    c.value = std::move(bm.value);
    c.weight = std::move(bm.weight);
    c.kind = EffectCurve::Kind::SobolMain;
    c.reduced_bins = bm.reduced;
    out.push_back(std::move(c));
  }
  return out;
}

EffectCurve main_effect_curve_data(const Matrix& x, const std::vector<double>& y,
                                   std::size_t input_index, std::size_t bins) {
  if (x.rows() != y.size())
    throw ConfigError("main_effect_curve_data: X rows and y length differ");
  if (input_index >= x.cols())
    throw ConfigError("main_effect_curve_data: input index out of range");
  if (bins < 2) throw ConfigError("main_effect_curve_data: bins must be >= 2");
  if (x.rows() < 10 * bins)
    throw ConfigError("main_effect_curve_data: need n >= 10*bins samples");

  auto bm = binned_means_by_rank(x.col(input_index), y, bins, true, nullptr);
  EffectCurve c;
  c.input_index = input_index;
  c.grid = std::move(bm.grid);
  c.value = std::move(bm.value);
  c.weight = std::move(bm.weight);
  c.kind = EffectCurve::Kind::SobolMain;
  c.reduced_bins = bm.reduced;
  return c;
}

}  // namespace gsa
