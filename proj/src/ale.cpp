#include "gsa/ale.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/stats.hpp"

namespace gsa {

EffectCurve ale_first_order(const Model& model, const Matrix& x,
                            std::size_t input_index, std::size_t bins) {
  if (!model.evaluatable())
    throw GivenDataError(
        "ALE needs a model that can be evaluated at perturbed points; a fixed "
        "data table cannot supply the bin-edge evaluations");
  if (input_index >= x.cols()) throw ConfigError("ale: input index out of range");
  if (model.arity() != x.cols())
    throw ConfigError("ale: model arity does not match X columns");
  if (bins < 2) throw ConfigError("ale: bins must be >= 2");
  std::size_t n = x.rows();
  if (n < 10 * bins) throw ConfigError("ale: need n >= 10*bins samples");

  std::vector<double> xi = x.col(input_index);
  std::vector<double> sorted = xi;
  std::sort(sorted.begin(), sorted.end());

  // Quantile bin edges; duplicates (ties) are merged, which coarsens bins.
  std::vector<double> edges;
  edges.push_back(sorted.front());
  bool reduced = false;
  for (std::size_t b = 1; b <= bins; ++b) {
    double e = sample_quantile(sorted, static_cast<double>(b) /
                                           static_cast<double>(bins));
    if (e > edges.back())
      edges.push_back(e);
    else
      reduced = true;
  }
  if (edges.size() < 3) throw ConfigError("ale: data ties leave fewer than 2 bins");
  std::size_t k = edges.size() - 1;

  // Locate each sample's bin: (edges[b-1], edges[b]], lowest values to bin 0.
  std::vector<std::size_t> bin_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(edges.begin() + 1, edges.end(), xi[i]);
    std::size_t b = static_cast<std::size_t>(it - edges.begin()) - 1;
    bin_of[i] = std::min(b, k - 1);
  }

  // Two evaluations per sample: x_i swapped to the bin's upper and lower edge.
  Matrix pts(2 * n, x.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      pts(2 * i, j) = x(i, j);
      pts(2 * i + 1, j) = x(i, j);
    }
    pts(2 * i, input_index) = edges[bin_of[i] + 1];
    pts(2 * i + 1, input_index) = edges[bin_of[i]];
  }
  std::vector<double> fe = model.evaluate(pts);

  std::vector<double> sum(k, 0.0);
  std::vector<std::size_t> cnt(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[bin_of[i]] += fe[2 * i] - fe[2 * i + 1];
    cnt[bin_of[i]] += 1;
  }

  EffectCurve c;
  c.input_index = input_index;
  c.kind = EffectCurve::Kind::Ale;
  c.reduced_bins = reduced;
  c.grid = edges;
  c.value.assign(k + 1, 0.0);
  for (std::size_t b = 0; b < k; ++b) {
    double avg = cnt[b] > 0 ? sum[b] / static_cast<double>(cnt[b]) : 0.0;
    c.value[b + 1] = c.value[b] + avg;
  }

  // Center: subtract the sample mean of the interpolated curve.
  double center = 0.0;
  for (std::size_t i = 0; i < n; ++i) center += c.interpolate(xi[i]);
  center /= static_cast<double>(n);
  for (double& v : c.value) v -= center;

  // Edge weights from bin occupancy (half a bin's mass to each edge).
  c.weight.assign(k + 1, 0.0);
  for (std::size_t b = 0; b < k; ++b) {
    double w = 0.5 * static_cast<double>(cnt[b]) / static_cast<double>(n);
    c.weight[b] += w;
    c.weight[b + 1] += w;
  }
  return c;
}

}  // namespace gsa
