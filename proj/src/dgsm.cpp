#include "gsa/dgsm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsa/errors.hpp"
#include "gsa/sampling.hpp"
#include "gsa/stats.hpp"

namespace gsa {

DgsmResult dgsm(const Model& model, const InputSpace& space, std::size_t n,
                double fd_step, std::uint64_t seed) {
  std::size_t p = space.dim();
  if (model.arity() != p)
    throw ConfigError("dgsm: model arity does not match input space dimension");
  if (n < 10) throw ConfigError("dgsm: n must be >= 10");
  if (!(fd_step > 0.0) || fd_step >= 0.5)
    throw ConfigError("dgsm: fd_step must be in (0, 0.5)");

  Matrix centers = sample(space, n, seed);

  // Build the full evaluation batch: centre plus +/- step per input.
  // Points near a support edge get a one-sided stencil instead.
  std::vector<double> step(p);
  for (std::size_t j = 0; j < p; ++j) step[j] = fd_step * space.marginal(j).scale();

  // stencil code per (point, input): 0 central, +1 forward, -1 backward
  std::vector<int> stencil(n * p, 0);
  std::size_t one_sided = 0;
  Matrix pts(n * (2 * p + 1), p);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t base = i * (2 * p + 1);
    for (std::size_t j = 0; j < p; ++j) pts(base, j) = centers(i, j);
    for (std::size_t j = 0; j < p; ++j) {
      const MarginalDist& m = space.marginal(j);
      double xc = centers(i, j);
      double lo = xc - step[j], hi = xc + step[j];
      int code = 0;
      if (lo < m.lower()) {
        code = +1;
        lo = xc;
        hi = xc + step[j];
      } else if (hi > m.upper()) {
        code = -1;
        hi = xc;
        lo = xc - step[j];
      }
      if (code != 0) ++one_sided;
      stencil[i * p + j] = code;
      std::size_t rp = base + 1 + 2 * j, rm = base + 2 + 2 * j;
      for (std::size_t q = 0; q < p; ++q) {
        pts(rp, q) = centers(i, q);
        pts(rm, q) = centers(i, q);
      }
      pts(rp, j) = hi;
      pts(rm, j) = lo;
    }
  }

  std::vector<double> y = model.evaluate(pts);

  DgsmResult r;
  r.n = n;
  r.fd_step = fd_step;
  r.n_evals = y.size();
  r.one_sided_substitutions = one_sided;
  r.w.assign(p, 0.0);
  r.v.assign(p, 0.0);
  r.w_se.assign(p, 0.0);
  r.v_se.assign(p, 0.0);
  r.bound_se.assign(p, 0.0);
  r.total_bound.assign(p, 0.0);
  r.bound_available.assign(p, true);

  std::vector<double> centers_y(n);
  for (std::size_t i = 0; i < n; ++i) centers_y[i] = y[i * (2 * p + 1)];
  r.variance = variance_sample(centers_y);

  for (std::size_t j = 0; j < p; ++j) {
    double sw = 0.0, sv = 0.0, sw2 = 0.0, sv2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t base = i * (2 * p + 1);
      double yp = y[base + 1 + 2 * j], ym = y[base + 2 + 2 * j];
      double width = stencil[i * p + j] == 0 ? 2.0 * step[j] : step[j];
      double g = (yp - ym) / width;
      sw += g;
      sv += g * g;
      sw2 += g * g;
      sv2 += g * g * g * g;
    }
    double nn = static_cast<double>(n);
    r.w[j] = sw / nn;
    r.v[j] = sv / nn;
    r.w_se[j] = std::sqrt(std::max(0.0, sw2 / nn - r.w[j] * r.w[j]) / nn);
    r.v_se[j] = std::sqrt(std::max(0.0, sv2 / nn - r.v[j] * r.v[j]) / nn);

    const MarginalDist& m = space.marginal(j);
    double c;
    if (m.kind() == MarginalDist::Kind::Uniform) {
      double len = m.param2() - m.param1();
      c = len * len / (std::numbers::pi * std::numbers::pi);
    } else {
      c = m.param2() * m.param2();
    }
    if (r.variance > 0.0) {
      r.total_bound[j] = c * r.v[j] / r.variance;
      r.bound_se[j] = c * r.v_se[j] / r.variance;
    } else {
      r.total_bound[j] = 0.0;
    }
  }
  return r;
}

}  // namespace gsa
