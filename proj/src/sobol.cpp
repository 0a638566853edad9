#include "gsa/sobol.hpp"

#include <algorithm>
#include <cmath>

#include "gsa/errors.hpp"
#include "gsa/parallel.hpp"
#include "gsa/rng.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

struct Estimates {
  std::vector<double> s, st;
  double var = 0.0;
};

// Core estimator on (optionally resampled) base indices. All blocks are
// centered by the pooled A/B mean so the indices are exactly invariant
// under positive affine transformations of y.
Estimates estimate_indices(const std::vector<double>& y, std::size_t n,
                           std::size_t p, const std::vector<std::size_t>* idx) {
  auto pick = [&](std::size_t block, std::size_t j) {
    std::size_t row = idx ? (*idx)[j] : j;
    return y[block * n + row];
  };

  double m = 0.0;
  for (std::size_t j = 0; j < n; ++j) m += pick(0, j) + pick(1, j);
  m /= static_cast<double>(2 * n);

  double var = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double a = pick(0, j) - m, b = pick(1, j) - m;
    var += a * a + b * b;
  }
  var /= static_cast<double>(2 * n);

  Estimates e;
  e.var = var;
  e.s.assign(p, 0.0);
  e.st.assign(p, 0.0);
  if (var <= 0.0) return e;

  for (std::size_t i = 0; i < p; ++i) {
    double num_s = 0.0, num_st = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double a = pick(0, j) - m;
      double b = pick(1, j) - m;
      double ab = pick(2 + i, j) - m;
      num_s += b * (ab - a);
      double d = a - ab;
      num_st += d * d;
    }
    e.s[i] = num_s / static_cast<double>(n) / var;
    e.st[i] = num_st / static_cast<double>(2 * n) / var;
  }
  return e;
}

double clamp01(double v, double eps) {
  return std::min(1.0 + eps, std::max(-eps, v));
}

}  // namespace

SobolResult sobol_estimate(const PickFreezeDesign& design,
                           const std::vector<double>& y,
                           const SobolOptions& opts) {
  std::size_t n = design.n_base, p = design.p;
  if (y.size() != n * (p + 2))
    throw ConfigError("sobol_estimate: y length " + std::to_string(y.size()) +
                      " does not match design rows " + std::to_string(n * (p + 2)));

  Estimates e = estimate_indices(y, n, p, nullptr);

  SobolResult r;
  r.n_base = n;
  r.n_evals = y.size();
  r.total_variance = e.var;
  r.estimator = "saltelli2010/jansen";
  r.first_order_raw = e.s;
  r.total_raw = e.st;
  r.first_order.resize(p);
  r.total.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    r.first_order[i] = clamp01(e.s[i], opts.clamp_eps);
    r.total[i] = clamp01(e.st[i], opts.clamp_eps);
  }
  if (e.var <= 0.0) {
    r.zero_variance = true;
    return r;
  }

  if (opts.bootstrap && opts.n_boot >= 2) {
    std::size_t nb = opts.n_boot;
    std::vector<Estimates> reps(nb);
    parallel_for(nb, [&](std::size_t b) {
      Rng rng(derive_seed(design.seed, 0xB007, b));
      std::vector<std::size_t> idx(n);
      for (std::size_t j = 0; j < n; ++j) idx[j] = rng.next_below(n);
      reps[b] = estimate_indices(y, n, p, &idx);
    });

    SobolBootstrap bs;
    bs.resamples = nb;
    bs.s_lo.resize(p);
    bs.s_hi.resize(p);
    bs.st_lo.resize(p);
    bs.st_hi.resize(p);
    bs.s_se.resize(p);
    bs.st_se.resize(p);
    bs.diff_se.resize(p);
    std::vector<double> tmp(nb);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t b = 0; b < nb; ++b) tmp[b] = reps[b].s[i];
      std::sort(tmp.begin(), tmp.end());
      bs.s_lo[i] = sample_quantile(tmp, 0.025);
      bs.s_hi[i] = sample_quantile(tmp, 0.975);
      bs.s_se[i] = sd_sample(tmp);

      for (std::size_t b = 0; b < nb; ++b) tmp[b] = reps[b].st[i];
      std::sort(tmp.begin(), tmp.end());
      bs.st_lo[i] = sample_quantile(tmp, 0.025);
      bs.st_hi[i] = sample_quantile(tmp, 0.975);
      bs.st_se[i] = sd_sample(tmp);

      for (std::size_t b = 0; b < nb; ++b) tmp[b] = reps[b].st[i] - reps[b].s[i];
      bs.diff_se[i] = sd_sample(tmp);
    }
    for (std::size_t b = 0; b < nb; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < p; ++i) sum += reps[b].s[i];
      tmp[b] = sum;
    }
    bs.sum_s_se = sd_sample(tmp);
    r.ci = std::move(bs);
  }

  return r;
}

}  // namespace gsa
