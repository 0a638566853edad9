#include "gsa/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/linalg.hpp"
#include "gsa/parallel.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

class IndependentPrepared : public PreparedConditional {
public:
  IndependentPrepared(const InputSpace& space, std::vector<std::size_t> fixed)
      : space_(space), fixed_(std::move(fixed)) {
    std::vector<bool> is_fixed(space.dim(), false);
    for (std::size_t i : fixed_) is_fixed[i] = true;
    for (std::size_t j = 0; j < space.dim(); ++j)
      if (!is_fixed[j]) free_.push_back(j);
  }

  void draw(Rng& rng, std::span<const double> fixed_values,
            std::span<double> out) const override {
    for (std::size_t k = 0; k < fixed_.size(); ++k) out[fixed_[k]] = fixed_values[k];
    for (std::size_t j : free_) out[j] = space_.marginal(j).sample(rng);
  }

private:
  const InputSpace& space_;
  std::vector<std::size_t> fixed_, free_;
};

class IndependentSampler : public ConditionalSampler {
public:
  explicit IndependentSampler(const InputSpace& space) : space_(space) {}
  std::size_t dim() const override { return space_.dim(); }
  void sample_joint(Rng& rng, std::span<double> out) const override {
    for (std::size_t j = 0; j < space_.dim(); ++j)
      out[j] = space_.marginal(j).sample(rng);
  }
  std::unique_ptr<PreparedConditional> prepare(
      std::vector<std::size_t> fixed) const override {
    return std::make_unique<IndependentPrepared>(space_, std::move(fixed));
  }

private:
  InputSpace space_;
};

class CopulaPrepared : public PreparedConditional {
public:
  CopulaPrepared(const InputSpace& space, const Matrix& corr,
                 std::vector<std::size_t> fixed)
      : space_(space), fixed_(std::move(fixed)) {
    std::size_t p = space.dim();
    std::vector<bool> is_fixed(p, false);
    for (std::size_t i : fixed_) is_fixed[i] = true;
    for (std::size_t j = 0; j < p; ++j)
      if (!is_fixed[j]) free_.push_back(j);

    std::size_t nu = fixed_.size(), nc = free_.size();
    if (nc == 0) return;
    if (nu == 0) {
      Matrix cc(nc, nc);
      for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b) cc(a, b) = corr(free_[a], free_[b]);
      chol_c_ = cholesky(cc);
      return;
    }

    Matrix uu(nu, nu), uc(nu, nc), cc(nc, nc);
    for (std::size_t a = 0; a < nu; ++a) {
      for (std::size_t b = 0; b < nu; ++b) uu(a, b) = corr(fixed_[a], fixed_[b]);
      for (std::size_t b = 0; b < nc; ++b) uc(a, b) = corr(fixed_[a], free_[b]);
    }
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = 0; b < nc; ++b) cc(a, b) = corr(free_[a], free_[b]);

    // X = Sigma_uu^{-1} Sigma_uc by Cholesky solves; regression matrix and
    // Schur complement for the conditional normal.
    Matrix lu = cholesky(uu);
    solve_ = Matrix(nu, nc);
    for (std::size_t b = 0; b < nc; ++b) {
      std::vector<double> t(nu);
      for (std::size_t a = 0; a < nu; ++a) {
        double s = uc(a, b);
        for (std::size_t k = 0; k < a; ++k) s -= lu(a, k) * t[k];
        t[a] = s / lu(a, a);
      }
      for (std::size_t a = nu; a-- > 0;) {
        double s = t[a];
        for (std::size_t k = a + 1; k < nu; ++k) s -= lu(k, a) * solve_(k, b);
        solve_(a, b) = s / lu(a, a);
      }
    }
    Matrix schur(nc, nc);
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = 0; b < nc; ++b) {
        double s = cc(a, b);
        for (std::size_t k = 0; k < nu; ++k) s -= uc(k, a) * solve_(k, b);
        schur(a, b) = s;
      }
    // Guard tiny asymmetries before factoring.
    for (std::size_t a = 0; a < nc; ++a)
      for (std::size_t b = a + 1; b < nc; ++b) {
        double v = 0.5 * (schur(a, b) + schur(b, a));
        schur(a, b) = v;
        schur(b, a) = v;
      }
    chol_c_ = cholesky(schur);
  }

  void draw(Rng& rng, std::span<const double> fixed_values,
            std::span<double> out) const override {
    std::size_t nu = fixed_.size(), nc = free_.size();
    for (std::size_t k = 0; k < nu; ++k) out[fixed_[k]] = fixed_values[k];
    if (nc == 0) return;

    std::vector<double> zmean(nc, 0.0);
    if (nu > 0) {
      std::vector<double> zu(nu);
      for (std::size_t k = 0; k < nu; ++k) {
        double cdf = space_.marginal(fixed_[k]).cdf(fixed_values[k]);
        cdf = std::clamp(cdf, 1e-15, 1.0 - 1e-15);
        zu[k] = normal_quantile(cdf);
      }
      for (std::size_t b = 0; b < nc; ++b) {
        double s = 0.0;
        for (std::size_t k = 0; k < nu; ++k) s += solve_(k, b) * zu[k];
        zmean[b] = s;
      }
    }
    std::vector<double> eta(nc);
    for (std::size_t b = 0; b < nc; ++b)
      eta[b] = normal_quantile(std::clamp(rng.next_double(), 1e-300, 1.0 - 1e-16));
    for (std::size_t b = 0; b < nc; ++b) {
      double z = zmean[b];
      for (std::size_t k = 0; k <= b; ++k) z += chol_c_(b, k) * eta[k];
      out[free_[b]] = space_.marginal(free_[b]).quantile(normal_cdf(z));
    }
  }

private:
  const InputSpace& space_;
  std::vector<std::size_t> fixed_, free_;
  Matrix solve_;   // Sigma_uu^{-1} Sigma_uc
  Matrix chol_c_;  // Cholesky of the Schur complement
};

class GaussianCopulaSampler : public ConditionalSampler {
public:
  GaussianCopulaSampler(const InputSpace& space, const Matrix& corr)
      : space_(space), corr_(corr), chol_(cholesky(corr)) {
    if (corr.rows() != space.dim() || corr.cols() != space.dim())
      throw ConfigError("copula sampler: correlation shape mismatch");
  }

  std::size_t dim() const override { return space_.dim(); }

  void sample_joint(Rng& rng, std::span<double> out) const override {
    std::size_t p = space_.dim();
    std::vector<double> eta(p);
    for (std::size_t j = 0; j < p; ++j)
      eta[j] = normal_quantile(std::clamp(rng.next_double(), 1e-300, 1.0 - 1e-16));
    for (std::size_t j = 0; j < p; ++j) {
      double z = 0.0;
      for (std::size_t k = 0; k <= j; ++k) z += chol_(j, k) * eta[k];
      out[j] = space_.marginal(j).quantile(normal_cdf(z));
    }
  }

  std::unique_ptr<PreparedConditional> prepare(
      std::vector<std::size_t> fixed) const override {
    return std::make_unique<CopulaPrepared>(space_, corr_, std::move(fixed));
  }

private:
  InputSpace space_;
  Matrix corr_;
  Matrix chol_;
};

// E[Var(f | x_u)] by the nested estimator: outer draws of x_u from the
// joint, inner conditional draws of the complement, unbiased inner
// variances averaged.
double expected_conditional_variance(const Model& model,
                                     const ConditionalSampler& sampler,
                                     const std::vector<std::size_t>& u,
                                     std::size_t n_outer, std::size_t n_inner,
                                     Rng& rng) {
  std::size_t p = sampler.dim();
  auto prepared = sampler.prepare(u);
  Matrix pts(n_outer * n_inner, p);
  std::vector<double> fixed_vals(u.size());
  std::vector<double> joint(p);
  for (std::size_t o = 0; o < n_outer; ++o) {
    sampler.sample_joint(rng, joint);
    for (std::size_t k = 0; k < u.size(); ++k) fixed_vals[k] = joint[u[k]];
    for (std::size_t l = 0; l < n_inner; ++l)
      prepared->draw(rng, fixed_vals, pts.row(o * n_inner + l));
  }
  std::vector<double> y = model.evaluate(pts);
  double acc = 0.0;
  for (std::size_t o = 0; o < n_outer; ++o) {
    std::span<const double> block(y.data() + o * n_inner, n_inner);
    acc += variance_sample(block);
  }
  return acc / static_cast<double>(n_outer);
}

double binom(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

}  // namespace

std::unique_ptr<ConditionalSampler> make_independent_sampler(
    const InputSpace& space) {
  if (!space.independent())
    throw PreconditionError(
        "independent sampler requested for a correlated space");
  return std::make_unique<IndependentSampler>(space);
}

std::unique_ptr<ConditionalSampler> make_gaussian_copula_sampler(
    const InputSpace& space, const Matrix& correlation) {
  return std::make_unique<GaussianCopulaSampler>(space, correlation);
}

ShapleyResult shapley_effects(const Model& model, const InputSpace& space,
                              const ShapleyOptions& opts, std::uint64_t seed,
                              const ConditionalSampler* sampler) {
  std::size_t p = space.dim();
  if (model.arity() != p)
    throw ConfigError("shapley_effects: model arity does not match space");
  if (opts.n_inner < 2)
    throw ConfigError(
        "shapley_effects: n_inner must be >= 2 (conditional variance needs at "
        "least two draws)");
  if (opts.n_outer < 1 || opts.n_perm < 1)
    throw ConfigError("shapley_effects: n_outer and n_perm must be >= 1");

  std::unique_ptr<ConditionalSampler> owned;
  if (sampler == nullptr) {
    if (!space.independent())
      throw PreconditionError(
          "shapley_effects: dependent inputs require an explicit conditional "
          "sampler (e.g. a Gaussian copula sampler)");
    owned = make_independent_sampler(space);
    sampler = owned.get();
  }

  std::uint64_t evals_before = model.eval_count();

  // Internal variance estimate shared by every permutation walk.
  std::size_t n_var = std::max<std::size_t>(opts.n_outer * opts.n_inner, 64);
  Rng var_rng(derive_seed(seed, 0x5A11CE));
  Matrix var_pts(n_var, p);
  for (std::size_t i = 0; i < n_var; ++i)
    sampler->sample_joint(var_rng, var_pts.row(i));
  std::vector<double> var_y = model.evaluate(var_pts);
  double total_var = variance_sample(var_y);

  ShapleyResult res;
  res.n_perm = opts.n_perm;
  res.n_outer = opts.n_outer;
  res.n_inner = opts.n_inner;
  res.normalized = opts.normalized;
  res.total_variance = total_var;

  bool exact = false;
  if (opts.mode == ShapleyOptions::Mode::Exact)
    exact = true;
  else if (opts.mode == ShapleyOptions::Mode::Auto)
    exact = p <= 10 && (1ull << p) <= opts.n_perm * p;
  if (exact && p > 20) throw ConfigError("shapley_effects: exact mode needs p <= 20");
  res.exact_enumeration = exact;

  std::vector<double> sh(p, 0.0);

  if (exact) {
    // c[mask] = E[Var(f | x_mask)]; endpoints pinned to Var-hat and 0.
    std::size_t nmask = 1ull << p;
    std::vector<double> c(nmask, 0.0);
    c[0] = total_var;
    std::vector<std::size_t> masks;
    for (std::size_t m = 1; m + 1 < nmask; ++m) masks.push_back(m);
    std::vector<double> cvals(masks.size(), 0.0);
    parallel_for(masks.size(), [&](std::size_t idx) {
      std::size_t m = masks[idx];
      std::vector<std::size_t> u;
      for (std::size_t j = 0; j < p; ++j)
        if (m & (1ull << j)) u.push_back(j);
      Rng rng(derive_seed(seed, 0xE7AC7, m));
      cvals[idx] = expected_conditional_variance(model, *sampler, u, opts.n_outer,
                                                 opts.n_inner, rng);
    });
    for (std::size_t idx = 0; idx < masks.size(); ++idx) c[masks[idx]] = cvals[idx];
    c[nmask - 1] = 0.0;

    for (std::size_t i = 0; i < p; ++i) {
      double acc = 0.0;
      for (std::size_t m = 0; m < nmask; ++m) {
        if (m & (1ull << i)) continue;
        std::size_t usize = static_cast<std::size_t>(std::popcount(m));
        double w = 1.0 / (static_cast<double>(p) * binom(p - 1, usize));
        acc += w * (c[m] - c[m | (1ull << i)]);
      }
      sh[i] = acc;
    }
  } else {
    std::size_t np = opts.n_perm;
    // contributions[s] holds the per-input increments of permutation s.
    std::vector<std::vector<double>> contrib(np);
    std::vector<double> gaps(np, 0.0);
    parallel_for(np, [&](std::size_t s) {
      Rng rng(derive_seed(seed, 0x9E12, s));
      std::vector<std::size_t> perm(p);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t j = p; j-- > 1;) std::swap(perm[j], perm[rng.next_below(j + 1)]);

      std::vector<double> delta(p, 0.0);
      double c_prev = total_var;
      std::vector<std::size_t> u;
      for (std::size_t t = 0; t < p; ++t) {
        u.push_back(perm[t]);
        std::sort(u.begin(), u.end());
        double c_now =
            t + 1 == p ? 0.0
                       : expected_conditional_variance(model, *sampler, u,
                                                       opts.n_outer,
                                                       opts.n_inner, rng);
        delta[perm[t]] = c_prev - c_now;
        c_prev = c_now;
      }
      double sum = 0.0;
      for (double d : delta) sum += d;
      gaps[s] = std::fabs(sum - total_var);
      contrib[s] = std::move(delta);
    });

    for (std::size_t s = 0; s < np; ++s)
      for (std::size_t i = 0; i < p; ++i) sh[i] += contrib[s][i];
    for (std::size_t i = 0; i < p; ++i) sh[i] /= static_cast<double>(np);
    res.max_telescope_gap = *std::max_element(gaps.begin(), gaps.end());

    res.se.assign(p, 0.0);
    if (np >= 2) {
      for (std::size_t i = 0; i < p; ++i) {
        double ss = 0.0;
        for (std::size_t s = 0; s < np; ++s) {
          double d = contrib[s][i] - sh[i];
          ss += d * d;
        }
        res.se[i] = std::sqrt(ss / static_cast<double>(np - 1) /
                              static_cast<double>(np));
      }
    }

    if (opts.bootstrap_ci && np >= 2 && opts.n_boot >= 2) {
      std::vector<std::pair<double, double>> ci(p);
      std::vector<std::vector<double>> reps(p, std::vector<double>(opts.n_boot));
      for (std::size_t b = 0; b < opts.n_boot; ++b) {
        Rng rng(derive_seed(seed, 0xB0075, b));
        std::vector<double> acc(p, 0.0);
        for (std::size_t s = 0; s < np; ++s) {
          std::size_t pick = rng.next_below(np);
          for (std::size_t i = 0; i < p; ++i) acc[i] += contrib[pick][i];
        }
        for (std::size_t i = 0; i < p; ++i)
          reps[i][b] = acc[i] / static_cast<double>(np);
      }
      for (std::size_t i = 0; i < p; ++i) {
        std::sort(reps[i].begin(), reps[i].end());
        ci[i] = {sample_quantile(reps[i], 0.025), sample_quantile(reps[i], 0.975)};
      }
      if (opts.normalized && total_var > 0.0)
        for (auto& [lo, hi] : ci) {
          lo /= total_var;
          hi /= total_var;
        }
      res.ci = std::move(ci);
    }
  }

  res.unnormalized = sh;
  res.values = sh;
  if (opts.normalized) {
    if (total_var > 0.0)
      for (double& v : res.values) v /= total_var;
    if (!res.se.empty() && total_var > 0.0)
      for (double& v : res.se) v /= total_var;
  }
  res.n_evals = model.eval_count() - evals_before;
  return res;
}

EffectCurve shapley_effect_curve(const Matrix& x, const std::vector<double>& y,
                                 std::size_t input_index, std::size_t bins) {
  return main_effect_curve_data(x, y, input_index, bins);
}

}  // namespace gsa
