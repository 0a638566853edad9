#include "gsa/morris.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/rng.hpp"

namespace gsa {

MorrisDesign morris_design(std::size_t p, std::size_t k, std::size_t delta_mult,
                           std::size_t r, std::uint64_t seed) {
  if (p < 1) throw ConfigError("morris_design: p must be >= 1");
  if (k < 2) throw ConfigError("morris_design: k must be >= 2");
  if (delta_mult < 1)
    throw ConfigError("morris_design: delta must be a positive multiple of 1/(k-1)");
  if (delta_mult >= k - 1)
    throw ConfigError("morris_design: delta = " + std::to_string(delta_mult) + "/" +
                      std::to_string(k - 1) + " must be < 1");
  if (r < 1) throw ConfigError("morris_design: r must be >= 1");

  MorrisDesign d;
  d.p = p;
  d.k = k;
  d.delta_mult = delta_mult;
  d.r = r;
  d.seed = seed;
  std::size_t m = p + 1;
  d.x = Matrix(r * m, p);
  d.trajectory_id.assign(r * m, 0);
  d.perturbed_input.assign(r * m, -1);
  d.step_sign.assign(r * m, 0);

  double denom = static_cast<double>(k - 1);

  for (std::size_t t = 0; t < r; ++t) {
    Rng rng(derive_seed(seed, 0x30FF15, t));

    // Base grid levels with x*_i <= 1 - delta, by rejection off the full grid.
    std::vector<std::size_t> base(p);
    for (std::size_t j = 0; j < p; ++j) {
      for (;;) {
        std::size_t lvl = rng.next_below(k);
        if (lvl + delta_mult <= k - 1) {
          base[j] = lvl;
          break;
        }
      }
    }
    // Step directions D* and perturbation order P*.
    std::vector<int> dir(p);
    for (std::size_t j = 0; j < p; ++j) dir[j] = rng.next_u64() & 1 ? 1 : -1;
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t j = p; j-- > 1;) std::swap(perm[j], perm[rng.next_below(j + 1)]);

    std::vector<std::size_t> pos(p);  // perturbation step of each input
    for (std::size_t step = 0; step < p; ++step) pos[perm[step]] = step;

    for (std::size_t row = 0; row < m; ++row) {
      std::size_t gr = t * m + row;
      d.trajectory_id[gr] = t;
      for (std::size_t j = 0; j < p; ++j) {
        bool flipped = row > pos[j];
        std::size_t lvl = base[j];
        // dir=+1 walks x* -> x*+delta, dir=-1 walks x*+delta -> x*.
        if (dir[j] > 0 ? flipped : !flipped) lvl += delta_mult;
        d.x(gr, j) = static_cast<double>(lvl) / denom;
      }
      if (row > 0) {
        std::size_t moved = perm[row - 1];
        d.perturbed_input[gr] = static_cast<int>(moved);
        d.step_sign[gr] = dir[moved];
      }
    }
  }
  return d;
}

MorrisResult morris_analyze(const MorrisDesign& design,
                            const std::vector<double>& y) {
  std::size_t p = design.p, r = design.r, m = design.rows_per_trajectory();
  if (y.size() != design.x.rows())
    throw ConfigError("morris_analyze: y length does not match design rows");
  if (r < 2)
    throw ConfigError("morris_analyze: r >= 2 trajectories required for spread");

  double delta = design.delta();
  MorrisResult res;
  res.r = r;
  res.effects.assign(p, std::vector<double>(r, 0.0));

  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t row = 1; row < m; ++row) {
      std::size_t gr = t * m + row;
      int input = design.perturbed_input[gr];
      int sign = design.step_sign[gr];
      double d = (y[gr] - y[gr - 1]) / (static_cast<double>(sign) * delta);
      res.effects[static_cast<std::size_t>(input)][t] = d;
    }
  }

  res.mean.resize(p);
  res.mean_abs.resize(p);
  res.stddev.resize(p);
  res.sem.resize(p);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& d = res.effects[i];
    double s = 0.0, sa = 0.0;
    for (double v : d) {
      s += v;
      sa += std::fabs(v);
    }
    double mean = s / static_cast<double>(r);
    res.mean[i] = mean;
    res.mean_abs[i] = sa / static_cast<double>(r);
    auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    if (*lo == *hi) {
      res.stddev[i] = 0.0;  // constant effects: spread is exactly zero
    } else {
      double ss = 0.0;
      for (double v : d) ss += (v - mean) * (v - mean);
      res.stddev[i] = std::sqrt(ss / static_cast<double>(r - 1));
    }
    res.sem[i] = res.stddev[i] / std::sqrt(static_cast<double>(r));
  }
  return res;
}

}  // namespace gsa
