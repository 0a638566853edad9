#include "gsa/fast.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsa/errors.hpp"
#include "gsa/rng.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

constexpr double kPi = std::numbers::pi;

// Power (A^2 + B^2) of the DFT of y at integer frequency k over the uniform
// angle grid s_j = pi (2j - n - 1)/n, accumulated with a rotation recurrence.
double spectrum_power(const std::vector<double>& y, std::size_t k) {
  std::size_t n = y.size();
  double step = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
  double s0 = static_cast<double>(k) * kPi * (1.0 - static_cast<double>(n + 1) /
                                                        static_cast<double>(n));
  double c = std::cos(s0), s = std::sin(s0);
  double dc = std::cos(step), ds = std::sin(step);
  double sum_c = 0.0, sum_s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum_c += y[j] * c;
    sum_s += y[j] * s;
    double cn = c * dc - s * ds;
    s = s * dc + c * ds;
    c = cn;
  }
  double nn = static_cast<double>(n);
  double a = sum_c / nn, b = sum_s / nn;
  return a * a + b * b;
}

}  // namespace

SobolResult fast_indices(const Model& model, const InputSpace& space,
                         std::size_t n_per_input, std::size_t interference_order,
                         std::uint64_t seed) {
  if (!space.independent())
    throw PreconditionError("FAST requires independent inputs");
  std::size_t p = space.dim();
  if (model.arity() != p)
    throw ConfigError("FAST: model arity does not match input space dimension");
  std::size_t m_order = interference_order;
  if (m_order < 1) throw ConfigError("FAST: interference order must be >= 1");
  std::size_t nyquist_floor = 4 * m_order * m_order + 2;
  if (n_per_input < nyquist_floor)
    throw ConfigError("FAST: n_per_input=" + std::to_string(n_per_input) +
                      " is below the Nyquist bound 4M^2+2=" +
                      std::to_string(nyquist_floor) + " for M=" +
                      std::to_string(m_order));

  std::size_t n = n_per_input;
  std::size_t omega_max = (n - 1) / (2 * m_order);

  // Saltelli (1999) complement frequency assignment.
  std::vector<std::size_t> comp_freq;
  if (p > 1) {
    std::size_t mmax = std::max<std::size_t>(1, omega_max / (2 * m_order));
    comp_freq.resize(p - 1);
    if (mmax >= p - 1) {
      for (std::size_t k = 0; k < p - 1; ++k) {
        double f = 1.0 + static_cast<double>(k) *
                             static_cast<double>(mmax - 1) /
                             std::max(1.0, static_cast<double>(p - 2));
        comp_freq[k] = static_cast<std::size_t>(f);
      }
    } else {
      for (std::size_t k = 0; k < p - 1; ++k) comp_freq[k] = k % mmax + 1;
    }
  }

  std::vector<double> angles(n);
  for (std::size_t j = 0; j < n; ++j)
    angles[j] = kPi * (2.0 * static_cast<double>(j + 1) -
                       static_cast<double>(n) - 1.0) /
                static_cast<double>(n);

  SobolResult r;
  r.estimator = "efast";
  r.n_base = n;
  r.first_order.assign(p, 0.0);
  r.total.assign(p, 0.0);
  r.first_order_raw.assign(p, 0.0);
  r.total_raw.assign(p, 0.0);

  double var_accum = 0.0;
  Rng phase_rng(derive_seed(seed, 0xFA57));

  for (std::size_t drv = 0; drv < p; ++drv) {
    // Frequencies for this curve: driver at omega_max, others low.
    std::vector<std::size_t> omega(p);
    omega[drv] = omega_max;
    std::size_t c = 0;
    for (std::size_t j = 0; j < p; ++j)
      if (j != drv) omega[j] = comp_freq[c++];

    std::vector<double> phase(p);
    for (std::size_t j = 0; j < p; ++j) phase[j] = 2.0 * kPi * phase_rng.next_double();

    Matrix x(n, p);
    for (std::size_t j = 0; j < p; ++j) {
      const MarginalDist& dist = space.marginal(j);
      double w = static_cast<double>(omega[j]);
      for (std::size_t i = 0; i < n; ++i) {
        double u = 0.5 + std::asin(std::sin(w * angles[i] + phase[j])) / kPi;
        x(i, j) = dist.quantile(u);
      }
    }
    std::vector<double> y = model.evaluate(x);

    // Total spectrum power equals the population variance minus the Nyquist
    // term when n is even (Parseval), so no full spectrum pass is needed.
    double var = variance_pop(y);
    if (n % 2 == 0) var -= spectrum_power(y, n / 2);
    var_accum += var;
    if (var <= 0.0) continue;

    double v_first = 0.0;
    for (std::size_t h = 1; h <= m_order; ++h)
      v_first += 2.0 * spectrum_power(y, h * omega_max);

    double v_comp = 0.0;
    for (std::size_t k = 1; 2 * k < omega_max; ++k)
      v_comp += 2.0 * spectrum_power(y, k);

    r.first_order_raw[drv] = v_first / var;
    r.total_raw[drv] = 1.0 - v_comp / var;
  }

  r.total_variance = var_accum / static_cast<double>(p);
  r.n_evals = static_cast<std::uint64_t>(p) * n;
  if (r.total_variance <= 0.0) {
    r.zero_variance = true;
    return r;
  }
  for (std::size_t i = 0; i < p; ++i) {
    r.first_order[i] = std::clamp(r.first_order_raw[i], 0.0, 1.0);
    r.total[i] = std::clamp(r.total_raw[i], 0.0, 1.0);
  }
  return r;
}

}  // namespace gsa
