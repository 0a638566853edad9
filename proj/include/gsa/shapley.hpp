#ifndef GSA_SHAPLEY_HPP
#define GSA_SHAPLEY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gsa/effects.hpp"
#include "gsa/model.hpp"

namespace gsa {

/// A conditional draw x_{-u} | x_u prepared for one fixed index set.
class PreparedConditional {
public:
  virtual ~PreparedConditional() = default;
  /// Fill `out` (length p) with a full point: the fixed coordinates copied
  /// from `fixed_values` (aligned with the prepared index set), the rest
  /// drawn conditionally.
  virtual void draw(Rng& rng, std::span<const double> fixed_values,
                    std::span<double> out) const = 0;
};

class ConditionalSampler {
public:
  virtual ~ConditionalSampler() = default;
  virtual std::size_t dim() const = 0;
  virtual void sample_joint(Rng& rng, std::span<double> out) const = 0;
  virtual std::unique_ptr<PreparedConditional> prepare(
      std::vector<std::size_t> fixed_indices) const = 0;
};

/// Independent product sampler derived from the space's marginals.
std::unique_ptr<ConditionalSampler> make_independent_sampler(
    const InputSpace& space);

/// Gaussian copula over the space's marginals with the given correlation
/// matrix; conditionals are the usual multivariate-normal ones mapped back
/// through the marginal quantiles.
std::unique_ptr<ConditionalSampler> make_gaussian_copula_sampler(
    const InputSpace& space, const Matrix& correlation);

struct ShapleyOptions {
  std::size_t n_perm = 300;
  std::size_t n_outer = 100;
  std::size_t n_inner = 3;
  enum class Mode { Auto, Exact, Permutation } mode = Mode::Auto;
  bool normalized = true;
  bool bootstrap_ci = true;
  std::size_t n_boot = 500;
};

struct ShapleyResult {
  std::vector<double> values;       // normalized or not, per `normalized`
  std::vector<double> unnormalized; // sum to total_variance by construction
  bool normalized = true;
  double total_variance = 0.0;
  std::size_t n_perm = 0, n_outer = 0, n_inner = 0;
  std::uint64_t n_evals = 0;
  bool exact_enumeration = false;
  /// Largest per-permutation deviation of the telescoped sum from the
  /// internal variance estimate (permutation mode).
  double max_telescope_gap = 0.0;
  std::vector<double> se;  // per-input (permutation mode only)
  std::optional<std::vector<std::pair<double, double>>> ci;  // 95%
};

/// Shapley effects with val(u) = Var[E[f|x_u]], estimated by random
/// permutations (Castro) with the Song et al. nested inner/outer
/// conditional-variance evaluation; exact subset enumeration is used when
/// p <= 10 and it is cheaper than the requested permutation budget.
/// Dependent input spaces require an explicit conditional sampler.
ShapleyResult shapley_effects(const Model& model, const InputSpace& space,
                              const ShapleyOptions& opts, std::uint64_t seed,
                              const ConditionalSampler* sampler = nullptr);

/// First-order Shapley-style effect curve from given data: the binned
/// conditional expectation E[f|x_i] - f0 (the singleton-subset value
/// function slice).
EffectCurve shapley_effect_curve(const Matrix& x, const std::vector<double>& y,
                                 std::size_t input_index, std::size_t bins);

}  // namespace gsa

#endif
