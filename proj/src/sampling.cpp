#include "gsa/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "gsa/errors.hpp"
#include "gsa/linalg.hpp"
#include "gsa/stats.hpp"

namespace gsa {

namespace {

Matrix sample_copula(const InputSpace& space, std::size_t n, std::uint64_t seed) {
  std::size_t p = space.dim();
  Matrix l = cholesky(space.correlation());
  Matrix x(n, p);
  Rng rng(derive_seed(seed, 0xC0B17A));
  std::vector<double> z(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j)
      z[j] = normal_quantile(std::clamp(rng.next_double(), 1e-300, 1.0 - 1e-16));
    for (std::size_t j = p; j-- > 0;) {
      double s = 0.0;
      for (std::size_t k = 0; k <= j; ++k) s += l(j, k) * z[k];
      x(i, j) = space.marginal(j).quantile(normal_cdf(s));
    }
  }
  return x;
}

}  // namespace

Matrix sample(const InputSpace& space, std::size_t n, std::uint64_t seed,
              SampleScheme scheme) {
  if (space.dim() == 0) throw ConfigError("cannot sample a zero-dimensional space");
  if (n < 1) throw ConfigError("sample: n must be >= 1");

  if (!space.independent()) {
    if (scheme == SampleScheme::Lhs)
      throw ConfigError("LHS stratification requires independent inputs");
    return sample_copula(space, n, seed);
  }

  std::size_t p = space.dim();
  Matrix x(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    Rng rng(derive_seed(seed, j));
    const MarginalDist& m = space.marginal(j);
    if (scheme == SampleScheme::Iid) {
      for (std::size_t i = 0; i < n; ++i) x(i, j) = m.quantile(rng.next_double());
    } else {
      // One point per equal-probability stratum, shuffled within the column.
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      for (std::size_t i = n; i-- > 1;)
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
      for (std::size_t i = 0; i < n; ++i) {
        double u = (static_cast<double>(perm[i]) + rng.next_double()) /
                   static_cast<double>(n);
        x(i, j) = m.quantile(u);
      }
    }
  }
  return x;
}

SampleScheme parse_scheme(const std::string& s) {
  if (s == "iid") return SampleScheme::Iid;
  if (s == "lhs") return SampleScheme::Lhs;
  throw ConfigError("unknown sampling scheme '" + s + "' (iid or lhs)");
}

}  // namespace gsa
