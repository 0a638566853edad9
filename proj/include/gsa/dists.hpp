#ifndef GSA_DISTS_HPP
#define GSA_DISTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsa/matrix.hpp"
#include "gsa/rng.hpp"

namespace gsa {

/// One input's marginal distribution.
class MarginalDist {
public:
  enum class Kind { Uniform, Normal };

  static MarginalDist uniform(double a, double b);
  static MarginalDist normal(double mu, double sigma);

  Kind kind() const { return kind_; }
  double param1() const { return p1_; }  // a or mu
  double param2() const { return p2_; }  // b or sigma

  double cdf(double x) const;
  double quantile(double u) const;
  double sample(Rng& rng) const;
  double mean() const;

  /// Support box. Normal marginals are boxed at +/- 8 sigma so that
  /// box-based support checks stay uniform across kinds.
  double lower() const;
  double upper() const;
  /// Natural length scale: b-a for uniform, sigma for normal.
  double scale() const;

  bool contains(double x) const { return x >= lower() && x <= upper(); }
  std::string describe() const;

private:
  MarginalDist(Kind k, double p1, double p2) : kind_(k), p1_(p1), p2_(p2) {}
  Kind kind_;
  double p1_, p2_;
};

/// Product input space over p marginals, optionally carrying a Gaussian
/// copula correlation matrix. Estimators that require independence check
/// independent() and refuse otherwise.
class InputSpace {
public:
  explicit InputSpace(std::vector<MarginalDist> dims);
  InputSpace(std::vector<MarginalDist> dims, Matrix correlation);

  std::size_t dim() const { return dims_.size(); }
  const MarginalDist& marginal(std::size_t i) const { return dims_[i]; }
  const std::vector<MarginalDist>& marginals() const { return dims_; }

  bool independent() const { return !correlation_.has_value(); }
  const Matrix& correlation() const;

  bool contains(std::span<const double> x) const;

  /// Uniform(0,1)^p convenience space.
  static InputSpace unit(std::size_t p);

private:
  std::vector<MarginalDist> dims_;
  std::optional<Matrix> correlation_;
};

}  // namespace gsa

#endif
