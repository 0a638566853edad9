#include "gsa/dists.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsa/errors.hpp"
#include "gsa/stats.hpp"

namespace gsa {

MarginalDist MarginalDist::uniform(double a, double b) {
  if (!(a < b)) throw ConfigError("uniform marginal requires a < b");
  return MarginalDist(Kind::Uniform, a, b);
}

MarginalDist MarginalDist::normal(double mu, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("normal marginal requires sigma > 0");
  return MarginalDist(Kind::Normal, mu, sigma);
}

double MarginalDist::cdf(double x) const {
  switch (kind_) {
    case Kind::Uniform: {
      if (x <= p1_) return 0.0;
      if (x >= p2_) return 1.0;
      return (x - p1_) / (p2_ - p1_);
    }
    case Kind::Normal:
      return normal_cdf((x - p1_) / p2_);
  }
  return 0.0;
}

double MarginalDist::quantile(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  switch (kind_) {
    case Kind::Uniform:
      return p1_ + u * (p2_ - p1_);
    case Kind::Normal: {
      if (u <= 0.0) return lower();
      if (u >= 1.0) return upper();
      return p1_ + p2_ * normal_quantile(u);
    }
  }
  return 0.0;
}

double MarginalDist::sample(Rng& rng) const { return quantile(rng.next_double()); }

double MarginalDist::mean() const {
  return kind_ == Kind::Uniform ? 0.5 * (p1_ + p2_) : p1_;
}

double MarginalDist::lower() const {
  return kind_ == Kind::Uniform ? p1_ : p1_ - 8.0 * p2_;
}

double MarginalDist::upper() const {
  return kind_ == Kind::Uniform ? p2_ : p1_ + 8.0 * p2_;
}

double MarginalDist::scale() const {
  return kind_ == Kind::Uniform ? p2_ - p1_ : p2_;
}

std::string MarginalDist::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Uniform)
    os << "uniform(" << p1_ << "," << p2_ << ")";
  else
    os << "normal(" << p1_ << "," << p2_ << ")";
  return os.str();
}

InputSpace::InputSpace(std::vector<MarginalDist> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ConfigError("input space must have at least one dimension");
}

InputSpace::InputSpace(std::vector<MarginalDist> dims, Matrix correlation)
    : dims_(std::move(dims)) {
  if (dims_.empty()) throw ConfigError("input space must have at least one dimension");
  if (correlation.rows() != dims_.size() || correlation.cols() != dims_.size())
    throw ConfigError("correlation matrix shape must match dimension count");
  bool identity = true;
  for (std::size_t i = 0; i < correlation.rows() && identity; ++i)
    for (std::size_t j = 0; j < correlation.cols(); ++j) {
      double want = i == j ? 1.0 : 0.0;
      if (correlation(i, j) != want) {
        identity = false;
        break;
      }
    }
  if (!identity) correlation_ = std::move(correlation);
}

const Matrix& InputSpace::correlation() const {
  if (!correlation_)
    throw PreconditionError("input space has no correlation structure");
  return *correlation_;
}

bool InputSpace::contains(std::span<const double> x) const {
  if (x.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (!dims_[i].contains(x[i])) return false;
  return true;
}

InputSpace InputSpace::unit(std::size_t p) {
  std::vector<MarginalDist> dims(p, MarginalDist::uniform(0.0, 1.0));
  return InputSpace(std::move(dims));
}

}  // namespace gsa
