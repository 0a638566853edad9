#include "gsa/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gsa/errors.hpp"
#include "gsa/parallel.hpp"

namespace gsa {

std::vector<double> Model::evaluate(const Matrix& X) const {
  if (X.cols() != arity())
    throw ConfigError("model '" + name() + "' takes " + std::to_string(arity()) +
                      " inputs, got " + std::to_string(X.cols()));
  std::vector<double> y(X.rows());
  evaluate_rows(X, y);
  eval_count_.fetch_add(X.rows());
  return y;
}

namespace {

constexpr double kPi = std::numbers::pi;

class FunctionBuiltin : public Model {
public:
  using RowFn = double (*)(std::span<const double>, const std::vector<double>&);

  FunctionBuiltin(std::string name, std::size_t arity, std::vector<double> params,
                  RowFn fn)
      : name_(std::move(name)), arity_(arity), params_(std::move(params)), fn_(fn) {}

  std::size_t arity() const override { return arity_; }
  std::string name() const override { return name_; }
  const std::vector<double>& params() const { return params_; }

protected:
  void evaluate_rows(const Matrix& X, std::span<double> out) const override {
    parallel_for(X.rows(), [&](std::size_t i) { out[i] = fn_(X.row(i), params_); });
  }

private:
  std::string name_;
  std::size_t arity_;
  std::vector<double> params_;
  RowFn fn_;
};

double ishigami_row(std::span<const double> x, const std::vector<double>& p) {
  double a = p[0], b = p[1];
  return std::sin(x[0]) + a * std::sin(x[1]) * std::sin(x[1]) +
         b * x[2] * x[2] * x[2] * x[2] * std::sin(x[0]);
}

double gfunction_row(std::span<const double> x, const std::vector<double>& a) {
  double prod = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j)
    prod *= (std::fabs(4.0 * x[j] - 2.0) + a[j]) / (1.0 + a[j]);
  return prod;
}

double linear_row(std::span<const double> x, const std::vector<double>& beta) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += beta[j] * x[j];
  return s;
}

double product_row(std::span<const double> x, const std::vector<double>&) {
  double prod = 1.0;
  for (double v : x) prod *= v;
  return prod;
}

double constant_row(std::span<const double>, const std::vector<double>& p) {
  return p[0];
}

const std::vector<double> kGfunctionDefaultA = {0, 1, 4.5, 9, 99, 99, 99, 99, 99, 99};

}  // namespace

std::shared_ptr<Model> make_builtin(const std::string& name,
                                    std::vector<double> params, std::size_t dims) {
  if (name == "ishigami") {
    if (params.empty()) params = {7.0, 0.1};
    if (params.size() != 2) throw ConfigError("ishigami takes params (a, b)");
    return std::make_shared<FunctionBuiltin>("ishigami", 3, std::move(params),
                                             &ishigami_row);
  }
  if (name == "gfunction") {
    if (params.empty()) params = kGfunctionDefaultA;
    for (double a : params)
      if (a < 0.0) throw ConfigError("gfunction coefficients must be >= 0");
    std::size_t p = params.size();
    return std::make_shared<FunctionBuiltin>("gfunction", p, std::move(params),
                                             &gfunction_row);
  }
  if (name == "linear") {
    if (params.empty()) params = {1.0, 2.0};
    std::size_t p = params.size();
    return std::make_shared<FunctionBuiltin>("linear", p, std::move(params),
                                             &linear_row);
  }
  if (name == "product") {
    if (!params.empty()) throw ConfigError("product takes no params (set dims)");
    if (dims == 0) dims = 2;
    return std::make_shared<FunctionBuiltin>("product", dims, std::vector<double>{},
                                             &product_row);
  }
  if (name == "constant") {
    if (params.empty()) params = {0.0};
    if (params.size() != 1) throw ConfigError("constant takes params (value)");
    if (dims == 0) dims = 1;
    return std::make_shared<FunctionBuiltin>("constant", dims, std::move(params),
                                             &constant_row);
  }
  throw ConfigError("unknown builtin model '" + name +
                    "' (known: ishigami, gfunction, linear, product, constant)");
}

InputSpace builtin_space(const std::string& name, std::vector<double> params,
                         std::size_t dims) {
  auto model = make_builtin(name, std::move(params), dims);
  std::size_t p = model->arity();
  if (name == "ishigami") {
    std::vector<MarginalDist> d(3, MarginalDist::uniform(-kPi, kPi));
    return InputSpace(std::move(d));
  }
  return InputSpace::unit(p);
}

IndexTruth builtin_truth(const std::string& name, std::vector<double> params,
                         std::size_t dims) {
  IndexTruth t;
  if (name == "ishigami") {
    if (params.empty()) params = {7.0, 0.1};
    double a = params[0], b = params[1];
    double pi4 = kPi * kPi * kPi * kPi;
    double pi8 = pi4 * pi4;
    double v1 = 0.5 * (1.0 + b * pi4 / 5.0) * (1.0 + b * pi4 / 5.0);
    double v2 = a * a / 8.0;
    double v13 = 8.0 * b * b * pi8 / 225.0;
    double v = v1 + v2 + v13;
    t.first_order = {v1 / v, v2 / v, 0.0};
    t.total = {(v1 + v13) / v, v2 / v, v13 / v};
    t.total_variance = v;
    return t;
  }
  if (name == "gfunction") {
    if (params.empty()) params = kGfunctionDefaultA;
    std::size_t p = params.size();
    std::vector<double> vi(p);
    double vprod = 1.0;
    for (std::size_t j = 0; j < p; ++j) {
      vi[j] = (1.0 / 3.0) / ((1.0 + params[j]) * (1.0 + params[j]));
      vprod *= 1.0 + vi[j];
    }
    double v = vprod - 1.0;
    t.first_order.resize(p);
    t.total.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
      t.first_order[j] = vi[j] / v;
      t.total[j] = vi[j] * (vprod / (1.0 + vi[j])) / v;
    }
    t.total_variance = v;
    return t;
  }
  if (name == "linear") {
    if (params.empty()) params = {1.0, 2.0};
    std::size_t p = params.size();
    double v = 0.0;
    for (double b : params) v += b * b / 12.0;
    t.first_order.resize(p);
    for (std::size_t j = 0; j < p; ++j)
      t.first_order[j] = v > 0.0 ? (params[j] * params[j] / 12.0) / v : 0.0;
    t.total = t.first_order;
    t.total_variance = v;
    t.zero_variance = v == 0.0;
    return t;
  }
  if (name == "product") {
    if (dims == 0) dims = 2;
    std::size_t p = dims;
    // On uniform(0,1)^p: E f = 2^-p, E f^2 = 3^-p.
    double ef = std::pow(0.5, static_cast<double>(p));
    double ef2 = std::pow(1.0 / 3.0, static_cast<double>(p));
    double v = ef2 - ef * ef;
    // Var(E[f|x_i]) = Var(x_i) * prod_{j != i} E[x_j]^2 = (1/12) 4^{1-p}.
    double vi = (1.0 / 12.0) * std::pow(0.25, static_cast<double>(p - 1));
    // Var(E[f|x_{-i}]) = E[x_i]^2 * Var(prod_{j != i} x_j).
    double vcomp = 0.25 * (std::pow(1.0 / 3.0, static_cast<double>(p - 1)) -
                           std::pow(0.25, static_cast<double>(p - 1)));
    t.first_order.assign(p, vi / v);
    t.total.assign(p, (v - vcomp) / v);
    t.total_variance = v;
    return t;
  }
  if (name == "constant") {
    if (dims == 0) dims = 1;
    t.first_order.assign(dims, 0.0);
    t.total.assign(dims, 0.0);
    t.total_variance = 0.0;
    t.zero_variance = true;
    return t;
  }
  throw ConfigError("no analytic truth for model '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"ishigami", "gfunction", "linear", "product", "constant"};
}

TableModel::TableModel(Matrix X, std::vector<double> y)
    : X_(std::move(X)), y_(std::move(y)) {
  if (X_.rows() != y_.size())
    throw ConfigError("table model: X rows must match y length");
  if (X_.rows() < 2) throw ConfigError("table model needs at least 2 rows");
  if (X_.cols() == 0) throw ConfigError("table model needs at least 1 column");
}

void TableModel::evaluate_rows(const Matrix& X, std::span<double> out) const {
  if (!(X == X_))
    throw GivenDataError(
        "given-data mode: evaluation requested at points other than the stored "
        "table; this model cannot produce new runs");
  std::copy(y_.begin(), y_.end(), out.begin());
}

}  // namespace gsa
