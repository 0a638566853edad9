#ifndef GSA_MODEL_HPP
#define GSA_MODEL_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gsa/dists.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

/// Evaluatable scalar function f(x). Implementations are pure given a row;
/// the cumulative evaluation counter is the only mutable state.
class Model {
public:
  virtual ~Model() = default;

  virtual std::size_t arity() const = 0;
  virtual std::string name() const = 0;

  /// Evaluate a batch of rows. Increments eval_count by X.rows().
  std::vector<double> evaluate(const Matrix& X) const;

  std::uint64_t eval_count() const { return eval_count_.load(); }
  void reset_eval_count() const { eval_count_.store(0); }

  /// True when the model can be evaluated at new points (builtin/external);
  /// false for fixed data tables.
  virtual bool evaluatable() const { return true; }

protected:
  virtual void evaluate_rows(const Matrix& X, std::span<double> out) const = 0;

private:
  mutable std::atomic<std::uint64_t> eval_count_{0};
};

/// One evaluated batch with the seed that produced X and the counter after.
struct EvalBatch {
  Matrix X;
  std::vector<double> y;
  std::uint64_t seed = 0;
  std::uint64_t eval_count = 0;
};

// ---- builtin registry ----------------------------------------------------

/// Exact first-order/total indices of a builtin on its canonical space.
struct IndexTruth {
  std::vector<double> first_order;
  std::vector<double> total;
  double total_variance = 0.0;
  bool zero_variance = false;
};

/// Builtin analytic test models: {ishigami, gfunction, linear, product,
/// constant}. `params` semantics depend on the model; empty means defaults.
/// `dims` is honored only by models with free arity (product, constant).
std::shared_ptr<Model> make_builtin(const std::string& name,
                                    std::vector<double> params = {},
                                    std::size_t dims = 0);

/// Canonical input space of a builtin (the space its truth refers to).
InputSpace builtin_space(const std::string& name, std::vector<double> params = {},
                         std::size_t dims = 0);

/// Closed-form ANOVA indices of a builtin on its canonical space.
IndexTruth builtin_truth(const std::string& name, std::vector<double> params = {},
                         std::size_t dims = 0);

std::vector<std::string> builtin_names();

// ---- fixed data table ----------------------------------------------------

/// Given-data mode: a frozen (X, y) table. Evaluation is only legal at the
/// stored X; anything else is a given-data violation.
class TableModel : public Model {
public:
  TableModel(Matrix X, std::vector<double> y);

  std::size_t arity() const override { return X_.cols(); }
  std::string name() const override { return "table"; }
  bool evaluatable() const override { return false; }

  const Matrix& x() const { return X_; }
  const std::vector<double>& y() const { return y_; }

protected:
  void evaluate_rows(const Matrix& X, std::span<double> out) const override;

private:
  Matrix X_;
  std::vector<double> y_;
};

// ---- external subprocess model --------------------------------------------

/// Child-process model speaking the line protocol: parent writes a header
/// "p,n" then n CSV rows of p floats to the child's stdin and reads exactly
/// n lines each holding one float from its stdout.
class ExternalModel : public Model {
public:
  ExternalModel(std::string command, std::vector<std::string> args,
                std::size_t arity);

  std::size_t arity() const override { return arity_; }
  std::string name() const override { return "external:" + command_; }

  const std::string& command() const { return command_; }
  const std::vector<std::string>& args() const { return args_; }

protected:
  void evaluate_rows(const Matrix& X, std::span<double> out) const override;

private:
  std::string command_;
  std::vector<std::string> args_;
  std::size_t arity_;
};

}  // namespace gsa

#endif
