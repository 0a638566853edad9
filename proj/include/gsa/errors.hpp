#ifndef GSA_ERRORS_HPP
#define GSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsa {

// Exit-code contract for the CLI: 2 config, 3 evaluation, 4 method precondition.

/// Bad configuration: invalid parameters, unknown registry names,
/// unsupported construction orders, budget below a method's floor.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A model evaluation failed (external process died, malformed output,
/// NaN response). Carries the offending row when known.
class EvaluationError : public std::runtime_error {
public:
  explicit EvaluationError(const std::string& msg, long row = -1)
      : std::runtime_error(msg), row_(row) {}
  long row() const { return row_; }

private:
  long row_;
};

/// Given-data mode was asked to do something that requires new model
/// evaluations.
class GivenDataError : public EvaluationError {
public:
  explicit GivenDataError(const std::string& msg) : EvaluationError(msg) {}
};

/// The chosen method's preconditions are not met by the problem
/// (e.g. dependent inputs fed to a pick-freeze estimator).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gsa

#endif
