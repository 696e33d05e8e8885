#ifndef FRACMEASURE_TYPES_HPP
#define FRACMEASURE_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fracmeasure {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

using Symbol = int;
using Word = std::vector<Symbol>;

// Process exit codes shared by the library error types and the CLI.
enum class ExitCode : int {
  ok = 0,
  invalid_input = 2,
  precondition = 3,
  unsupported = 4,
  budget = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Malformed or invalid input data (system files, matrices, words).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ExitCode::invalid_input, what) {}
};

// Input is well formed but violates a mathematical precondition
// (reducible matrix, missing separation certificate, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ExitCode::precondition, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ExitCode::unsupported, what) {}
};

// Raised when a computation would exceed its resource budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(ExitCode::budget, what) {}
};

std::string to_string(const Word& w);

/// Interval [lower, upper] believed (or certified, per the method tags) to
/// contain a measure-like quantity evaluated at exponent s.
struct EstimateBracket {
  double lower = 0.0;
  double upper = 0.0;
  double s = 0.0;
  std::string lower_method;
  std::string upper_method;

  double width() const { return upper - lower; }
  bool contains(double x, double tol = 0.0) const { return lower - tol <= x && x <= upper + tol; }
  bool overlaps(const EstimateBracket& o) const { return lower <= o.upper && o.lower <= upper; }
};

}  // namespace fracmeasure

#endif  // FRACMEASURE_TYPES_HPP
