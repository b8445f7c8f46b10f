#ifndef RPAREA_ERRORS_H_
#define RPAREA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rparea {

// Raised when an argument lies outside the mathematical domain of an
// operation (non-positive price, vacuous bound, negative cycle, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the LP solver when it fails to terminate within its iteration
// cap. Distinct from an infeasible verdict.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based, 0 when not applicable.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rparea

#endif  // RPAREA_ERRORS_H_
