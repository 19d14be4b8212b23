#ifndef NCWHEEL_ERROR_HPP
#define NCWHEEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncwheel {

enum class ErrorKind {
  Domain,          // invalid parameter or argument value
  Index,           // vertex or block index out of range
  Overflow,        // recurrence magnitude guard tripped
  Singular,        // linear system or circulant inversion failed
  AxiomViolation,  // assembled matrix failed a group-inverse axiom
  Unresolved,      // formula reconstruction did not match the trusted path
  Precondition,    // operation invoked before its required state exists
  Dimension,       // matrix dimension mismatch
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace ncwheel

#endif
