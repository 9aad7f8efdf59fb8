#ifndef NPHMM_ERROR_HPP
#define NPHMM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nphmm {

enum class ErrorKind {
  InvalidArgument,
  DomainError,
  NotErgodic,
  QuadratureFailure,
  SingularWhitening,
  NonRealDiagonalization,
  KTooLarge,
  NonFiniteObjective,
  NoJump,
  CalibrationFailed,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. The kind is what callers (and the CLI exit-code
/// mapping) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nphmm

#endif  // NPHMM_ERROR_HPP
