#pragma once

#include <stdexcept>
#include <string>

namespace frobdepth {

enum class ErrorKind {
  ZeroInverse,
  DimensionMismatch,
  InvalidArgument,
  ParseError,
  NotMonomial,
  NotSquarefree,
  ZeroDimensional,
  UnitIdeal,
  NotHomogeneous,
  ResourceExhausted,
  LiftFailed,
  Capped,
  CertificateFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Self-checks (Buchberger certificates, d*d = 0, map well-definedness, chain
// permanence) run only while a VerificationScope is alive on this thread.
bool verification_enabled();

class VerificationScope {
 public:
  explicit VerificationScope(bool on = true);
  ~VerificationScope();
  VerificationScope(const VerificationScope&) = delete;
  VerificationScope& operator=(const VerificationScope&) = delete;

 private:
  bool previous_;
};

}  // namespace frobdepth
