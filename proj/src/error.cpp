#include "frobdepth/error.hpp"

namespace frobdepth {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ZeroDimensional: return "ZeroDimensional";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::Capped: return "Capped";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
  }
  return "Unknown";
}

namespace {
thread_local bool g_verify = false;
}

bool verification_enabled() { return g_verify; }

VerificationScope::VerificationScope(bool on) : previous_(g_verify) { g_verify = on; }

VerificationScope::~VerificationScope() { g_verify = previous_; }

}  // namespace frobdepth
