#include "legkh/error.hpp"

namespace legkh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::StrandUnderflow: return "StrandUnderflow";
    case ErrorKind::NonzeroEndState: return "NonzeroEndState";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::NonplanarRotation: return "NonplanarRotation";
    case ErrorKind::NotASpanningTree: return "NotASpanningTree";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::NotUnknot: return "NotUnknot";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::ConventionError: return "ConventionError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace legkh
