#include "stacky/error.hpp"

namespace stacky {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::UndefinedGcd: return "UndefinedGcd";
    case ErrorKind::ZeroPolynomialResultant: return "ZeroPolynomialResultant";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::OutOfTableRange: return "OutOfTableRange";
    case ErrorKind::WrongTableKind: return "WrongTableKind";
    case ErrorKind::InsufficientCounts: return "InsufficientCounts";
    case ErrorKind::NotExpandable: return "NotExpandable";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::ZetaMismatch: return "ZetaMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace stacky
