#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stacky {

enum class ErrorKind {
  CompositeCharacteristic,
  InvalidDegree,
  InvalidArgument,
  DivisionByZero,
  EnumerationTooLarge,
  UndefinedGcd,
  ZeroPolynomialResultant,
  InvalidPoint,
  OutOfTableRange,
  WrongTableKind,
  InsufficientCounts,
  NotExpandable,
  ModelMismatch,
  ZetaMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a stable exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ZetaMismatchError : public Error {
 public:
  ZetaMismatchError(std::size_t index, const std::string& what)
      : Error(ErrorKind::ZetaMismatch, what), index_(index) {}

  // First coefficient index at which the two expansions differ.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace stacky
