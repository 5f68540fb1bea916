#pragma once

#include <stdexcept>
#include <string>

namespace symcls {

enum class ErrorKind {
  ParameterOutOfRange,
  LengthMismatch,
  ConstructionFailure,
  ElementNotPRegular,
  SupportNotCyclic,
  ZeroInput,
  CharacterNotLinear,
  IndexOutOfRange,
  NotInvertible,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symcls
