#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace covermotive {

enum class ErrorKind {
  MalformedSpec,
  NotAGroup,
  DegreeOverflow,
  IndexOutOfRange,
  SizeLimit,
  CapExceeded,
  UnsupportedNonabelian,
  NegativeCoefficient,
  MissingEvaluations,
  NonEmptyDegreeZero,
  NonFreeAction,
  InexactDivision,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Group axiom failure with the offending triple (a, b, c); unused slots are -1.
class NotAGroupError : public Error {
 public:
  NotAGroupError(const std::string& what, std::array<int, 3> witness)
      : Error(ErrorKind::NotAGroup, what), witness_(witness) {}

  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 3> witness_;
};

/// A slot permutation that fixes the index data of a generator.
class NonFreeActionError : public Error {
 public:
  NonFreeActionError(const std::string& what, std::vector<int> witness)
      : Error(ErrorKind::NonFreeAction, what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace covermotive
