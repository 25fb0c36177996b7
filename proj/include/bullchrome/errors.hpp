#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bullchrome {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: vertex out of range, empty operand, invalid parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  empty_input,
  malformed_header,
  invalid_character,
  length_mismatch,
  trailing_bits,
  malformed_edgelist,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// A configured size or resource cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition. Carries the violating
/// configuration when one is known.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// A triangle-free induced subgraph needs more than t colors, so the input
/// is not in the class the caller claimed.
class ClassMembershipError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An internal certificate failed to re-validate. Always an implementation
/// bug or a counterexample to a proven statement.
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, std::vector<int> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace bullchrome
