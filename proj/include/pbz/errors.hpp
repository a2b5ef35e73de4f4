#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The order relation or a unary table violates a structural invariant.
class MalformedAlgebra : public Error {
 public:
  using Error::Error;
};

// An operation was asked of an algebra whose signature lacks it.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotQuasiStone : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

// A term uses a symbol its signature does not provide.
class SignatureError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class VariableSplitError : public Error {
 public:
  using Error::Error;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class NotWeakLukasiewicz : public Error {
 public:
  using Error::Error;
};

class NotDistributivePBZ : public Error {
 public:
  using Error::Error;
};

class NotDeMorgan : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pbz
