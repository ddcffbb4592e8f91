#pragma once

#include <cstddef>
#include <utility>
#include <stdexcept>
#include <string>

namespace swapsuffix {

/// Root of every error the library throws. Callers that only need to report
/// a failure can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TextTooLong : public Error {
 public:
  TextTooLong(std::size_t needed, std::size_t max_len)
      : Error("text needs " + std::to_string(needed) + " positions but max_len is " +
              std::to_string(max_len)) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cosine of a zero-norm vector is undefined") {}
};

class EmptyAllowedSet : public Error {
 public:
  EmptyAllowedSet() : Error("token restriction leaves no selectable token") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SpanOutOfRange : public Error {
 public:
  using Error::Error;
};

class ConstantInput : public Error {
 public:
  ConstantInput() : Error("correlation is undefined for constant input") {}
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ScorerFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string id, const std::string& reason)
      : Error(id + ": " + reason), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class EmptyResults : public Error {
 public:
  using Error::Error;
};

// Encoder bridge failures.
class TransportError : public Error {
 public:
  using Error::Error;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class RemoteError : public Error {
 public:
  using Error::Error;
};

}  // namespace swapsuffix
