#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockinv {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  CapExceeded = 3,
  Parse = 4,
  UnknownLemma = 5,
  Io = 6,
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parameters outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

/// A brute-force enumeration would exceed the configured element cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ErrorCode::CapExceeded, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(ErrorCode::Parse, what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownLemma : public Error {
 public:
  explicit UnknownLemma(const std::string& id) : Error(ErrorCode::UnknownLemma, "unknown lemma id '" + id + "'") {}
};

/// Raised when an integrality or consistency invariant of the implementation
/// itself fails.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace blockinv
