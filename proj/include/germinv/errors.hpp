#pragma once

#include <stdexcept>
#include <string>

namespace germinv {

enum class ErrorCode {
  kInvalidArgument,
  kRingMismatch,
  kInexactDivision,
  kParse,
  kResourceCap,
  kNotFinitelyDetermined,
  kUndetermined,
  kIntegrity,
  kGenericityUnresolved,
  kShapeMismatch,
};

/// Base class for every error raised by the engine. The code is what the C
/// API and the CLI translate into status values and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what)
      : Error(ErrorCode::kRingMismatch, what) {}
};

class InexactDivision : public Error {
 public:
  explicit InexactDivision(const std::string& what)
      : Error(ErrorCode::kInexactDivision, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::kParse, what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured budget (S-pairs, term count, wall clock) was exhausted.
/// Never converted into a partial answer.
class ResourceCapExceeded : public Error {
 public:
  explicit ResourceCapExceeded(const std::string& what)
      : Error(ErrorCode::kResourceCap, what) {}
};

class NotFinitelyDetermined : public Error {
 public:
  explicit NotFinitelyDetermined(const std::string& what)
      : Error(ErrorCode::kNotFinitelyDetermined, what) {}
};

/// Raised when two routes that must agree do not, or an identity that must
/// produce an integer does not.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what)
      : Error(ErrorCode::kIntegrity, what) {}
};

class GenericityUnresolved : public Error {
 public:
  explicit GenericityUnresolved(const std::string& what)
      : Error(ErrorCode::kGenericityUnresolved, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace germinv
