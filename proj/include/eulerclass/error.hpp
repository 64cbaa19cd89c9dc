#pragma once

#include <stdexcept>
#include <string>

namespace eulerclass {

// Failure categories. The CLI maps them onto its exit codes.
enum class ErrorKind {
  kParse,         // malformed graph/orientation/tree text
  kInvalidEdge,   // edge id not present in the view
  kInvalidInput,  // well-formed but outside an operation's domain
  kResource,      // enumeration cap exceeded
  kPrecondition,  // caller broke a documented precondition
  kInternal,      // an invariant the construction guarantees was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::kParse, w) {}
};
struct InvalidEdgeError : Error {
  explicit InvalidEdgeError(const std::string& w) : Error(ErrorKind::kInvalidEdge, w) {}
};
struct InvalidInputError : Error {
  explicit InvalidInputError(const std::string& w) : Error(ErrorKind::kInvalidInput, w) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& w) : Error(ErrorKind::kResource, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::kPrecondition, w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorKind::kInternal, w) {}
};

}  // namespace eulerclass
