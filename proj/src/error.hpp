#pragma once

#include <stdexcept>
#include <string>

namespace kbgq {

enum class ErrorKind {
  validation,
  parse,
  resource,
  membership,
  internal_consistency,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the core. The kind is what the C API
/// maps onto its status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

/// Enumeration or search limit exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

/// An element or subgroup is not contained in the group it was asked about.
class MembershipError : public Error {
 public:
  explicit MembershipError(const std::string& what)
      : Error(ErrorKind::membership, what) {}
};

/// An exactness contract was broken (non-integral decomposition, route
/// disagreement, ...). Never rounded away.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : Error(ErrorKind::internal_consistency, what) {}
};

/// Malformed input document; `path` is a JSON pointer to the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(ErrorKind::parse, what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace kbgq
