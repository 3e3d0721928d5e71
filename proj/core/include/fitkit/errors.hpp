#pragma once

#include <stdexcept>
#include <string>

namespace fitkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (degree mismatch, H not a
/// subgroup, non-prime p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured size cap was exceeded; `cap` names it (e.g. "subgroups").
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, unsigned long long limit, unsigned long long actual)
      : Error("cap '" + cap + "' exceeded: limit " + std::to_string(limit) + ", needed " +
              std::to_string(actual)),
        cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

/// An internal cross-check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fitkit
