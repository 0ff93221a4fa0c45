#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 input; offset is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Operation needs a connected graph; u and v lie in different components.
class DisconnectedError : public Error {
 public:
  DisconnectedError(int u, int v)
      : Error("graph is disconnected: vertices " + std::to_string(u) + " and " +
              std::to_string(v) + " lie in different components"),
        u_(u),
        v_(v) {}
  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_, v_;
};

/// Argument outside the documented domain (bounds, non-tree input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace distspec
