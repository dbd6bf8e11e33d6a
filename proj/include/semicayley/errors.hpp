#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semicayley {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

class InvalidElementError : public Error {
 public:
  using Error::Error;
};

/// A ConnectionSpec violated one of its invariants; the message names it.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (group too large, graph too large).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace semicayley
