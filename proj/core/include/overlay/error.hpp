#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace overlay {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph literal, family DSL, .hg / .hs files, descriptors).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);
  explicit ParseError(const std::string& message);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_ = 0;
  std::vector<std::string> expected_;
};

/// A configured size cap (graph order, hyperedge size, enumeration or oracle budget) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition (bad vertex index, wrong family kind, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace overlay
