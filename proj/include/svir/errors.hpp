#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svir {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class KindNotInFamily : public Error {
 public:
  using Error::Error;
};

class IndexNotInSector : public Error {
 public:
  using Error::Error;
};

class ZeroTarget : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// An oracle answered a query with a map that does not reproduce its own
/// reported values.
class OracleDefect : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace svir
