#pragma once

#include <stdexcept>
#include <string>

namespace tensorcoh {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objects from different rings, mismatched shapes, degree-incompatible entries.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside what the engine decides (inhomogeneous, non-domain, non-CM...).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Index beyond what was computed.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invariant undefined for the given input (depth of the zero module).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

/// A cross-check failed; signals an engine bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorcoh

namespace tensorcoh {

/// Malformed input text; column is 0-based within the parsed fragment.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column) : Error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace tensorcoh
