#pragma once

#include <stdexcept>
#include <string>

namespace charkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group specification or cycle notation.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A group is larger than the configured enumeration or subgroup cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (group mismatch,
/// element outside the group, H not containing G', ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A class function that was required to be a character is not one.
class NotACharacter : public Error {
 public:
  using Error::Error;
};

/// The character table computation could not complete or failed its
/// exact self-check.
class TableError : public Error {
 public:
  using Error::Error;
};

}  // namespace charkit
