#pragma once

#include <stdexcept>
#include <string>

namespace spinideal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

class NotInSubalgebra : public Error {
 public:
  using Error::Error;
};

class InvalidPlacement : public Error {
 public:
  using Error::Error;
};

class InvalidGeneratorSet : public Error {
 public:
  using Error::Error;
};

// Raised when the involution search cannot be completed; the message carries
// the maximal commuting set that was reached.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class UnsupportedSignature : public Error {
 public:
  using Error::Error;
};

class NotAKahlerIdempotent : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace spinideal
