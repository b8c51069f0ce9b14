#pragma once

#include <stdexcept>
#include <string>

namespace gaussindex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Gauss code. `token()` is the offending token text.
class ParseError : public Error {
 public:
  ParseError(std::string token, const std::string& reason)
      : Error("parse error at token '" + token + "': " + reason), token_(std::move(token)) {}
  [[nodiscard]] const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class UnknownChordError : public Error {
 public:
  using Error::Error;
};

/// A move or splice was requested at a site where it does not apply.
class MoveError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussindex
