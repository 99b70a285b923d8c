#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grammar violation in a graph file, path, or element string. Line and
// column are 1-based; column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public ValidationError {
 public:
  explicit UnknownVertex(std::string const& name);
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class GraphMismatch : public Error {
 public:
  GraphMismatch() : Error("operands belong to different graphs") {}
};

class WitnessMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gis
