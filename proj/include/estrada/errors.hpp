#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace estrada {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid edge endpoints or loops passed to Graph::build.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs at least one vertex.
class DegenerateGraphError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A graph6 byte outside the printable range 63..126.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The graph6 payload is shorter or longer than the size prefix requires.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace estrada
