#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centext {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A word or relator references a generator the context does not declare.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Arguments violate a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Coset enumeration needed more live cosets than allowed.
class CosetOverflow : public Error {
 public:
  CosetOverflow(std::size_t limit)
      : Error("coset table overflow: more than " + std::to_string(limit) +
              " live cosets required"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

// An input exceeds the size a brute-force routine accepts.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A matrix on canonical coordinates does not define a homomorphism.
class IllDefinedHom : public Error {
 public:
  IllDefinedHom(std::size_t generator)
      : Error("homomorphism ill-defined on source generator " +
              std::to_string(generator)),
        generator_(generator) {}
  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

// Internal cross-check failed; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace centext
