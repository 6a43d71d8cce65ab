#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsat {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed value handed to an API (bad assignment length, duplicate
/// literal, out-of-range variable, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that does not match one of the accepted grammars. `line()` is
/// 1-based for line-oriented formats; `offset()` is a byte offset for the
/// expression grammar. Whichever does not apply is zero.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset = 0)
      : Error(what), line_(line), offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// A configured size limit (brute-force variables, simulator qubits,
/// decomposition ancillas) would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Circuit construction violated a structural rule.
class CircuitError : public Error {
 public:
  using Error::Error;
};

/// Oracle or encoding could not be produced for the given input.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// The formula has no model; Grover search is undefined.
class UnsatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsat
