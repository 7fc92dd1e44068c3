#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bquant {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ranks of the operands disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnboundedPolyhedron : public Error {
 public:
  using Error::Error;
};

class EmptyPolyhedron : public Error {
 public:
  using Error::Error;
};

class NoVertices : public Error {
 public:
  using Error::Error;
};

/// Malformed inequality data (zero normal, wrong length).
class InvalidPolyhedron : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotValidated : public Error {
 public:
  using Error::Error;
};

/// Signed tails failed to cancel; the witness names the offending term.
class NotFinite : public Error {
 public:
  using Error::Error;
};

class ZeroModularWeight : public Error {
 public:
  using Error::Error;
};

class PairingNotOne : public Error {
 public:
  using Error::Error;
};

/// Description text could not be read. Line and column are 1-based; zero when
/// the error is semantic rather than syntactic.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bquant

namespace bquant {

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bquant
