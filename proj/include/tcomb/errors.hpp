#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcomb {

/// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// A search or enumeration ceiling was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A parameter table was consulted outside its stored prefix.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A parameter table violates its side conditions.
class TableError : public Error {
 public:
  using Error::Error;
};

/// A theory handle lacks a capability the caller needs.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcomb
