#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivotal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arity mismatch, index out of range, coordinate outside a sort.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live in incompatible sorts.
class SortError : public Error {
 public:
  using Error::Error;
};

/// A pivotal function is undefined on a triple the check needs.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Family parameters (t-norm table, phi maps, ...) violate an axiom.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed lattice order data. `axiom()` names the first violated axiom.
class LatticeError : public Error {
 public:
  LatticeError(std::string axiom, const std::string& what)
      : Error(what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Syntax errors in expressions and file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pivotal
