#pragma once

#include "pivotal/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace pivotal {

class FiniteLattice;

/// The set a function's arguments or values range over.
///
/// Finite sorts are enumerated by element index; index 0 is always the
/// distinguished element 0 and index size()-1 the distinguished element 1.
///
///   chain(m)   the m-element chain {0, 1/(m-1), ..., 1}; boolean() == chain(2)
///   grid(d)    the sampling grid {0, 1/d, ..., 1} of [0,1]; grid(1) == boolean()
///   rational() all of Q, usable as a codomain only
///   lattice(L) the elements of a validated finite distributive lattice,
///              carried by their index in L
///
/// Chains and grids share their elements; a grid additionally marks that the
/// function is a sample of something defined on [0,1].
class Sort {
 public:
  enum class Kind { chain, grid, rational, lattice };

  static Sort boolean() { return chain(2); }
  static Sort chain(std::size_t m);
  static Sort grid(std::size_t denominator);
  static Sort rational();
  static Sort lattice(std::shared_ptr<const FiniteLattice> l);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::rational; }
  bool is_boolean() const { return kind_ == Kind::chain && size_ == 2; }
  bool is_numeric() const { return kind_ != Kind::lattice; }
  bool is_totally_ordered() const;

  /// Number of elements. Throws SortError for rational().
  std::size_t size() const;
  Value element(std::size_t i) const;
  std::optional<std::size_t> index_of(const Value& v) const;
  bool contains(const Value& v) const;

  Value zero() const;
  Value one() const;

  bool leq(const Value& a, const Value& b) const;
  Value meet(const Value& a, const Value& b) const;
  Value join(const Value& a, const Value& b) const;

  const std::shared_ptr<const FiniteLattice>& lattice_ptr() const { return lattice_; }

  /// Element name for lattices, rational text otherwise.
  std::string format(const Value& v) const;
  /// Inverse of format(); throws ParseError for foreign tokens.
  Value parse(std::string_view token) const;

  /// "bool", "chain(3)", "grid(4)", "rat" or "lat(<size>)".
  std::string name() const;

  friend bool operator==(const Sort& a, const Sort& b);

 private:
  Sort(Kind kind, std::size_t size, std::shared_ptr<const FiniteLattice> l)
      : kind_(kind), size_(size), lattice_(std::move(l)) {}

  Kind kind_;
  std::size_t size_;
  std::shared_ptr<const FiniteLattice> lattice_;
};

/// med(x,y,z) = (x∧y)∨(y∧z)∨(z∧x) in the order of `s`. Throws DomainError
/// when an argument is not an element of a finite sort.
Value median(const Sort& s, const Value& x, const Value& y, const Value& z);

}  // namespace pivotal
