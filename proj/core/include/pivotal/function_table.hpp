#pragma once

#include "pivotal/rational.hpp"
#include "pivotal/sort.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pivotal {

/// Sorted set of 1-based argument labels.
using IndexSet = std::vector<std::size_t>;

/// Exhaustive value table of f: X^n -> Y over a finite domain sort X.
///
/// Points are indexed in base |X| with x_1 as the most significant digit,
/// so the Boolean point (x_1,x_2) = (1,0) has index 2. Argument labels k are
/// 1-based throughout the library.
class FunctionTable {
 public:
  FunctionTable(std::size_t arity, Sort domain, Sort codomain, std::vector<Value> values);

  static FunctionTable tabulate(std::size_t arity, Sort domain, Sort codomain,
                                const std::function<Value(const Point&)>& fn);
  static FunctionTable constant(std::size_t arity, Sort domain, Sort codomain, Value c);
  /// Boolean table from a 0/1 vector in index order.
  static FunctionTable boolean(std::size_t arity, std::span<const int> bits);
  /// Boolean table of arity n whose index-i entry is bit i of `mask`.
  static FunctionTable boolean_from_mask(std::size_t arity, unsigned long long mask);

  std::size_t arity() const { return arity_; }
  const Sort& domain() const { return domain_; }
  const Sort& codomain() const { return codomain_; }
  const std::vector<Value>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Value& at(std::size_t index) const { return values_[index]; }

  /// Throws DomainError on arity mismatch or a coordinate outside the domain.
  std::size_t index_of(const Point& x) const;
  Point point_at(std::size_t index) const;
  /// Digit (element index) of coordinate k at the given point index.
  std::size_t digit(std::size_t index, std::size_t k) const;
  /// Index distance between points differing by one step in coordinate k.
  std::size_t stride(std::size_t k) const { return strides_[k - 1]; }

  bool is_constant() const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b);

 private:
  std::size_t arity_;
  Sort domain_;
  Sort codomain_;
  std::vector<Value> values_;
  std::vector<std::size_t> strides_;
};

/// |X|^n, throwing DomainError when it does not fit a size_t.
std::size_t point_count(std::size_t domain_size, std::size_t arity);

Value evaluate(const FunctionTable& f, const Point& x);

/// x with coordinate k (1-based) replaced by a.
Point substitute(const Point& x, std::size_t k, const Value& a);

/// f with argument k fixed to a: an (n-1)-ary table, or for n = 1 a unary
/// table whose argument is inessential.
FunctionTable cofactor(const FunctionTable& f, std::size_t k, const Value& a);

/// The S-section f_S^a: coordinates outside S are taken from a; the section's
/// arguments are the members of S in increasing order.
FunctionTable section(const FunctionTable& f, const IndexSet& s, const Point& a);

/// Unary section f_k^a.
FunctionTable unary_section(const FunctionTable& f, std::size_t k, const Point& a);

IndexSet essential_arguments(const FunctionTable& f);

/// f_sigma: X^m -> Y with f_sigma(a) = f(a_sigma(1), ..., a_sigma(n)).
/// sigma[i-1] holds sigma(i), a label in [1, m].
FunctionTable remap(const FunctionTable& f, std::span<const std::size_t> sigma, std::size_t m);

struct ReducedFunction {
  FunctionTable table;
  /// Labels of f kept, in order; empty when f is constant.
  IndexSet kept;
};

/// Deletes inessential arguments. Constant tables reduce to a unary constant.
ReducedFunction drop_inessential(const FunctionTable& f);

}  // namespace pivotal
