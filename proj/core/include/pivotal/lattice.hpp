#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/sort.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pivotal {

/// Order data as read from a `.lat` file, before validation.
struct RawLattice {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq;
  std::string bottom;
  std::string top;
};

inline constexpr std::size_t default_lattice_cap = 16;

/// A validated bounded distributive lattice given extensionally.
class FiniteLattice {
 public:
  /// Adds the reflexive-transitive closure of `raw.leq`, then checks the
  /// poset, lattice, boundedness and distributivity axioms in that order.
  /// Throws LatticeError naming the first violated axiom and a witness.
  /// Elements are reordered so that bottom has index 0 and top the last index.
  static FiniteLattice validate(const RawLattice& raw, std::size_t max_size = default_lattice_cap);

  /// The m-element chain with elements named 0, 1, ..., m-1.
  static FiniteLattice chain(std::size_t m);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  bool is_chain() const;

 private:
  FiniteLattice() = default;

  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Lattice sort over a freshly validated lattice.
Sort make_lattice_sort(const RawLattice& raw, std::size_t max_size = default_lattice_cap);

/// Lattice polynomial function in disjunctive normal form
///   p(x) = ⋁_S c(S) ∧ ⋀_{i∈S} x_i
/// with c(S) stored for every S ⊆ [n] (bit i-1 of the mask stands for x_i).
class LatticePolynomial {
 public:
  /// Throws ParameterError when the coefficient map is not order-preserving.
  LatticePolynomial(Sort lattice, std::size_t arity, std::vector<Value> coefficients);

  const Sort& sort() const { return sort_; }
  std::size_t arity() const { return arity_; }
  const std::vector<Value>& coefficients() const { return coefficients_; }
  const Value& coefficient(unsigned mask) const { return coefficients_.at(mask); }

 private:
  Sort sort_;
  std::size_t arity_;
  std::vector<Value> coefficients_;
};

Value lp_evaluate(const LatticePolynomial& p, const Point& x);
FunctionTable tabulate(const LatticePolynomial& p);

/// Coefficients read off f at characteristic vectors, provided f satisfies
/// f(x) = med(x_k, f(x_k^1), f(x_k^0)) at every point and pivot.
std::optional<LatticePolynomial> is_lattice_polynomial(const FunctionTable& f);

/// Reflexivity p(x,...,x) = x, checked on every lattice element.
bool is_sugeno(const LatticePolynomial& p);

struct QlpReport {
  bool holds = true;
  /// First (point, pivot) where f(x) != med(phi_k(x_k), f(x_k^1), f(x_k^0)).
  std::optional<std::pair<Point, std::size_t>> witness;
};

/// Componentwise median identity with one unary phi table per argument.
/// Throws ParameterError when some phi_k(x) != med(phi_k(x), phi_k(1), phi_k(0)).
QlpReport qlp_check(const FunctionTable& f, std::span<const FunctionTable> phis);

/// Single-phi mode with phi(p) = f(p, ..., p) shared by every argument.
QlpReport qlp_check_diagonal(const FunctionTable& f);

}  // namespace pivotal
