#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/pivotal_function.hpp"
#include "pivotal/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pivotal {

/// Subsets S ⊆ [n] are bitmasks with bit i-1 standing for i.
using SubsetMask = unsigned;

/// The point 1_S of {0,1}^n.
Point characteristic_vector(std::size_t arity, SubsetMask s);

/// Index of 1_S in a table over a domain whose element indices for 0 and 1
/// are 0 and |X|-1.
std::size_t vertex_index(const FunctionTable& f, SubsetMask s);

/// Multilinear extension held by its vertex values f(1_S).
class MultilinearForm {
 public:
  MultilinearForm(std::size_t arity, std::vector<Rational> vertex_values);

  std::size_t arity() const { return arity_; }
  const std::vector<Rational>& vertex_values() const { return vertex_values_; }
  const Rational& vertex_value(SubsetMask s) const { return vertex_values_.at(s); }

  friend bool operator==(const MultilinearForm&, const MultilinearForm&) = default;

 private:
  std::size_t arity_;
  std::vector<Rational> vertex_values_;
};

/// Lovász extension held by its Möbius coefficients a_S.
class LovaszForm {
 public:
  LovaszForm(std::size_t arity, std::vector<Rational> mobius);

  std::size_t arity() const { return arity_; }
  const std::vector<Rational>& coefficients() const { return mobius_; }
  const Rational& coefficient(SubsetMask s) const { return mobius_.at(s); }

  friend bool operator==(const LovaszForm&, const LovaszForm&) = default;

 private:
  std::size_t arity_;
  std::vector<Rational> mobius_;
};

/// Vertex values f(1_S) of a table whose domain contains 0 and 1, read as
/// rationals (lattice codomains are rejected with SortError).
std::vector<Rational> vertex_values(const FunctionTable& f);

/// Sum-of-products form of a Boolean or pseudo-Boolean table.
MultilinearForm sop_form(const FunctionTable& f);

/// Σ_S f(1_S) Π_{i∈S} x_i Π_{i∉S} (1−x_i). Throws DomainError for
/// coordinates outside [0,1] or an arity mismatch.
Rational mle_evaluate(const MultilinearForm& m, std::span<const Rational> x);

/// f(x_k^1) − f(x_k^0).
Rational mle_partial(const MultilinearForm& m, std::size_t k, std::span<const Rational> x);

/// Monomial coefficients c_T of the expanded polynomial Σ_T c_T Π_{i∈T} x_i.
std::vector<Rational> monomial_coefficients(const MultilinearForm& m);

using Evaluator = std::function<Rational(std::span<const Rational>)>;

struct IdentityReport {
  bool holds = true;
  std::vector<bool> per_pivot;
  /// First failing (point, pivot), if any.
  std::optional<std::pair<Point, std::size_t>> witness;
};

/// f(x) = x_k f(x_k^1) + (1−x_k) f(x_k^0) at every Boolean point, then on
/// the grid {0, 1/d, ..., 1}^n as a confirming pass.
IdentityReport check_mle_identity(const MultilinearForm& m, std::size_t grid_denominator = 4);
IdentityReport check_mle_identity(const Evaluator& f, std::size_t arity,
                                  std::size_t grid_denominator = 4);

/// f(x) = x_k (f(x_k^1)∨f(x_k^0)) + (1−x_k)(f(x_k^1)∧f(x_k^0)) on the grid;
/// holds exactly for nondecreasing multilinear forms.
IdentityReport check_monotone_mle_identity(const MultilinearForm& m,
                                           std::size_t grid_denominator = 4);

/// a_S = Σ_{T⊆S} (−1)^{|S|−|T|} f(1_T).
LovaszForm mobius(const FunctionTable& f);
LovaszForm mobius(std::size_t arity, std::span<const Rational> vertex_values);
/// f(1_T) = Σ_{S⊆T} a_S.
std::vector<Rational> zeta(const LovaszForm& l);

/// Σ_S a_S ⋀_{i∈S} x_i. Throws DomainError outside [0,1]^n.
Rational lovasz_evaluate(const LovaszForm& l, std::span<const Rational> x);

/// (Π_1, Π_2) for a binary Lovász extension. Throws DomainError unless n = 2.
std::pair<PivotalFunction, PivotalFunction> binary_lovasz_pivotals(const LovaszForm& l);

/// Table of an extension sampled on grid(d)^n with rational codomain.
FunctionTable sample_on_grid(const LovaszForm& l, std::size_t denominator);
FunctionTable sample_on_grid(const MultilinearForm& m, std::size_t denominator);

enum class Orientation { identity, negation };

struct OrientationWitness {
  std::vector<Orientation> phis;
};

/// Orientation making f∘(φ_1,...,φ_n) nondecreasing, or nullopt when some
/// argument is neither isotone nor antitone. Inessential arguments keep the
/// identity.
std::optional<OrientationWitness> monotone_witness(const FunctionTable& f);

/// The table of f∘(φ_1, ..., φ_n) on {0,1}^n.
FunctionTable apply_orientation(const FunctionTable& f, const OrientationWitness& w);

/// (Π_1, ..., Π_n) with Π_k(p,u,v) = med(φ_k(p), u, v) over the codomain of f.
std::vector<PivotalFunction> orientation_pivotals(const FunctionTable& f, const OrientationWitness& w);

}  // namespace pivotal
