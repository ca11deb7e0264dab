#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/rational.hpp"
#include "pivotal/sort.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pivotal {

/// A pivotal function Π: D ⊆ X × Y² → Y, either an explicit table on a
/// declared domain or one of the built-in families.
class PivotalFunction {
 public:
  struct Triple {
    Value p;
    Value u;
    Value v;
    friend bool operator<(const Triple& a, const Triple& b);
    friend bool operator==(const Triple& a, const Triple& b);
  };
  using Table = std::map<Triple, Value>;

  /// Explicit map; D is exactly the key set of `table`.
  static PivotalFunction extensional(Sort pivot_sort, Sort value_sort, Table table);

  /// Π(p,u,v) = (p∧u)∨(¬p∧v) on {0,1}³.
  static PivotalFunction ite();
  /// Π(p,u,v) = p·u + (1−p)·v on [0,1] × Q².
  static PivotalFunction mle_affine();
  /// Π(p,u,v) = med(p,u,v) on L³.
  static PivotalFunction median(Sort lattice);
  /// Π(p,u,v) = T(p,u) for a t-norm table T on a finite chain.
  /// Throws ParameterError naming the violated t-norm axiom.
  static PivotalFunction tnorm(FunctionTable t);
  /// Π(p,u,v) = med(φ(p),u,v) for a unary φ: X → Y.
  /// Throws ParameterError when φ(x) != med(φ(x), φ(1), φ(0)) for some x.
  static PivotalFunction qlp(FunctionTable phi);
  /// Pivot for argument `argument` (1 or 2) of the binary Lovász extension
  /// a0 + a1·x1 + a2·x2 + a12·(x1∧x2).
  static PivotalFunction lovasz_binary(std::array<Rational, 4> coefficients, std::size_t argument);

  /// Π(p,u,v), or nullopt outside D.
  std::optional<Value> apply(const Value& p, const Value& u, const Value& v) const;
  /// Throws CoverageError outside D.
  Value operator()(const Value& p, const Value& u, const Value& v) const;
  bool defined_at(const Value& p, const Value& u, const Value& v) const {
    return apply(p, u, v).has_value();
  }

  /// "extensional", "ite", "mle-affine", "median", "tnorm", "qlp",
  /// "lovasz2" or "restricted(<inner>)".
  std::string family() const;
  /// Sort of the values Π returns; rational() for the numeric families.
  const Sort& value_sort() const { return value_sort_; }
  /// The table of an extensional Π, nullptr otherwise.
  const Table* table() const;
  /// Family name followed by its textual parameters, as accepted by
  /// builtin_pivotal(). Throws Error for extensional and restricted Π.
  std::vector<std::string> builtin_spec() const;

  friend PivotalFunction monotone_restrict(const PivotalFunction& pi);

 private:
  struct Extensional {
    Sort pivot_sort;
    Table table;
  };
  struct Ite {};
  struct MleAffine {};
  struct Median {
    Sort lattice;
  };
  struct Tnorm {
    FunctionTable t;
  };
  struct Qlp {
    FunctionTable phi;
  };
  struct LovaszBinary {
    std::array<Rational, 4> a;
    std::size_t argument;
  };
  struct Restricted {
    std::shared_ptr<const PivotalFunction> inner;
  };
  using Kind = std::variant<Extensional, Ite, MleAffine, Median, Tnorm, Qlp, LovaszBinary, Restricted>;

  PivotalFunction(Kind kind, Sort value_sort) : kind_(std::move(kind)), value_sort_(std::move(value_sort)) {}

  Kind kind_;
  Sort value_sort_;
};

/// Π′(p,u,v) = Π(p, u∨v, u∧v). Throws SortError unless Π's value sort is
/// totally ordered.
PivotalFunction monotone_restrict(const PivotalFunction& pi);

/// Built-in family by name, with textual parameters:
///   ite | mle-affine | median | tnorm min <m> | tnorm lukasiewicz <m> |
///   tnorm <m> <m*m values> | qlp <|X| values> | lovasz2 <a0> <a1> <a2> <a12> <k>
/// `domain` and `codomain` give the sorts median and qlp work in.
PivotalFunction builtin_pivotal(std::string_view name, std::span<const std::string> params,
                                const Sort& domain = Sort::boolean(),
                                const Sort& codomain = Sort::boolean());

}  // namespace pivotal
