#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/pivotal_function.hpp"

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace pivotal {

using ValuePair = std::pair<Value, Value>;

/// R_f = {(f(x_k^1), f(x_k^0))} over all points and pivots, together with the
/// per-argument relations R_f^k.
struct CofactorRelation {
  std::set<ValuePair> pairs;
  std::vector<std::set<ValuePair>> per_argument;
};

CofactorRelation cofactor_relation(const FunctionTable& f);

struct Violation {
  Point point;
  std::size_t pivot;
  Value expected;  // f(x)
  Value actual;    // Π(x_k, f(x_k^1), f(x_k^0))
};

struct DecompositionReport {
  bool holds = true;
  /// Set when the check passed on a sampled grid of [0,1] only.
  bool grid_verified = false;
  std::vector<Violation> violations;
};

/// Checks f(x) = Π(x_k, f(x_k^1), f(x_k^0)) at every point and pivot.
/// Throws CoverageError when Π is undefined somewhere on X × R_f.
DecompositionReport check_decomposition(const FunctionTable& f, const PivotalFunction& pi);

/// Componentwise variant with one Π_k per argument, each required on X × R_f^k.
DecompositionReport check_componentwise(const FunctionTable& f, std::span<const PivotalFunction> pis);

/// Two (point, pivot) pairs sharing the key (x_k, f(x_k^1), f(x_k^0)) but
/// carrying different values of f.
struct SynthesisConflict {
  Point first;
  std::size_t first_pivot;
  Point second;
  std::size_t second_pivot;
  Value first_value;
  Value second_value;
};

struct SynthesisResult {
  std::optional<PivotalFunction> pi;
  /// Set exactly when `pi` is empty; the earliest conflict in scan order
  /// (points in index order, pivots ascending for each point).
  std::optional<SynthesisConflict> conflict;
};

/// Builds the extensional Π on X × R_f by reading T[(x_k, f(x_k^1), f(x_k^0))] := f(x).
SynthesisResult synthesize_pivotal(const FunctionTable& f);

struct ComponentwiseResult {
  std::optional<std::vector<PivotalFunction>> pis;
  /// First failing pivot, scanned in ascending order; for that pivot the
  /// first point whose value disagrees with the earliest point sharing its key.
  std::optional<SynthesisConflict> conflict;
  /// Every conflicting pair at the failing pivot, oriented so that the first
  /// point carries the larger value (by the codomain's total order when it
  /// has one, else by index order), listed by key group in scan order.
  std::vector<SynthesisConflict> all_conflicts;
};

/// Per-argument extensional construction of (Π_1, ..., Π_n).
ComponentwiseResult synthesize_componentwise(const FunctionTable& f);

}  // namespace pivotal
