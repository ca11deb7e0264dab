#pragma once

#include "pivotal/function_table.hpp"

#include <optional>
#include <vector>

namespace pivotal {

/// Maps sigma: [m] -> [n] and mu: [n] -> [m] with f = g_sigma and g = f_mu,
/// where f is n-ary and g is m-ary. Both store 1-based labels.
struct EquivalenceWitness {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> mu;
};

/// Pointwise check that `w` witnesses f ≡ g.
bool verify_witness(const FunctionTable& f, const FunctionTable& g, const EquivalenceWitness& w);

/// Decides f ≡ g (equal up to permuting arguments and adding, deleting or
/// identifying inessential ones). Both tables are reduced to their essential
/// arguments and a bijection between those is searched, pruned by a
/// permutation-invariant signature per argument. Throws SortError when the
/// sorts differ.
std::optional<EquivalenceWitness> is_equivalent(const FunctionTable& f, const FunctionTable& g);

}  // namespace pivotal
