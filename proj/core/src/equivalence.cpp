#include "pivotal/equivalence.hpp"

#include "pivotal/error.hpp"

#include <algorithm>

namespace pivotal {

namespace {

using Signature = std::vector<std::vector<Value>>;

// For each domain element a, the sorted values of f with x_k = a. Renaming
// the other arguments leaves this unchanged.
Signature argument_signature(const FunctionTable& f, std::size_t k) {
  Signature sig(f.domain().size());
  for (std::size_t i = 0; i < f.size(); ++i) sig[f.digit(i, k)].push_back(f.at(i));
  for (auto& values : sig) std::sort(values.begin(), values.end());
  return sig;
}

struct BijectionSearch {
  const FunctionTable& f;
  const FunctionTable& g;
  std::vector<Signature> f_sig;
  std::vector<Signature> g_sig;
  std::vector<std::size_t> tau;  // tau[j] = f argument read by g argument j+1
  std::vector<bool> used;

  bool run(std::size_t j) {
    const std::size_t m = f.arity();
    if (j == m) return remap(g, tau, m) == f;
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || f_sig[i] != g_sig[j]) continue;
      used[i] = true;
      tau[j] = i + 1;
      if (run(j + 1)) return true;
      used[i] = false;
    }
    return false;
  }
};

}  // namespace

bool verify_witness(const FunctionTable& f, const FunctionTable& g, const EquivalenceWitness& w) {
  if (w.sigma.size() != g.arity() || w.mu.size() != f.arity()) return false;
  return remap(g, w.sigma, f.arity()) == f && remap(f, w.mu, g.arity()) == g;
}

std::optional<EquivalenceWitness> is_equivalent(const FunctionTable& f, const FunctionTable& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw SortError("equivalence needs matching sorts, got " + f.domain().name() + "->" + f.codomain().name() +
                    " and " + g.domain().name() + "->" + g.codomain().name());
  }
  const ReducedFunction rf = drop_inessential(f);
  const ReducedFunction rg = drop_inessential(g);
  if (rf.kept.size() != rg.kept.size()) return std::nullopt;

  EquivalenceWitness w{std::vector<std::size_t>(g.arity(), 1), std::vector<std::size_t>(f.arity(), 1)};
  if (rf.kept.empty()) {
    if (f.at(0) != g.at(0)) return std::nullopt;
    return w;
  }

  const std::size_t m = rf.kept.size();
  BijectionSearch search{rf.table, rg.table, {}, {}, std::vector<std::size_t>(m, 0), std::vector<bool>(m, false)};
  for (std::size_t k = 1; k <= m; ++k) {
    search.f_sig.push_back(argument_signature(rf.table, k));
    search.g_sig.push_back(argument_signature(rg.table, k));
  }
  if (!search.run(0)) return std::nullopt;

  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = search.tau[j] - 1;
    w.sigma[rg.kept[j] - 1] = rf.kept[i];
    w.mu[rf.kept[i] - 1] = rg.kept[j];
  }
  return w;
}

}  // namespace pivotal
