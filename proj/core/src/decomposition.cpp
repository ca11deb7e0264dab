#include "pivotal/decomposition.hpp"

#include "pivotal/error.hpp"

#include <map>

namespace pivotal {

namespace {

// Index of x_k^a for the point with index i, where a is given by its digit.
std::size_t with_digit(const FunctionTable& f, std::size_t i, std::size_t k, std::size_t digit) {
  return i - f.digit(i, k) * f.stride(k) + digit * f.stride(k);
}

template <class Visit>
void for_each_pivot(const FunctionTable& f, Visit&& visit) {
  const std::size_t top = f.domain().size() - 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 1; k <= f.arity(); ++k) {
      visit(i, k, f.at(with_digit(f, i, k, top)), f.at(with_digit(f, i, k, 0)));
    }
  }
}

std::string format_triple(const FunctionTable& f, const Value& p, const Value& u, const Value& v) {
  return "(" + f.domain().format(p) + "," + f.codomain().format(u) + "," + f.codomain().format(v) + ")";
}

DecompositionReport check_with(const FunctionTable& f, const std::function<const PivotalFunction&(std::size_t)>& pi_for) {
  DecompositionReport report;
  for_each_pivot(f, [&](std::size_t i, std::size_t k, const Value& u, const Value& v) {
    const Value p = f.domain().element(f.digit(i, k));
    const PivotalFunction& pi = pi_for(k);
    const auto w = pi.apply(p, u, v);
    if (!w) {
      throw CoverageError(pi.family() + " is undefined at " + format_triple(f, p, u, v) + ", a triple of X x R_f");
    }
    if (*w != f.at(i)) report.violations.push_back(Violation{f.point_at(i), k, f.at(i), *w});
  });
  report.holds = report.violations.empty();
  report.grid_verified = report.holds && f.domain().kind() == Sort::Kind::grid;
  return report;
}

// Larger value first when the codomain can compare the two values.
SynthesisConflict oriented(const FunctionTable& f, std::size_t a, std::size_t b, std::size_t k) {
  const Sort& y = f.codomain();
  if (y.is_totally_ordered() && y.leq(f.at(a), f.at(b))) std::swap(a, b);
  return SynthesisConflict{f.point_at(a), k, f.point_at(b), k, f.at(a), f.at(b)};
}

}  // namespace

CofactorRelation cofactor_relation(const FunctionTable& f) {
  CofactorRelation r;
  r.per_argument.resize(f.arity());
  for_each_pivot(f, [&](std::size_t, std::size_t k, const Value& u, const Value& v) {
    r.pairs.emplace(u, v);
    r.per_argument[k - 1].emplace(u, v);
  });
  return r;
}

DecompositionReport check_decomposition(const FunctionTable& f, const PivotalFunction& pi) {
  return check_with(f, [&](std::size_t) -> const PivotalFunction& { return pi; });
}

DecompositionReport check_componentwise(const FunctionTable& f, std::span<const PivotalFunction> pis) {
  if (pis.size() != f.arity()) {
    throw DomainError("expected " + std::to_string(f.arity()) + " pivotal functions, got " + std::to_string(pis.size()));
  }
  return check_with(f, [&](std::size_t k) -> const PivotalFunction& { return pis[k - 1]; });
}

SynthesisResult synthesize_pivotal(const FunctionTable& f) {
  struct Entry {
    std::size_t index;
    std::size_t pivot;
  };
  std::map<PivotalFunction::Triple, Entry> seen;
  SynthesisResult result;
  for_each_pivot(f, [&](std::size_t i, std::size_t k, const Value& u, const Value& v) {
    if (result.conflict) return;
    PivotalFunction::Triple key{f.domain().element(f.digit(i, k)), u, v};
    const auto [it, fresh] = seen.try_emplace(std::move(key), Entry{i, k});
    if (!fresh && f.at(it->second.index) != f.at(i)) {
      result.conflict = SynthesisConflict{f.point_at(it->second.index), it->second.pivot, f.point_at(i), k,
                                          f.at(it->second.index), f.at(i)};
    }
  });
  if (result.conflict) return result;
  PivotalFunction::Table table;
  for (const auto& [key, entry] : seen) table.emplace(key, f.at(entry.index));
  result.pi = PivotalFunction::extensional(f.domain(), f.codomain(), std::move(table));
  return result;
}

ComponentwiseResult synthesize_componentwise(const FunctionTable& f) {
  ComponentwiseResult result;
  std::vector<PivotalFunction> pis;
  const std::size_t top = f.domain().size() - 1;
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    // Key groups in order of first appearance.
    std::map<PivotalFunction::Triple, std::size_t> group_of;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < f.size(); ++i) {
      PivotalFunction::Triple key{f.domain().element(f.digit(i, k)), f.at(with_digit(f, i, k, top)),
                                  f.at(with_digit(f, i, k, 0))};
      const auto [it, fresh] = group_of.try_emplace(std::move(key), groups.size());
      if (fresh) groups.emplace_back();
      auto& members = groups[it->second];
      members.push_back(i);
      if (!result.conflict && f.at(members.front()) != f.at(i)) {
        result.conflict = SynthesisConflict{f.point_at(members.front()), k, f.point_at(i), k, f.at(members.front()), f.at(i)};
      }
    }
    if (result.conflict) {
      for (const auto& members : groups) {
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (f.at(members[a]) != f.at(members[b])) result.all_conflicts.push_back(oriented(f, members[a], members[b], k));
          }
        }
      }
      return result;
    }
    PivotalFunction::Table table;
    for (const auto& [key, g] : group_of) table.emplace(key, f.at(groups[g].front()));
    pis.push_back(PivotalFunction::extensional(f.domain(), f.codomain(), std::move(table)));
  }
  result.pis = std::move(pis);
  return result;
}

}  // namespace pivotal
