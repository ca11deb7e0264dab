#include "pivotal/extensions.hpp"

#include "pivotal/error.hpp"

#include <algorithm>

namespace pivotal {

namespace {

void check_arity(std::size_t arity) {
  if (arity == 0 || arity >= 8 * sizeof(SubsetMask)) throw DomainError("unsupported arity " + std::to_string(arity));
}

void check_unit_cube(std::span<const Rational> x, std::size_t arity) {
  if (x.size() != arity) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(arity));
  }
  for (const Rational& xi : x) {
    if (xi < 0 || xi > 1) throw DomainError("coordinate " + to_string(xi) + " outside [0,1]");
  }
}

// Evaluates f once per grid point, then checks f(x) = combine(x_k, f(x_k^1), f(x_k^0))
// using lookups only.
template <class Combine>
IdentityReport grid_identity(const std::function<Rational(const Point&)>& f, std::size_t arity, std::size_t d,
                             Combine&& combine) {
  check_arity(arity);
  if (d == 0) throw DomainError("grid denominator must be positive");
  const Sort grid = Sort::grid(d);
  const FunctionTable table = FunctionTable::tabulate(arity, grid, Sort::rational(), f);
  IdentityReport report;
  report.per_pivot.assign(arity, true);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t k = 1; k <= arity; ++k) {
      const std::size_t digit = table.digit(i, k);
      const std::size_t at0 = i - digit * table.stride(k);
      const std::size_t at1 = at0 + d * table.stride(k);
      if (combine(grid.element(digit), table.at(at1), table.at(at0)) != table.at(i)) {
        report.holds = false;
        report.per_pivot[k - 1] = false;
        if (!report.witness) report.witness.emplace(table.point_at(i), k);
      }
    }
  }
  return report;
}

Rational affine(const Rational& p, const Rational& u, const Rational& v) { return p * u + (1 - p) * v; }

}  // namespace

Point characteristic_vector(std::size_t arity, SubsetMask s) {
  Point x(arity, Value(0));
  for (std::size_t i = 0; i < arity; ++i) {
    if (s & (SubsetMask{1} << i)) x[i] = 1;
  }
  return x;
}

std::size_t vertex_index(const FunctionTable& f, SubsetMask s) {
  const std::size_t top = f.domain().size() - 1;
  std::size_t index = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (s & (SubsetMask{1} << i)) index += top * f.stride(i + 1);
  }
  return index;
}

MultilinearForm::MultilinearForm(std::size_t arity, std::vector<Rational> vertex_values)
    : arity_(arity), vertex_values_(std::move(vertex_values)) {
  check_arity(arity_);
  if (vertex_values_.size() != (std::size_t{1} << arity_)) throw DomainError("expected 2^n vertex values");
}

LovaszForm::LovaszForm(std::size_t arity, std::vector<Rational> mobius) : arity_(arity), mobius_(std::move(mobius)) {
  check_arity(arity_);
  if (mobius_.size() != (std::size_t{1} << arity_)) throw DomainError("expected 2^n Möbius coefficients");
}

std::vector<Rational> vertex_values(const FunctionTable& f) {
  if (!f.codomain().is_numeric()) throw SortError("vertex values need a numeric codomain, got " + f.codomain().name());
  check_arity(f.arity());
  std::vector<Rational> out;
  out.reserve(std::size_t{1} << f.arity());
  for (SubsetMask s = 0; s < (SubsetMask{1} << f.arity()); ++s) out.push_back(f.at(vertex_index(f, s)));
  return out;
}

MultilinearForm sop_form(const FunctionTable& f) { return MultilinearForm(f.arity(), vertex_values(f)); }

Rational mle_evaluate(const MultilinearForm& m, std::span<const Rational> x) {
  check_unit_cube(x, m.arity());
  std::vector<Rational> v = m.vertex_values();
  for (std::size_t i = m.arity(); i >= 1; --i) {
    const std::size_t half = std::size_t{1} << (i - 1);
    for (std::size_t s = 0; s < half; ++s) v[s] = affine(x[i - 1], v[s + half], v[s]);
  }
  return v[0];
}

Rational mle_partial(const MultilinearForm& m, std::size_t k, std::span<const Rational> x) {
  if (k == 0 || k > m.arity()) throw DomainError("argument " + std::to_string(k) + " out of range");
  Point hi(x.begin(), x.end());
  Point lo = hi;
  hi.at(k - 1) = 1;
  lo.at(k - 1) = 0;
  return mle_evaluate(m, hi) - mle_evaluate(m, lo);
}

std::vector<Rational> monomial_coefficients(const MultilinearForm& m) {
  return mobius(m.arity(), m.vertex_values()).coefficients();
}

IdentityReport check_mle_identity(const MultilinearForm& m, std::size_t grid_denominator) {
  return check_mle_identity([&](std::span<const Rational> x) { return mle_evaluate(m, x); }, m.arity(),
                            grid_denominator);
}

IdentityReport check_mle_identity(const Evaluator& f, std::size_t arity, std::size_t grid_denominator) {
  auto eval = [&](const Point& x) { return f(x); };
  // Both sides are multilinear, so the Boolean pass certifies the identity;
  // the grid pass is a confirming check that also catches non-multilinear evaluators.
  IdentityReport report = grid_identity(eval, arity, 1, affine);
  if (!report.holds) return report;
  return grid_identity(eval, arity, grid_denominator, affine);
}

IdentityReport check_monotone_mle_identity(const MultilinearForm& m, std::size_t grid_denominator) {
  return grid_identity([&](const Point& x) { return mle_evaluate(m, x); }, m.arity(), grid_denominator,
                       [](const Rational& p, const Rational& u, const Rational& v) {
                         return affine(p, std::max(u, v), std::min(u, v));
                       });
}

LovaszForm mobius(const FunctionTable& f) {
  const auto v = vertex_values(f);
  return mobius(f.arity(), v);
}

LovaszForm mobius(std::size_t arity, std::span<const Rational> vertex_values) {
  check_arity(arity);
  std::vector<Rational> a(vertex_values.begin(), vertex_values.end());
  if (a.size() != (std::size_t{1} << arity)) throw DomainError("expected 2^n vertex values");
  for (std::size_t i = 0; i < arity; ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask s = 0; s < a.size(); ++s) {
      if (s & bit) a[s] -= a[s ^ bit];
    }
  }
  return LovaszForm(arity, std::move(a));
}

std::vector<Rational> zeta(const LovaszForm& l) {
  std::vector<Rational> v = l.coefficients();
  for (std::size_t i = 0; i < l.arity(); ++i) {
    const SubsetMask bit = SubsetMask{1} << i;
    for (SubsetMask s = 0; s < v.size(); ++s) {
      if (s & bit) v[s] += v[s ^ bit];
    }
  }
  return v;
}

Rational lovasz_evaluate(const LovaszForm& l, std::span<const Rational> x) {
  check_unit_cube(x, l.arity());
  Rational sum = 0;
  for (SubsetMask s = 0; s < l.coefficients().size(); ++s) {
    if (l.coefficient(s) == 0) continue;
    Rational least = 1;
    for (std::size_t i = 0; i < l.arity(); ++i) {
      if ((s & (SubsetMask{1} << i)) && x[i] < least) least = x[i];
    }
    sum += l.coefficient(s) * least;
  }
  return sum;
}

std::pair<PivotalFunction, PivotalFunction> binary_lovasz_pivotals(const LovaszForm& l) {
  if (l.arity() != 2) throw DomainError("binary Lovász pivots need arity 2");
  const std::array<Rational, 4> a{l.coefficient(0), l.coefficient(1), l.coefficient(2), l.coefficient(3)};
  return {PivotalFunction::lovasz_binary(a, 1), PivotalFunction::lovasz_binary(a, 2)};
}

FunctionTable sample_on_grid(const LovaszForm& l, std::size_t denominator) {
  return FunctionTable::tabulate(l.arity(), Sort::grid(denominator), Sort::rational(),
                                 [&](const Point& x) { return lovasz_evaluate(l, x); });
}

FunctionTable sample_on_grid(const MultilinearForm& m, std::size_t denominator) {
  return FunctionTable::tabulate(m.arity(), Sort::grid(denominator), Sort::rational(),
                                 [&](const Point& x) { return mle_evaluate(m, x); });
}

std::optional<OrientationWitness> monotone_witness(const FunctionTable& f) {
  if (!f.domain().is_boolean()) throw SortError("orientation witnesses need a Boolean domain");
  const Sort& y = f.codomain();
  if (!y.is_totally_ordered()) throw SortError("orientation witnesses need a totally ordered codomain");
  OrientationWitness w;
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    bool isotone = true;
    bool antitone = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.digit(i, k) != 0) continue;
      const Value& lo = f.at(i);
      const Value& hi = f.at(i + f.stride(k));
      isotone = isotone && y.leq(lo, hi);
      antitone = antitone && y.leq(hi, lo);
    }
    if (isotone) {
      w.phis.push_back(Orientation::identity);
    } else if (antitone) {
      w.phis.push_back(Orientation::negation);
    } else {
      return std::nullopt;
    }
  }
  return w;
}

FunctionTable apply_orientation(const FunctionTable& f, const OrientationWitness& w) {
  if (!f.domain().is_boolean()) throw SortError("orientations act on Boolean domains");
  if (w.phis.size() != f.arity()) throw DomainError("one orientation per argument expected");
  return FunctionTable::tabulate(f.arity(), f.domain(), f.codomain(), [&](const Point& x) {
    Point y = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (w.phis[i] == Orientation::negation) y[i] = 1 - y[i];
    }
    return evaluate(f, y);
  });
}

std::vector<PivotalFunction> orientation_pivotals(const FunctionTable& f, const OrientationWitness& w) {
  if (w.phis.size() != f.arity()) throw DomainError("one orientation per argument expected");
  const Sort& y = f.codomain();
  // Bottom and top of the range stand in for 0 and 1 of the codomain: over R the
  // median only selects u or v when the pivot sits outside [v, u].
  Value lo = y.zero(), hi = y.one();
  if (y.is_numeric()) {
    const auto [mn, mx] = std::minmax_element(f.values().begin(), f.values().end());
    lo = *mn;
    hi = *mx;
  }
  std::vector<PivotalFunction> out;
  for (Orientation o : w.phis) {
    std::vector<Value> phi = o == Orientation::identity ? std::vector<Value>{lo, hi} : std::vector<Value>{hi, lo};
    out.push_back(PivotalFunction::qlp(FunctionTable(1, f.domain(), y, std::move(phi))));
  }
  return out;
}

}  // namespace pivotal
