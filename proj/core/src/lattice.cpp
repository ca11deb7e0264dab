#include "pivotal/lattice.hpp"

#include "pivotal/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pivotal {

namespace {

// Greatest element of `candidates` under `below`, if one exists.
std::optional<std::size_t> greatest(const std::vector<std::size_t>& candidates,
                                    const std::function<bool(std::size_t, std::size_t)>& below) {
  for (std::size_t c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(), [&](std::size_t o) { return below(o, c); })) return c;
  }
  return std::nullopt;
}

Value med(const Sort& s, const Value& x, const Value& y, const Value& z) {
  return s.join(s.join(s.meet(x, y), s.meet(y, z)), s.meet(z, x));
}

}  // namespace

FiniteLattice FiniteLattice::validate(const RawLattice& input, std::size_t max_size) {
  const std::size_t n = input.names.size();
  if (n < 2) throw LatticeError("bounded", "a lattice needs distinct bottom and top elements");
  if (n > max_size) {
    throw LatticeError("size", "lattice has " + std::to_string(n) + " elements, cap is " + std::to_string(max_size));
  }
  {
    std::set<std::string> seen;
    for (const auto& name : input.names) {
      if (!seen.insert(name).second) throw LatticeError("names", "duplicate element name '" + name + "'");
    }
    for (const auto* name : {&input.bottom, &input.top}) {
      if (!seen.count(*name)) throw LatticeError("names", "unknown element '" + *name + "'");
    }
  }
  if (input.bottom == input.top) throw LatticeError("bounded", "bottom and top must differ");

  // Bottom first and top last, so element indices follow the sort convention.
  RawLattice raw = input;
  raw.names.clear();
  raw.names.push_back(input.bottom);
  for (const auto& name : input.names) {
    if (name != input.bottom && name != input.top) raw.names.push_back(name);
  }
  raw.names.push_back(input.top);

  FiniteLattice l;
  l.names_ = raw.names;
  auto lookup = [&](const std::string& name) {
    const auto i = l.index_of(name);
    if (!i) throw LatticeError("names", "unknown element '" + name + "'");
    return *i;
  };

  l.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) l.leq_[i * n + i] = 1;
  for (const auto& [a, b] : raw.leq) l.leq_[lookup(a) * n + lookup(b)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = 1;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l.leq(i, j) && l.leq(j, i)) {
        throw LatticeError("poset", "not a poset: " + l.names_[i] + " <= " + l.names_[j] + " <= " + l.names_[i]);
      }
    }
  }

  l.bottom_ = lookup(raw.bottom);
  l.top_ = lookup(raw.top);
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.leq(l.bottom_, i)) {
      throw LatticeError("bounded", "unbounded: bottom " + raw.bottom + " is not below " + l.names_[i]);
    }
    if (!l.leq(i, l.top_)) {
      throw LatticeError("bounded", "unbounded: top " + raw.top + " is not above " + l.names_[i]);
    }
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> lower;
      std::vector<std::size_t> upper;
      for (std::size_t c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) lower.push_back(c);
        if (l.leq(a, c) && l.leq(b, c)) upper.push_back(c);
      }
      const auto m = greatest(lower, [&](std::size_t x, std::size_t y) { return l.leq(x, y); });
      if (!m) throw LatticeError("lattice", "missing meet of " + l.names_[a] + " and " + l.names_[b]);
      const auto j = greatest(upper, [&](std::size_t x, std::size_t y) { return l.leq(y, x); });
      if (!j) throw LatticeError("lattice", "missing join of " + l.names_[a] + " and " + l.names_[b]);
      l.meet_[a * n + b] = *m;
      l.join_[a * n + b] = *j;
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          throw LatticeError("distributive", "non-distributive: x∧(y∨z) != (x∧y)∨(x∧z) at (x,y,z) = (" +
                                                 l.names_[x] + "," + l.names_[y] + "," + l.names_[z] + ")");
        }
      }
    }
  }
  return l;
}

FiniteLattice FiniteLattice::chain(std::size_t m) {
  RawLattice raw;
  for (std::size_t i = 0; i < m; ++i) raw.names.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < m; ++i) raw.leq.emplace_back(raw.names[i], raw.names[i + 1]);
  raw.bottom = raw.names.front();
  raw.top = raw.names.back();
  return validate(raw, std::max(m, default_lattice_cap));
}

std::optional<std::size_t> FiniteLattice::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool FiniteLattice::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

Sort make_lattice_sort(const RawLattice& raw, std::size_t max_size) {
  return Sort::lattice(std::make_shared<const FiniteLattice>(FiniteLattice::validate(raw, max_size)));
}

LatticePolynomial::LatticePolynomial(Sort lattice, std::size_t arity, std::vector<Value> coefficients)
    : sort_(std::move(lattice)), arity_(arity), coefficients_(std::move(coefficients)) {
  if (!sort_.is_finite()) throw SortError("lattice polynomials need a finite lattice sort");
  if (arity_ == 0 || arity_ >= 8 * sizeof(unsigned)) throw DomainError("unsupported polynomial arity");
  if (coefficients_.size() != (std::size_t{1} << arity_)) {
    throw ParameterError("expected one coefficient per subset of [" + std::to_string(arity_) + "]");
  }
  for (const Value& c : coefficients_) {
    if (!sort_.contains(c)) throw DomainError("coefficient " + to_string(c) + " outside " + sort_.name());
  }
  for (unsigned s = 0; s < coefficients_.size(); ++s) {
    for (std::size_t i = 0; i < arity_; ++i) {
      const unsigned t = s | (1U << i);
      if (t != s && !sort_.leq(coefficients_[s], coefficients_[t])) {
        throw ParameterError("coefficient map is not order-preserving at S = " + std::to_string(s) +
                             ", T = " + std::to_string(t));
      }
    }
  }
}

Value lp_evaluate(const LatticePolynomial& p, const Point& x) {
  if (x.size() != p.arity()) throw DomainError("point arity differs from the polynomial arity");
  const Sort& s = p.sort();
  for (const Value& xi : x) {
    if (!s.contains(xi)) throw DomainError(to_string(xi) + " is outside " + s.name());
  }
  Value result = s.zero();
  for (unsigned mask = 0; mask < p.coefficients().size(); ++mask) {
    Value term = p.coefficient(mask);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (mask & (1U << i)) term = s.meet(term, x[i]);
    }
    result = s.join(result, term);
  }
  return result;
}

FunctionTable tabulate(const LatticePolynomial& p) {
  return FunctionTable::tabulate(p.arity(), p.sort(), p.sort(), [&](const Point& x) { return lp_evaluate(p, x); });
}

std::optional<LatticePolynomial> is_lattice_polynomial(const FunctionTable& f) {
  if (!(f.domain() == f.codomain())) {
    throw SortError("lattice polynomials map a lattice to itself; got " + f.domain().name() + "->" + f.codomain().name());
  }
  if (f.arity() >= 8 * sizeof(unsigned)) throw DomainError("arity too large");
  const Sort& s = f.domain();
  const std::size_t top = s.size() - 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 1; k <= f.arity(); ++k) {
      const std::size_t d = f.digit(i, k);
      const std::size_t at0 = i - d * f.stride(k);
      const std::size_t at1 = at0 + top * f.stride(k);
      if (med(s, s.element(d), f.at(at1), f.at(at0)) != f.at(i)) return std::nullopt;
    }
  }
  std::vector<Value> coefficients;
  const unsigned subsets = 1U << f.arity();
  for (unsigned mask = 0; mask < subsets; ++mask) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (mask & (1U << i)) index += top * f.stride(i + 1);
    }
    coefficients.push_back(f.at(index));
  }
  return LatticePolynomial(s, f.arity(), std::move(coefficients));
}

bool is_sugeno(const LatticePolynomial& p) {
  const Sort& s = p.sort();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Value x = s.element(i);
    if (lp_evaluate(p, Point(p.arity(), x)) != x) return false;
  }
  return true;
}

QlpReport qlp_check(const FunctionTable& f, std::span<const FunctionTable> phis) {
  if (phis.size() != f.arity()) throw DomainError("need one phi per argument");
  const Sort& y = f.codomain();
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const FunctionTable& phi = phis[k];
    if (phi.arity() != 1 || !(phi.domain() == f.domain()) || !(phi.codomain() == y)) {
      throw SortError("phi_" + std::to_string(k + 1) + " must be a unary map " + f.domain().name() + "->" + y.name());
    }
    const Value& at0 = phi.at(0);
    const Value& at1 = phi.at(phi.size() - 1);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (med(y, phi.at(i), at1, at0) != phi.at(i)) {
        throw ParameterError("phi_" + std::to_string(k + 1) + "(x) != med(phi(x), phi(1), phi(0)) at x = " +
                             f.domain().format(f.domain().element(i)));
      }
    }
  }
  QlpReport report;
  const std::size_t top = f.domain().size() - 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t k = 1; k <= f.arity(); ++k) {
      const std::size_t d = f.digit(i, k);
      const std::size_t at0 = i - d * f.stride(k);
      const std::size_t at1 = at0 + top * f.stride(k);
      if (med(y, phis[k - 1].at(d), f.at(at1), f.at(at0)) != f.at(i)) {
        report.holds = false;
        report.witness.emplace(f.point_at(i), k);
        return report;
      }
    }
  }
  return report;
}

QlpReport qlp_check_diagonal(const FunctionTable& f) {
  std::vector<Value> diagonal;
  for (std::size_t d = 0; d < f.domain().size(); ++d) diagonal.push_back(evaluate(f, Point(f.arity(), f.domain().element(d))));
  const FunctionTable phi(1, f.domain(), f.codomain(), std::move(diagonal));
  const std::vector<FunctionTable> phis(f.arity(), phi);
  return qlp_check(f, phis);
}

}  // namespace pivotal
