#include "pivotal/function_table.hpp"

#include "pivotal/error.hpp"

#include <algorithm>
#include <limits>

namespace pivotal {

std::size_t point_count(std::size_t domain_size, std::size_t arity) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / domain_size) {
      throw DomainError("table of arity " + std::to_string(arity) + " is too large");
    }
    count *= domain_size;
  }
  return count;
}

FunctionTable::FunctionTable(std::size_t arity, Sort domain, Sort codomain, std::vector<Value> values)
    : arity_(arity), domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (arity_ == 0) throw DomainError("function tables need arity at least 1");
  if (!domain_.is_finite()) throw SortError("the domain sort must be finite");
  const std::size_t base = domain_.size();
  if (values_.size() != point_count(base, arity_)) {
    throw DomainError("expected " + std::to_string(point_count(base, arity_)) + " values, got " +
                      std::to_string(values_.size()));
  }
  for (const Value& v : values_) {
    if (!codomain_.contains(v)) throw DomainError(to_string(v) + " is not in the codomain " + codomain_.name());
  }
  strides_.assign(arity_, 1);
  for (std::size_t k = arity_; k-- > 1;) strides_[k - 1] = strides_[k] * base;
}

FunctionTable FunctionTable::tabulate(std::size_t arity, Sort domain, Sort codomain,
                                      const std::function<Value(const Point&)>& fn) {
  if (arity == 0) throw DomainError("function tables need arity at least 1");
  const std::size_t base = domain.size();
  const std::size_t count = point_count(base, arity);
  std::vector<Value> elements;
  elements.reserve(base);
  for (std::size_t i = 0; i < base; ++i) elements.push_back(domain.element(i));

  std::vector<Value> values;
  values.reserve(count);
  std::vector<std::size_t> digits(arity, 0);
  Point x(arity, elements[0]);
  for (std::size_t index = 0; index < count; ++index) {
    values.push_back(fn(x));
    for (std::size_t k = arity; k-- > 0;) {
      if (++digits[k] < base) {
        x[k] = elements[digits[k]];
        break;
      }
      digits[k] = 0;
      x[k] = elements[0];
    }
  }
  return FunctionTable(arity, std::move(domain), std::move(codomain), std::move(values));
}

FunctionTable FunctionTable::constant(std::size_t arity, Sort domain, Sort codomain, Value c) {
  const std::size_t count = point_count(domain.size(), arity);
  return FunctionTable(arity, std::move(domain), std::move(codomain), std::vector<Value>(count, c));
}

FunctionTable FunctionTable::boolean(std::size_t arity, std::span<const int> bits) {
  std::vector<Value> values;
  values.reserve(bits.size());
  for (int b : bits) values.emplace_back(b);
  return FunctionTable(arity, Sort::boolean(), Sort::boolean(), std::move(values));
}

FunctionTable FunctionTable::boolean_from_mask(std::size_t arity, unsigned long long mask) {
  const std::size_t count = point_count(2, arity);
  std::vector<Value> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) values.emplace_back(static_cast<int>((mask >> i) & 1ULL));
  return FunctionTable(arity, Sort::boolean(), Sort::boolean(), std::move(values));
}

std::size_t FunctionTable::index_of(const Point& x) const {
  if (x.size() != arity_) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, function arity is " +
                      std::to_string(arity_));
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < arity_; ++k) {
    const auto d = domain_.index_of(x[k]);
    if (!d) throw DomainError("coordinate " + std::to_string(k + 1) + " = " + to_string(x[k]) + " is outside " + domain_.name());
    index += *d * strides_[k];
  }
  return index;
}

Point FunctionTable::point_at(std::size_t index) const {
  Point x;
  x.reserve(arity_);
  for (std::size_t k = 1; k <= arity_; ++k) x.push_back(domain_.element(digit(index, k)));
  return x;
}

std::size_t FunctionTable::digit(std::size_t index, std::size_t k) const {
  return (index / strides_[k - 1]) % domain_.size();
}

bool FunctionTable::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](const Value& v) { return v == values_.front(); });
}

bool operator==(const FunctionTable& a, const FunctionTable& b) {
  return a.arity_ == b.arity_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.values_ == b.values_;
}

Value evaluate(const FunctionTable& f, const Point& x) { return f.at(f.index_of(x)); }

Point substitute(const Point& x, std::size_t k, const Value& a) {
  if (k < 1 || k > x.size()) {
    throw DomainError("argument " + std::to_string(k) + " outside [1, " + std::to_string(x.size()) + "]");
  }
  Point y = x;
  y[k - 1] = a;
  return y;
}

namespace {

void check_label(const FunctionTable& f, std::size_t k) {
  if (k < 1 || k > f.arity()) {
    throw DomainError("argument " + std::to_string(k) + " outside [1, " + std::to_string(f.arity()) + "]");
  }
}

std::size_t element_index(const FunctionTable& f, const Value& a) {
  const auto d = f.domain().index_of(a);
  if (!d) throw DomainError(to_string(a) + " is outside " + f.domain().name());
  return *d;
}

}  // namespace

FunctionTable section(const FunctionTable& f, const IndexSet& s, const Point& a) {
  if (s.empty()) throw DomainError("section over an empty argument set");
  if (a.size() != f.arity()) throw DomainError("anchor point arity differs from the function arity");
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_label(f, s[i]);
    if (i && s[i] <= s[i - 1]) throw DomainError("section labels must be strictly increasing");
  }
  // Base index of the anchor with every coordinate in S zeroed.
  std::size_t base_index = 0;
  std::size_t pos = 0;
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    const std::size_t d = element_index(f, a[k - 1]);
    if (pos < s.size() && s[pos] == k) {
      ++pos;
      continue;
    }
    base_index += d * f.stride(k);
  }
  const std::size_t base = f.domain().size();
  const std::size_t m = s.size();
  const std::size_t count = point_count(base, m);
  std::vector<Value> values;
  values.reserve(count);
  std::vector<std::size_t> digits(m, 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t index = base_index;
    for (std::size_t j = 0; j < m; ++j) index += digits[j] * f.stride(s[j]);
    values.push_back(f.at(index));
    for (std::size_t j = m; j-- > 0;) {
      if (++digits[j] < base) break;
      digits[j] = 0;
    }
  }
  return FunctionTable(m, f.domain(), f.codomain(), std::move(values));
}

FunctionTable unary_section(const FunctionTable& f, std::size_t k, const Point& a) {
  return section(f, IndexSet{k}, a);
}

FunctionTable cofactor(const FunctionTable& f, std::size_t k, const Value& a) {
  check_label(f, k);
  const std::size_t d = element_index(f, a);
  if (f.arity() == 1) return FunctionTable::constant(1, f.domain(), f.codomain(), f.at(d));
  IndexSet rest;
  for (std::size_t i = 1; i <= f.arity(); ++i) {
    if (i != k) rest.push_back(i);
  }
  Point anchor(f.arity(), f.domain().zero());
  anchor[k - 1] = a;
  return section(f, rest, anchor);
}

IndexSet essential_arguments(const FunctionTable& f) {
  IndexSet out;
  const std::size_t base = f.domain().size();
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    const std::size_t stride = f.stride(k);
    bool essential = false;
    for (std::size_t i = 0; i < f.size() && !essential; ++i) {
      if (f.digit(i, k) != 0) continue;
      for (std::size_t d = 1; d < base; ++d) {
        if (f.at(i + d * stride) != f.at(i)) {
          essential = true;
          break;
        }
      }
    }
    if (essential) out.push_back(k);
  }
  return out;
}

FunctionTable remap(const FunctionTable& f, std::span<const std::size_t> sigma, std::size_t m) {
  if (sigma.size() != f.arity()) throw DomainError("sigma must be defined on every argument of f");
  if (m == 0) throw DomainError("remap target arity must be positive");
  for (std::size_t s : sigma) {
    if (s < 1 || s > m) throw DomainError("sigma value " + std::to_string(s) + " outside [1, " + std::to_string(m) + "]");
  }
  const std::size_t base = f.domain().size();
  const std::size_t count = point_count(base, m);
  std::vector<Value> values;
  values.reserve(count);
  std::vector<std::size_t> digits(m, 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < f.arity(); ++j) index += digits[sigma[j] - 1] * f.stride(j + 1);
    values.push_back(f.at(index));
    for (std::size_t j = m; j-- > 0;) {
      if (++digits[j] < base) break;
      digits[j] = 0;
    }
  }
  return FunctionTable(m, f.domain(), f.codomain(), std::move(values));
}

ReducedFunction drop_inessential(const FunctionTable& f) {
  IndexSet kept = essential_arguments(f);
  if (kept.empty()) {
    return {FunctionTable::constant(1, f.domain(), f.codomain(), f.at(0)), {}};
  }
  if (kept.size() == f.arity()) return {f, std::move(kept)};
  Point anchor(f.arity(), f.domain().zero());
  return {section(f, kept, anchor), std::move(kept)};
}

}  // namespace pivotal
