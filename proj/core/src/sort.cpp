#include "pivotal/sort.hpp"

#include "pivotal/error.hpp"
#include "pivotal/lattice.hpp"

namespace pivotal {

namespace {

std::size_t lattice_index(const Value& v) { return static_cast<std::size_t>(boost::multiprecision::numerator(v)); }

}  // namespace

Sort Sort::chain(std::size_t m) {
  if (m < 2) throw SortError("a chain needs at least the two elements 0 and 1");
  return Sort(Kind::chain, m, nullptr);
}

Sort Sort::grid(std::size_t denominator) {
  if (denominator == 0) throw SortError("grid denominator must be positive");
  if (denominator == 1) return boolean();
  return Sort(Kind::grid, denominator + 1, nullptr);
}

Sort Sort::rational() { return Sort(Kind::rational, 0, nullptr); }

Sort Sort::lattice(std::shared_ptr<const FiniteLattice> l) {
  if (!l) throw SortError("null lattice");
  const std::size_t size = l->size();
  return Sort(Kind::lattice, size, std::move(l));
}

bool Sort::is_totally_ordered() const {
  return kind_ != Kind::lattice || lattice_->is_chain();
}

std::size_t Sort::size() const {
  if (kind_ == Kind::rational) throw SortError("the rational sort is infinite");
  return size_;
}

Value Sort::element(std::size_t i) const {
  if (i >= size()) throw DomainError("element index " + std::to_string(i) + " outside " + name());
  if (kind_ == Kind::lattice) return Value(i);
  return Value(static_cast<long long>(i), static_cast<long long>(size_ - 1));
}

std::optional<std::size_t> Sort::index_of(const Value& v) const {
  switch (kind_) {
    case Kind::rational:
      return std::nullopt;
    case Kind::lattice: {
      if (!is_integer(v) || v < 0 || v >= static_cast<long long>(size_)) return std::nullopt;
      return lattice_index(v);
    }
    case Kind::chain:
    case Kind::grid: {
      if (v < 0 || v > 1) return std::nullopt;
      const Value scaled = v * static_cast<long long>(size_ - 1);
      if (!is_integer(scaled)) return std::nullopt;
      return static_cast<std::size_t>(boost::multiprecision::numerator(scaled));
    }
  }
  return std::nullopt;
}

bool Sort::contains(const Value& v) const {
  return kind_ == Kind::rational || index_of(v).has_value();
}

Value Sort::zero() const {
  if (kind_ == Kind::lattice) return Value(lattice_->bottom());
  return Value(0);
}

Value Sort::one() const {
  if (kind_ == Kind::lattice) return Value(lattice_->top());
  return Value(1);
}

bool Sort::leq(const Value& a, const Value& b) const {
  if (kind_ == Kind::lattice) return lattice_->leq(lattice_index(a), lattice_index(b));
  return a <= b;
}

Value Sort::meet(const Value& a, const Value& b) const {
  if (kind_ == Kind::lattice) return Value(lattice_->meet(lattice_index(a), lattice_index(b)));
  return a < b ? a : b;
}

Value Sort::join(const Value& a, const Value& b) const {
  if (kind_ == Kind::lattice) return Value(lattice_->join(lattice_index(a), lattice_index(b)));
  return a < b ? b : a;
}

std::string Sort::format(const Value& v) const {
  if (kind_ == Kind::lattice) {
    const auto i = index_of(v);
    if (!i) throw DomainError(to_string(v) + " is not an element of " + name());
    return lattice_->name(*i);
  }
  return to_string(v);
}

Value Sort::parse(std::string_view token) const {
  if (kind_ == Kind::lattice) {
    const auto i = lattice_->index_of(token);
    if (!i) throw ParseError("unknown lattice element '" + std::string(token) + "'");
    return Value(*i);
  }
  Value v = parse_rational(token);
  if (!contains(v)) throw ParseError("'" + std::string(token) + "' is not an element of " + name());
  return v;
}

std::string Sort::name() const {
  switch (kind_) {
    case Kind::chain:
      return size_ == 2 ? "bool" : "chain(" + std::to_string(size_) + ")";
    case Kind::grid:
      return "grid(" + std::to_string(size_ - 1) + ")";
    case Kind::rational:
      return "rat";
    case Kind::lattice:
      return "lat(" + std::to_string(size_) + ")";
  }
  return "?";
}

bool operator==(const Sort& a, const Sort& b) {
  if (a.kind_ != b.kind_ || a.size_ != b.size_) return false;
  if (a.kind_ != Sort::Kind::lattice || a.lattice_ == b.lattice_) return true;
  const FiniteLattice& x = *a.lattice_;
  const FiniteLattice& y = *b.lattice_;
  if (x.bottom() != y.bottom() || x.top() != y.top()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.name(i) != y.name(i)) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x.leq(i, j) != y.leq(i, j)) return false;
    }
  }
  return true;
}

Value median(const Sort& s, const Value& x, const Value& y, const Value& z) {
  if (s.is_finite() && !(s.contains(x) && s.contains(y) && s.contains(z))) {
    throw DomainError("median argument outside " + s.name());
  }
  return s.join(s.join(s.meet(x, y), s.meet(y, z)), s.meet(z, x));
}

}  // namespace pivotal
