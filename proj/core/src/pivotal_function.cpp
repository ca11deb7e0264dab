#include "pivotal/pivotal_function.hpp"

#include "pivotal/error.hpp"

#include <algorithm>

namespace pivotal {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_unit_interval(const Value& p) { return p >= 0 && p <= 1; }

Value lattice_median(const Sort& s, const Value& x, const Value& y, const Value& z) {
  return s.join(s.join(s.meet(x, y), s.meet(y, z)), s.meet(z, x));
}

std::size_t parse_size(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto value = std::stoul(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("expected ") + what + ", got '" + text + "'");
}

void validate_tnorm(const FunctionTable& t) {
  const Sort& s = t.domain();
  if (t.arity() != 2 || !(s == t.codomain()) || !s.is_finite() || !s.is_totally_ordered()) {
    throw ParameterError("a t-norm is a binary operation on a finite chain");
  }
  const std::size_t m = s.size();
  auto at = [&](std::size_t a, std::size_t b) { return *s.index_of(t.at(a * m + b)); };
  auto pair = [&](std::size_t a, std::size_t b) { return "(" + s.format(s.element(a)) + "," + s.format(s.element(b)) + ")"; };
  for (std::size_t x = 0; x < m; ++x) {
    if (at(m - 1, x) != x) throw ParameterError("t-norm axiom 'unit' fails: T" + pair(m - 1, x) + " != " + s.format(s.element(x)));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (at(a, b) != at(b, a)) throw ParameterError("t-norm axiom 'symmetric' fails at " + pair(a, b));
      if (b + 1 < m && at(a, b) > at(a, b + 1)) {
        throw ParameterError("t-norm axiom 'nondecreasing' fails between " + pair(a, b) + " and " + pair(a, b + 1));
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw ParameterError("t-norm axiom 'associative' fails at (" + s.format(s.element(a)) + "," +
                               s.format(s.element(b)) + "," + s.format(s.element(c)) + ")");
        }
      }
    }
  }
}

FunctionTable tnorm_table(std::size_t m, const std::function<Value(const Value&, const Value&)>& op) {
  const Sort s = Sort::chain(m);
  return FunctionTable::tabulate(2, s, s, [&](const Point& x) { return op(x[0], x[1]); });
}

}  // namespace

bool operator<(const PivotalFunction::Triple& a, const PivotalFunction::Triple& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

bool operator==(const PivotalFunction::Triple& a, const PivotalFunction::Triple& b) {
  return a.p == b.p && a.u == b.u && a.v == b.v;
}

PivotalFunction PivotalFunction::extensional(Sort pivot_sort, Sort value_sort, Table table) {
  for (const auto& [key, w] : table) {
    if (pivot_sort.is_finite() && !pivot_sort.contains(key.p)) {
      throw DomainError("pivot " + to_string(key.p) + " outside " + pivot_sort.name());
    }
    for (const Value* y : {&key.u, &key.v, &w}) {
      if (value_sort.is_finite() && !value_sort.contains(*y)) {
        throw DomainError("value " + to_string(*y) + " outside " + value_sort.name());
      }
    }
  }
  return PivotalFunction(Extensional{std::move(pivot_sort), std::move(table)}, std::move(value_sort));
}

PivotalFunction PivotalFunction::ite() { return PivotalFunction(Ite{}, Sort::boolean()); }

PivotalFunction PivotalFunction::mle_affine() { return PivotalFunction(MleAffine{}, Sort::rational()); }

PivotalFunction PivotalFunction::median(Sort lattice) {
  if (!lattice.is_finite()) throw SortError("the median family needs a finite lattice sort");
  Sort values = lattice;
  return PivotalFunction(Median{std::move(lattice)}, std::move(values));
}

PivotalFunction PivotalFunction::tnorm(FunctionTable t) {
  validate_tnorm(t);
  Sort values = t.codomain();
  return PivotalFunction(Tnorm{std::move(t)}, std::move(values));
}

PivotalFunction PivotalFunction::qlp(FunctionTable phi) {
  if (phi.arity() != 1) throw ParameterError("phi must be unary");
  const Sort& y = phi.codomain();
  const Value& at0 = phi.at(0);
  const Value& at1 = phi.at(phi.size() - 1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (lattice_median(y, phi.at(i), at1, at0) != phi.at(i)) {
      throw ParameterError("phi(x) != med(phi(x), phi(1), phi(0)) at x = " + phi.domain().format(phi.domain().element(i)));
    }
  }
  Sort values = y;
  return PivotalFunction(Qlp{std::move(phi)}, std::move(values));
}

PivotalFunction PivotalFunction::lovasz_binary(std::array<Rational, 4> coefficients, std::size_t argument) {
  if (argument != 1 && argument != 2) throw DomainError("binary Lovász pivots exist for arguments 1 and 2 only");
  return PivotalFunction(LovaszBinary{std::move(coefficients), argument}, Sort::rational());
}

std::optional<Value> PivotalFunction::apply(const Value& p, const Value& u, const Value& v) const {
  return std::visit(
      Overloaded{
          [&](const Extensional& e) -> std::optional<Value> {
            const auto it = e.table.find(Triple{p, u, v});
            if (it == e.table.end()) return std::nullopt;
            return it->second;
          },
          [&](const Ite&) -> std::optional<Value> {
            const Sort b = Sort::boolean();
            if (!b.contains(p) || !b.contains(u) || !b.contains(v)) return std::nullopt;
            return p == 1 ? u : v;
          },
          [&](const MleAffine&) -> std::optional<Value> {
            if (!in_unit_interval(p)) return std::nullopt;
            return Value(p * u + (1 - p) * v);
          },
          [&](const Median& m) -> std::optional<Value> {
            if (!m.lattice.contains(p) || !m.lattice.contains(u) || !m.lattice.contains(v)) return std::nullopt;
            return lattice_median(m.lattice, p, u, v);
          },
          [&](const Tnorm& t) -> std::optional<Value> {
            const Sort& s = t.t.domain();
            if (!s.contains(p) || !s.contains(u) || !s.contains(v)) return std::nullopt;
            return t.t.at(*s.index_of(p) * s.size() + *s.index_of(u));
          },
          [&](const Qlp& q) -> std::optional<Value> {
            const Sort& y = q.phi.codomain();
            const auto i = q.phi.domain().index_of(p);
            if (!i || (y.is_finite() && (!y.contains(u) || !y.contains(v)))) return std::nullopt;
            return lattice_median(y, q.phi.at(*i), u, v);
          },
          [&](const LovaszBinary& l) -> std::optional<Value> {
            if (!in_unit_interval(p)) return std::nullopt;
            const Rational& a0 = l.a[0];
            const Rational& own = l.argument == 1 ? l.a[1] : l.a[2];
            const Rational& other = l.argument == 1 ? l.a[2] : l.a[1];
            const Rational& a12 = l.a[3];
            if (other != 0) {
              const Rational y = (v - a0) / other;
              return Value(a0 + own * p + (v - a0) + a12 * std::min(p, y));
            }
            if (a12 != 0) {
              const Rational y = (u - a0 - own) / a12;
              return Value(a0 + own * p + a12 * std::min(p, y));
            }
            return Value(a0 + own * p);
          },
          [&](const Restricted& r) -> std::optional<Value> {
            if (value_sort_.is_finite() && (!value_sort_.contains(u) || !value_sort_.contains(v))) return std::nullopt;
            return r.inner->apply(p, value_sort_.join(u, v), value_sort_.meet(u, v));
          },
      },
      kind_);
}

Value PivotalFunction::operator()(const Value& p, const Value& u, const Value& v) const {
  auto w = apply(p, u, v);
  if (!w) {
    throw CoverageError(family() + " is undefined at (" + to_string(p) + "," + to_string(u) + "," + to_string(v) + ")");
  }
  return *std::move(w);
}

std::string PivotalFunction::family() const {
  return std::visit(Overloaded{
                        [](const Extensional&) -> std::string { return "extensional"; },
                        [](const Ite&) -> std::string { return "ite"; },
                        [](const MleAffine&) -> std::string { return "mle-affine"; },
                        [](const Median&) -> std::string { return "median"; },
                        [](const Tnorm&) -> std::string { return "tnorm"; },
                        [](const Qlp&) -> std::string { return "qlp"; },
                        [](const LovaszBinary&) -> std::string { return "lovasz2"; },
                        [](const Restricted& r) { return "restricted(" + r.inner->family() + ")"; },
                    },
                    kind_);
}

const PivotalFunction::Table* PivotalFunction::table() const {
  const auto* e = std::get_if<Extensional>(&kind_);
  return e ? &e->table : nullptr;
}

std::vector<std::string> PivotalFunction::builtin_spec() const {
  return std::visit(
      Overloaded{
          [](const Extensional&) -> std::vector<std::string> { throw Error("extensional pivotal functions have no builtin form"); },
          [](const Ite&) -> std::vector<std::string> { return {"ite"}; },
          [](const MleAffine&) -> std::vector<std::string> { return {"mle-affine"}; },
          [](const Median&) -> std::vector<std::string> { return {"median"}; },
          [](const Tnorm& t) -> std::vector<std::string> {
            std::vector<std::string> out{"tnorm", std::to_string(t.t.domain().size())};
            for (const Value& w : t.t.values()) out.push_back(to_string(w));
            return out;
          },
          [](const Qlp& q) -> std::vector<std::string> {
            std::vector<std::string> out{"qlp"};
            for (const Value& w : q.phi.values()) out.push_back(q.phi.codomain().format(w));
            return out;
          },
          [](const LovaszBinary& l) -> std::vector<std::string> {
            return {"lovasz2", to_string(l.a[0]), to_string(l.a[1]), to_string(l.a[2]), to_string(l.a[3]),
                    std::to_string(l.argument)};
          },
          [](const Restricted&) -> std::vector<std::string> { throw Error("restricted pivotal functions have no builtin form"); },
      },
      kind_);
}

PivotalFunction monotone_restrict(const PivotalFunction& pi) {
  if (!pi.value_sort().is_totally_ordered()) {
    throw SortError("monotone restriction needs a totally ordered codomain, got " + pi.value_sort().name());
  }
  return PivotalFunction(PivotalFunction::Restricted{std::make_shared<const PivotalFunction>(pi)}, pi.value_sort());
}

PivotalFunction builtin_pivotal(std::string_view name, std::span<const std::string> params, const Sort& domain,
                                const Sort& codomain) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw ParseError("builtin '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  if (name == "ite") {
    expect(0);
    return PivotalFunction::ite();
  }
  if (name == "mle-affine") {
    expect(0);
    return PivotalFunction::mle_affine();
  }
  if (name == "median") {
    expect(0);
    return PivotalFunction::median(codomain);
  }
  if (name == "tnorm") {
    if (params.size() == 2 && params[0] == "min") {
      return PivotalFunction::tnorm(tnorm_table(parse_size(params[1], "chain size"),
                                                [](const Value& a, const Value& b) { return std::min(a, b); }));
    }
    if (params.size() == 2 && params[0] == "lukasiewicz") {
      return PivotalFunction::tnorm(tnorm_table(parse_size(params[1], "chain size"), [](const Value& a, const Value& b) {
        return std::max(Value(0), Value(a + b - 1));
      }));
    }
    if (params.empty()) throw ParseError("tnorm needs 'min <m>', 'lukasiewicz <m>' or '<m> <values>'");
    const std::size_t m = parse_size(params[0], "chain size");
    const Sort s = Sort::chain(m);
    if (params.size() != 1 + m * m) throw ParseError("tnorm on a " + std::to_string(m) + "-chain needs " + std::to_string(m * m) + " values");
    std::vector<Value> values;
    for (std::size_t i = 1; i < params.size(); ++i) values.push_back(s.parse(params[i]));
    return PivotalFunction::tnorm(FunctionTable(2, s, s, std::move(values)));
  }
  if (name == "qlp") {
    expect(domain.size());
    std::vector<Value> values;
    for (const auto& token : params) values.push_back(codomain.parse(token));
    return PivotalFunction::qlp(FunctionTable(1, domain, codomain, std::move(values)));
  }
  if (name == "lovasz2") {
    expect(5);
    std::array<Rational, 4> a;
    for (std::size_t i = 0; i < 4; ++i) a[i] = parse_rational(params[i]);
    return PivotalFunction::lovasz_binary(a, parse_size(params[4], "argument 1 or 2"));
  }
  throw ParseError("unknown pivotal family '" + std::string(name) + "'");
}

}  // namespace pivotal
