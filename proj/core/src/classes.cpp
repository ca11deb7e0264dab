#include "pivotal/classes.hpp"

#include "pivotal/decomposition.hpp"
#include "pivotal/equivalence.hpp"
#include "pivotal/error.hpp"

#include <algorithm>
#include <array>

namespace pivotal {

namespace {

constexpr std::array<std::string_view, 4> unary_names{"bot", "top", "id", "neg"};

constexpr std::array<std::uint8_t, 16> class_bits{
    0b0000,  // (1)  empty
    0b1111,  // (2)  all
    0b0001,  // (3)  {bot}
    0b0010,  // (4)  {top}
    0b0100,  // (5)  {id}
    0b1000,  // (6)  {neg}
    0b0011,  // (7)  {bot,top}
    0b0101,  // (8)  {bot,id}
    0b1001,  // (9)  {bot,neg}
    0b0110,  // (10) {top,id}
    0b1010,  // (11) {top,neg}
    0b1100,  // (12) {id,neg}
    0b1101,  // (13) {bot,id,neg}
    0b1110,  // (14) {top,id,neg}
    0b0111,  // (15) {bot,top,id}
    0b1011,  // (16) {bot,top,neg}
};

constexpr std::array<std::string_view, 16> class_names{
    "empty",        "all",          "const0",       "const1",       "id",          "neg",
    "const",        "chi-top",      "chi-bot-or-0", "chi-bot-or-1", "chi-top-or-1", "parity-like",
    "cls13",        "cls14",        "nondecreasing", "nonincreasing",
};

void require_boolean(const FunctionTable& f) {
  if (!f.domain().is_boolean() || !f.codomain().is_boolean()) {
    throw SortError("expected a Boolean function, got " + f.domain().name() + "->" + f.codomain().name());
  }
}

void require_index(const FunctionTable& f, std::size_t j) {
  if (j == 0 || j > f.arity()) throw DomainError("argument " + std::to_string(j) + " out of range");
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// n-ary Boolean table with value 1 exactly at the points whose index is in `ones`.
FunctionTable boolean_with(std::size_t n, bool fill, std::initializer_list<std::size_t> flipped) {
  std::vector<int> bits(std::size_t{1} << n, fill ? 1 : 0);
  for (std::size_t i : flipped) bits[i] = fill ? 0 : 1;
  return FunctionTable::boolean(n, bits);
}

bool is_constant_value(const FunctionTable& f, int c) { return f.is_constant() && f.at(0) == c; }

// f ≡ chi_a (or its complement) with a = 1_m or 0_m, m = number of essential arguments.
bool equivalent_to_characteristic(const FunctionTable& f, bool at_top, bool complemented) {
  const std::size_t m = essential_arguments(f).size();
  if (m == 0) return false;
  const std::size_t a = at_top ? (std::size_t{1} << m) - 1 : 0;
  // Cheap necessary condition before the equivalence search: one exceptional value
  // per 2^(n-m) block.
  const std::size_t ones = static_cast<std::size_t>(std::count(f.values().begin(), f.values().end(), Value(1)));
  const std::size_t block = f.size() >> m;
  if (ones != (complemented ? f.size() - block : block)) return false;
  return is_equivalent(f, boolean_with(m, complemented, {a})).has_value();
}

bool equivalent_to_unary(const FunctionTable& f, Unary u) {
  const bool constant_target = u == Unary::bot || u == Unary::top;
  if (f.is_constant() != constant_target) return false;
  if (!constant_target && essential_arguments(f).size() != 1) return false;
  const auto b = [](int v) { return Value(v); };
  std::vector<Value> values;
  switch (u) {
    case Unary::bot: values = {b(0), b(0)}; break;
    case Unary::top: values = {b(1), b(1)}; break;
    case Unary::id: values = {b(0), b(1)}; break;
    case Unary::neg: values = {b(1), b(0)}; break;
  }
  return is_equivalent(f, FunctionTable(1, Sort::boolean(), Sort::boolean(), std::move(values))).has_value();
}

// Pointwise comparison of two Boolean tables, or against the complement of the second.
bool pointwise_geq(const FunctionTable& a, const FunctionTable& b, bool complement_b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Value rhs = complement_b ? Value(1 - b.at(i)) : b.at(i);
    if (a.at(i) < rhs) return false;
  }
  return true;
}

bool all_arguments(const FunctionTable& f, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t j = 1; j <= f.arity(); ++j) {
    if (!pred(j)) return false;
  }
  return true;
}

}  // namespace

Unary unary_from_cofactors(bool at_one, bool at_zero) {
  if (at_one && at_zero) return Unary::top;
  if (!at_one && !at_zero) return Unary::bot;
  return at_one ? Unary::id : Unary::neg;
}

VSet::VSet(std::initializer_list<Unary> members) {
  for (Unary u : members) insert(u);
}

std::string VSet::to_string() const {
  std::string out = "{";
  for (unsigned i = 0; i < 4; ++i) {
    if (!contains(static_cast<Unary>(i))) continue;
    if (out.size() > 1) out += ',';
    out += unary_names[i];
  }
  return out + "}";
}

VSet VSet::parse(std::string_view text) {
  std::string s = trim(text);
  if (const auto id = class_id_from_name(s)) return class_vset(*id);
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int id = std::stoi(s);
    if (id >= 1 && id <= um_class_count) return class_vset(id);
    throw ParseError("class number " + s + " outside 1..16");
  }
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  VSet v;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string item = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) {
      const auto it = std::find(unary_names.begin(), unary_names.end(), item);
      if (it == unary_names.end()) throw ParseError("unknown unary function '" + item + "' (expected bot, top, id or neg)", start);
      v.insert(static_cast<Unary>(it - unary_names.begin()));
    } else if (comma != std::string::npos) {
      throw ParseError("empty member in '" + std::string(text) + "'", start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string_view unary_name(Unary u) { return unary_names[static_cast<unsigned>(u)]; }

FunctionTable boolean_partial(const FunctionTable& f, std::size_t j) {
  require_boolean(f);
  require_index(f, j);
  std::vector<Value> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t flipped = f.digit(i, j) ? i - f.stride(j) : i + f.stride(j);
    values[i] = f.at(i) != f.at(flipped) ? 1 : 0;
  }
  return FunctionTable(f.arity(), f.domain(), f.codomain(), std::move(values));
}

SignedTable boolean_delta(const FunctionTable& f, std::size_t j) {
  require_boolean(f);
  require_index(f, j);
  SignedTable out{f.arity(), std::vector<int>(f.size())};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t lo = i - f.digit(i, j) * f.stride(j);
    out.values[i] = static_cast<int>(f.at(lo + f.stride(j)) - f.at(lo));
  }
  return out;
}

VSet minimal_um_class(const FunctionTable& f) {
  require_boolean(f);
  VSet v;
  if (f.is_constant()) {
    v.insert(f.at(0) == 1 ? Unary::top : Unary::bot);
    return v;
  }
  for (std::size_t k : essential_arguments(f)) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.digit(i, k) == 0) v.insert(unary_from_cofactors(f.at(i + f.stride(k)) == 1, f.at(i) == 1));
    }
  }
  return v;
}

bool um_membership(const FunctionTable& f, VSet v) { return minimal_um_class(f).subset_of(v); }

VSet class_vset(int class_id) {
  if (class_id < 1 || class_id > um_class_count) throw DomainError("class id " + std::to_string(class_id) + " outside 1..16");
  return VSet(class_bits[class_id - 1]);
}

std::string_view class_name(int class_id) {
  if (class_id < 1 || class_id > um_class_count) throw DomainError("class id " + std::to_string(class_id) + " outside 1..16");
  return class_names[class_id - 1];
}

std::optional<int> class_id_from_name(std::string_view name) {
  const auto it = std::find(class_names.begin(), class_names.end(), name);
  if (it == class_names.end()) return std::nullopt;
  return static_cast<int>(it - class_names.begin()) + 1;
}

int class_id_of(VSet v) {
  const auto it = std::find(class_bits.begin(), class_bits.end(), v.bits());
  return static_cast<int>(it - class_bits.begin()) + 1;
}

bool um_closed_form(const FunctionTable& f, int class_id) {
  require_boolean(f);
  auto partial_is = [&](std::size_t j, int c) { return is_constant_value(boolean_partial(f, j), c); };
  switch (class_id) {
    case 1:
      return false;
    case 2:
      return true;
    case 3:
      return equivalent_to_unary(f, Unary::bot);
    case 4:
      return equivalent_to_unary(f, Unary::top);
    case 5:
      return equivalent_to_unary(f, Unary::id);
    case 6:
      return equivalent_to_unary(f, Unary::neg);
    case 7:
      return equivalent_to_unary(f, Unary::bot) || equivalent_to_unary(f, Unary::top);
    case 8:  // chi_{1_n} (conjunctions) or constant 0
      return equivalent_to_characteristic(f, true, false) || equivalent_to_unary(f, Unary::bot);
    case 9:  // chi_{0_n} or constant 0
      return equivalent_to_characteristic(f, false, false) || equivalent_to_unary(f, Unary::bot);
    case 10:  // complement of chi_{0_n} (disjunctions) or constant 1
      return equivalent_to_characteristic(f, false, true) || equivalent_to_unary(f, Unary::top);
    case 11:  // complement of chi_{1_n} or constant 1
      return equivalent_to_characteristic(f, true, true) || equivalent_to_unary(f, Unary::top);
    case 12:
      return !f.is_constant() && all_arguments(f, [&](std::size_t j) { return partial_is(j, 1) || partial_is(j, 0); });
    case 13:
      return !is_constant_value(f, 1) && all_arguments(f, [&](std::size_t j) {
        return pointwise_geq(boolean_partial(f, j), f, false) || partial_is(j, 0);
      });
    case 14:
      return !is_constant_value(f, 0) && all_arguments(f, [&](std::size_t j) {
        return pointwise_geq(boolean_partial(f, j), f, true) || partial_is(j, 0);
      });
    case 15:
      return all_arguments(f, [&](std::size_t j) {
        const auto d = boolean_delta(f, j).values;
        return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
      });
    case 16:
      return all_arguments(f, [&](std::size_t j) {
        const auto d = boolean_delta(f, j).values;
        return std::all_of(d.begin(), d.end(), [](int x) { return x <= 0; });
      });
    default:
      throw DomainError("class id " + std::to_string(class_id) + " outside 1..16");
  }
}

VSet um_algebra(UmOp op, VSet v1, VSet v2) {
  switch (op) {
    case UmOp::meet:
      return VSet(v1.bits() & v2.bits());
    case UmOp::join:
      return VSet(v1.bits() | v2.bits());
    case UmOp::complement:
      return VSet(static_cast<std::uint8_t>(~v1.bits()));
  }
  return VSet::empty();
}

bool gamma_membership(const FunctionTable& f, const PivotalFunction& pi) {
  if (f.is_constant()) {
    const Value& c = f.at(0);
    for (std::size_t a = 0; a < f.domain().size(); ++a) {
      const auto w = pi.apply(f.domain().element(a), c, c);
      if (w && *w != c) return false;
    }
    return true;
  }
  return check_decomposition(drop_inessential(f).table, pi).holds;
}

}  // namespace pivotal
