#include "pivotal/diagram.hpp"

#include "pivotal/error.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace pivotal {

namespace {

std::string mask_text(std::size_t arity, unsigned mask) {
  std::string s = "(";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i) s += ',';
    s += (mask >> i) & 1U ? '1' : '0';
  }
  return s + ")";
}

struct Builder {
  const std::vector<Value>& vertices;
  const std::vector<std::size_t>& order;
  std::vector<DiagramNode>& nodes;
  std::map<Value, std::size_t> terminals;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> unique;

  std::size_t make(std::size_t level, unsigned mask) {
    if (level == order.size()) {
      const Value& w = vertices[mask];
      const auto [it, fresh] = terminals.try_emplace(w, nodes.size());
      if (fresh) nodes.push_back(DiagramNode{true, 0, 0, 0, w});
      return it->second;
    }
    const std::size_t var = order[level];
    const std::size_t lo = make(level + 1, mask);
    const std::size_t hi = make(level + 1, mask | (1U << (var - 1)));
    if (lo == hi) return lo;
    const auto [it, fresh] = unique.try_emplace(std::make_tuple(var, lo, hi), nodes.size());
    if (fresh) nodes.push_back(DiagramNode{false, var, lo, hi, Value(0)});
    return it->second;
  }
};

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::shannon:
      return "shannon";
    case Rule::median:
      return "median";
    case Rule::mle_affine:
      return "mle-affine";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  if (name == "shannon") return Rule::shannon;
  if (name == "median") return Rule::median;
  if (name == "mle" || name == "mle-affine") return Rule::mle_affine;
  throw ParseError("unknown rule '" + std::string(name) + "' (expected shannon, median or mle)");
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.rule_ != b.rule_ || a.arity_ != b.arity_ || a.order_ != b.order_ || !(a.value_sort_ == b.value_sort_) ||
      a.nodes_.size() != b.nodes_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const DiagramNode& x = a.nodes_[i];
    const DiagramNode& y = b.nodes_[i];
    if (x.terminal != y.terminal) return false;
    if (x.terminal ? x.value != y.value : (x.variable != y.variable || x.lo != y.lo || x.hi != y.hi)) return false;
  }
  return true;
}

Diagram build(const FunctionTable& f, Rule rule, std::vector<std::size_t> order) {
  const std::size_t n = f.arity();
  if (n >= 8 * sizeof(unsigned)) throw DomainError("arity too large for a diagram");
  if (order.empty()) {
    for (std::size_t i = 1; i <= n; ++i) order.push_back(i);
  }
  {
    std::vector<bool> seen(n + 1, false);
    if (order.size() != n) throw DomainError("variable order must list each of the " + std::to_string(n) + " variables once");
    for (std::size_t v : order) {
      if (v == 0 || v > n || seen[v]) throw DomainError("variable order must be a permutation of 1.." + std::to_string(n));
      seen[v] = true;
    }
  }

  const Sort& y = f.codomain();
  const std::size_t top = f.domain().size() - 1;
  std::vector<Value> vertices;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) index += top * f.stride(i + 1);
    }
    vertices.push_back(f.at(index));
  }

  if (rule == Rule::mle_affine && !y.is_numeric()) {
    throw SortError("the mle-affine rule needs a numeric codomain, got " + y.name());
  }
  if (rule == Rule::median) {
    if (!y.is_finite()) {
      for (unsigned mask = 0; mask < vertices.size(); ++mask) {
        if (vertices[mask] != 0 && vertices[mask] != 1) {
          throw SortError("the median rule needs a lattice codomain or 0/1 values; f" + mask_text(n, mask) + " = " +
                          to_string(vertices[mask]));
        }
      }
    }
    for (unsigned mask = 0; mask < vertices.size(); ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        const unsigned up = mask | (1U << i);
        if (up != mask && !y.leq(vertices[mask], vertices[up])) {
          throw DomainError("the median rule needs nondecreasing vertex data: f" + mask_text(n, mask) + " = " +
                            y.format(vertices[mask]) + " is not below f" + mask_text(n, up) + " = " +
                            y.format(vertices[up]));
        }
      }
    }
  }

  Diagram d;
  d.rule_ = rule;
  d.arity_ = n;
  d.order_ = std::move(order);
  d.value_sort_ = y;
  Builder b{vertices, d.order_, d.nodes_, {}, {}};
  b.make(0, 0);
  return d;
}

Value dd_evaluate(const Diagram& d, const Point& x) {
  if (x.size() != d.arity()) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, diagram arity is " + std::to_string(d.arity()));
  }
  const Sort& y = d.value_sort();
  for (const Value& xi : x) {
    const bool ok = d.rule() == Rule::median && y.kind() == Sort::Kind::lattice ? y.contains(xi) : (xi >= 0 && xi <= 1);
    if (!ok) throw DomainError("coordinate " + to_string(xi) + " outside the domain of the " + std::string(rule_name(d.rule())) + " rule");
  }
  std::vector<Value> value(d.nodes().size());
  for (std::size_t i = 0; i < d.nodes().size(); ++i) {
    const DiagramNode& node = d.nodes()[i];
    if (node.terminal) {
      value[i] = node.value;
      continue;
    }
    const Value& p = x[node.variable - 1];
    const Value& hi = value[node.hi];
    const Value& lo = value[node.lo];
    switch (d.rule()) {
      case Rule::shannon:
        if (p == 1) {
          value[i] = hi;
        } else if (p == 0) {
          value[i] = lo;
        } else if (y.is_numeric()) {
          value[i] = p * hi + (1 - p) * lo;
        } else {
          throw DomainError("shannon diagrams over " + y.name() + " evaluate at Boolean points only");
        }
        break;
      case Rule::median:
        value[i] = y.join(y.join(y.meet(p, hi), y.meet(hi, lo)), y.meet(lo, p));
        break;
      case Rule::mle_affine:
        value[i] = p * hi + (1 - p) * lo;
        break;
    }
  }
  return value[d.root()];
}

NodeCount node_count(const Diagram& d) {
  NodeCount c{0, 0};
  for (const DiagramNode& node : d.nodes()) (node.terminal ? c.terminal : c.internal) += 1;
  return c;
}

std::string dump(const Diagram& d) {
  std::ostringstream out;
  out << "dd " << rule_name(d.rule()) << ' ' << d.arity() << ' ';
  for (std::size_t i = 0; i < d.order().size(); ++i) out << (i ? "," : "") << d.order()[i];
  out << '\n';
  for (std::size_t i = 0; i < d.nodes().size(); ++i) {
    const DiagramNode& node = d.nodes()[i];
    if (node.terminal) {
      out << i << " term " << d.value_sort().format(node.value) << '\n';
    } else {
      out << i << ' ' << node.variable << ' ' << node.lo << ' ' << node.hi << '\n';
    }
  }
  return out.str();
}

}  // namespace pivotal
