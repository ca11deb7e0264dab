#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/sort.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pivotal {

/// How a node combines its pivot value with its two children:
///   shannon     select hi at 1, lo at 0 (affine fold off the vertices)
///   median      med(x_k, hi, lo)
///   mle_affine  x_k·hi + (1−x_k)·lo
enum class Rule { shannon, median, mle_affine };

std::string_view rule_name(Rule r);
/// Accepts shannon, median, mle and mle-affine.
Rule parse_rule(std::string_view name);

struct DiagramNode {
  bool terminal = false;
  std::size_t variable = 0;  // 1-based, internal nodes only
  std::size_t lo = 0;
  std::size_t hi = 0;
  Value value;               // terminal nodes only
};

/// Reduced ordered decision diagram built by repeated pivotal decomposition of
/// vertex data. Nodes are numbered in construction order, children first, so
/// the root is always the last node.
class Diagram {
 public:
  Rule rule() const { return rule_; }
  std::size_t arity() const { return arity_; }
  const std::vector<std::size_t>& order() const { return order_; }
  const Sort& value_sort() const { return value_sort_; }
  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  std::size_t root() const { return nodes_.size() - 1; }

  friend bool operator==(const Diagram& a, const Diagram& b);
  friend Diagram build(const FunctionTable& f, Rule rule, std::vector<std::size_t> order);

 private:
  Rule rule_ = Rule::shannon;
  std::size_t arity_ = 0;
  std::vector<std::size_t> order_;
  Sort value_sort_ = Sort::boolean();
  std::vector<DiagramNode> nodes_;
};

/// Builds from f restricted to {0,1}^n. `order` lists the variables from root
/// to leaves and defaults to 1..n. Throws SortError on a rule/codomain
/// mismatch and DomainError when the median rule meets vertex data that is not
/// nondecreasing (the message names the offending pair of vertices).
Diagram build(const FunctionTable& f, Rule rule, std::vector<std::size_t> order = {});

/// Folds the rule's Π over the diagram. Throws DomainError when x is outside
/// the rule's domain.
Value dd_evaluate(const Diagram& d, const Point& x);

struct NodeCount {
  std::size_t internal;
  std::size_t terminal;
};

NodeCount node_count(const Diagram& d);

/// `dd <rule> <n> <order>` then `id variable lo hi` / `id term <value>`.
std::string dump(const Diagram& d);

}  // namespace pivotal
