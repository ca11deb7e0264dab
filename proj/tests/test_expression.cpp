#include "fixtures.hpp"
#include "oracles.hpp"

#include "pivotal/error.hpp"
#include "pivotal/expression.hpp"
#include "pivotal/extensions.hpp"

#include <doctest.h>

#include <random>

using namespace pivotal;
using Op = Expression::Op;

namespace {

Expression var(std::size_t i) {
  Expression e;
  e.op = Op::variable;
  e.variable = i;
  return e;
}

Expression constant(Value v) {
  Expression e;
  e.op = Op::constant;
  e.constant = std::move(v);
  return e;
}

Expression make(Op op, std::vector<Expression> args) {
  Expression e;
  e.op = op;
  e.args = std::move(args);
  return e;
}

std::size_t arity_of(Op op) {
  switch (op) {
    case Op::negate:
    case Op::minus:
      return 1;
    case Op::median:
      return 3;
    default:
      return 2;
  }
}

Expression random_ast(std::mt19937& rng, const std::vector<Op>& ops, const std::function<Value()>& leaf_constant, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 3 == 0) return constant(leaf_constant());
    return var(1 + rng() % 3);
  }
  const Op op = ops[rng() % ops.size()];
  std::vector<Expression> args;
  for (std::size_t i = 0; i < arity_of(op); ++i) args.push_back(random_ast(rng, ops, leaf_constant, depth - 1));
  return make(op, std::move(args));
}

}  // namespace

TEST_SUITE("expression") {
  TEST_CASE("parse_expression examples") {
    const Sort b = Sort::boolean();
    CHECK(parse_expression("x1 & x2", b, b) == oracle::boolean(2, [](const auto& x) { return x[0] & x[1]; }));
    CHECK(parse_expression("med(x1, 1, 0)", b, b) == oracle::boolean(1, [](const auto& x) { return x[0]; }));
    const FunctionTable lov = parse_expression("min(x1,x2) + min(x2,x3)", Sort::grid(4), Sort::rational());
    CHECK(lov == sample_on_grid(LovaszForm(3, {0, 0, 0, 1, 0, 0, 1, 0}), 4));
  }

  TEST_CASE("unicode and ASCII spellings agree") {
    const Sort b = Sort::boolean();
    CHECK(parse_expression("¬x1 ∧ x2 ∨ x3 ⊕ x1", b, b) == parse_expression("!x1 & x2 | x3 ^ x1", b, b));
    const Sort q = Sort::rational();
    CHECK(parse_expression("x1 · x2 − 1/2", Sort::grid(2), q) == parse_expression("x1 * x2 - 1/2", Sort::grid(2), q));
  }

  TEST_CASE("precedence") {
    const Sort b = Sort::boolean();
    // ¬ > ∧ > ⊕ > ∨
    CHECK(parse_expression("x1 | x2 & x3", b, b) == parse_expression("x1 | (x2 & x3)", b, b));
    CHECK(parse_expression("x1 ^ x2 & x3", b, b) == parse_expression("x1 ^ (x2 & x3)", b, b));
    CHECK(parse_expression("x1 | x2 ^ x3", b, b) == parse_expression("x1 | (x2 ^ x3)", b, b));
    CHECK(parse_expression("!x1 & x2", b, b) == parse_expression("(!x1) & x2", b, b));
    const Sort q = Sort::rational();
    const Sort g = Sort::grid(2);
    CHECK(parse_expression("x1 + x2 * x3", g, q) == parse_expression("x1 + (x2 * x3)", g, q));
    CHECK(parse_expression("x1 - x2 - x3", g, q) == parse_expression("(x1 - x2) - x3", g, q));
    CHECK(parse_expression("x1 + x2 | x3", g, q) == parse_expression("x1 + (x2 | x3)", g, q));
  }

  TEST_CASE("errors") {
    const Sort b = Sort::boolean();
    try {
      parse_expression("x1 & & x2", b, b);
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
      CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expression("(x1 & x2", b, b), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 $ x2", b, b), ParseError);
    CHECK_THROWS_AS(parse_expression("x0", b, b), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 + x2", b, b), SortError);
    CHECK_THROWS_AS(parse_expression("x1 & 2", b, b), SortError);
    CHECK_THROWS_AS(parse_expression("!x1", Sort::grid(2), Sort::rational()), SortError);
    CHECK_THROWS_AS(parse_expression("x1 & x3", b, b, 2), DomainError);
    const Sort l = fixture::lattice(fixture::chain3());
    CHECK_THROWS_AS(parse_expression("x1 & q", l, l), ParseError);
    CHECK_THROWS_AS(parse_expression("x1 + m", l, l), SortError);
    CHECK_THROWS_AS(parse_expression("x1", l, Sort::rational()), SortError);
  }

  TEST_CASE("explicit arity and lattice constants") {
    const Sort b = Sort::boolean();
    const FunctionTable f = parse_expression("x2", b, b, 3);
    CHECK(f.arity() == 3);
    CHECK(essential_arguments(f) == IndexSet{2});
    CHECK(parse_expression("1", b, b).arity() == 1);
    const Sort l = fixture::lattice(fixture::chain3());
    const FunctionTable m = parse_expression("x1 & m", l, l);
    for (std::size_t a = 0; a < 3; ++a) CHECK(m.at(a) == l.meet(l.element(a), l.parse("m")));
  }

  TEST_CASE("printing") {
    const Sort q = Sort::rational();
    CHECK(to_string(parse_ast("x1+x2*x3", q), q) == "x1 + x2 * x3");
    CHECK(to_string(parse_ast("(x1+x2)*x3", q), q) == "(x1 + x2) * x3");
    CHECK(to_string(parse_ast("x1-(x2-x3)", q), q) == "x1 - (x2 - x3)");
    CHECK(to_string(parse_ast("-(3)", q), q) == "-(3)");
    CHECK(to_string(parse_ast("-3/6", q), q) == "-1/2");
    CHECK(parse_ast("-(3)", q) != parse_ast("-3", q));
  }

  TEST_CASE("random round trip") {
    std::mt19937 rng(99);
    const Sort b = Sort::boolean();
    const Sort q = Sort::rational();
    const Sort l = fixture::lattice(fixture::chain3());
    struct Context {
      Sort sort;
      std::vector<Op> ops;
      std::function<Value()> leaf;
    };
    const std::vector<Context> contexts{
        {b, {Op::negate, Op::meet, Op::join, Op::exclusive_or, Op::min, Op::max, Op::median},
         [&] { return Value(static_cast<int>(rng() % 2)); }},
        {q, {Op::minus, Op::meet, Op::join, Op::add, Op::subtract, Op::multiply, Op::min, Op::max, Op::median},
         [&] { return oracle::random_rational(rng); }},
        {l, {Op::meet, Op::join, Op::min, Op::max, Op::median}, [&] { return l.element(rng() % 3); }},
    };
    for (const auto& c : contexts) {
      for (int trial = 0; trial < 300; ++trial) {
        const Expression e = random_ast(rng, c.ops, c.leaf, 4);
        const std::string text = to_string(e, c.sort);
        INFO(text);
        const Expression back = parse_ast(text, c.sort);
        CHECK(back == e);
        CHECK(to_string(back, c.sort) == text);
      }
    }
  }
}
