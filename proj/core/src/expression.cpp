#include "pivotal/expression.hpp"

#include "pivotal/error.hpp"

#include <algorithm>
#include <cctype>

namespace pivotal {

namespace {

using Op = Expression::Op;

enum class Tok {
  end,
  number,
  name,
  variable,
  lparen,
  rparen,
  comma,
  plus,
  minus,
  bar,
  caret,
  amp,
  star,
  bang,
  kw_min,
  kw_max,
  kw_med,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Symbol {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first so multi-byte symbols win.
constexpr Symbol symbols[] = {
    {"\xE2\x88\xA7", Tok::amp},    // ∧
    {"\xE2\x88\xA8", Tok::bar},    // ∨
    {"\xC2\xAC", Tok::bang},       // ¬
    {"\xE2\x8A\x95", Tok::caret},  // ⊕
    {"\xC2\xB7", Tok::star},       // ·
    {"\xE2\x88\x92", Tok::minus},  // −
    {"(", Tok::lparen}, {")", Tok::rparen}, {",", Tok::comma}, {"+", Tok::plus}, {"-", Tok::minus},
    {"|", Tok::bar},    {"^", Tok::caret},  {"&", Tok::amp},   {"*", Tok::star}, {"!", Tok::bang},
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text, ExpressionSort sort) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const Symbol& s : symbols) {
      if (text.substr(i, s.spelling.size()) == s.spelling) {
        out.push_back(Token{s.kind, i, std::string(s.spelling)});
        i += s.spelling.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (!word_char(c)) throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i), i);
    const std::size_t start = i;
    while (i < text.size() && word_char(text[i])) ++i;
    // Fractions p/q in numeric contexts.
    if (sort != ExpressionSort::lattice && i < text.size() && text[i] == '/' &&
        std::all_of(text.begin() + start, text.begin() + i, [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    }
    std::string word(text.substr(start, i - start));
    Tok kind = Tok::name;
    if (word == "min") {
      kind = Tok::kw_min;
    } else if (word == "max") {
      kind = Tok::kw_max;
    } else if (word == "med") {
      kind = Tok::kw_med;
    } else if (word.size() > 1 && word[0] == 'x' &&
               std::all_of(word.begin() + 1, word.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      kind = Tok::variable;
    } else if (std::isdigit(static_cast<unsigned char>(word[0]))) {
      kind = sort == ExpressionSort::lattice ? Tok::name : Tok::number;
    }
    out.push_back(Token{kind, start, std::move(word)});
  }
  out.push_back(Token{Tok::end, text.size(), ""});
  return out;
}

const char* op_symbol(Op op) {
  switch (op) {
    case Op::negate: return "!";
    case Op::minus: return "-";
    case Op::meet: return "&";
    case Op::join: return "|";
    case Op::exclusive_or: return "^";
    case Op::add: return "+";
    case Op::subtract: return "-";
    case Op::multiply: return "*";
    case Op::min: return "min";
    case Op::max: return "max";
    case Op::median: return "med";
    default: return "?";
  }
}

bool allowed(Op op, ExpressionSort sort) {
  switch (sort) {
    case ExpressionSort::boolean:
      return op != Op::add && op != Op::subtract && op != Op::multiply && op != Op::minus;
    case ExpressionSort::rational:
      return op != Op::negate && op != Op::exclusive_or;
    case ExpressionSort::lattice:
      return op != Op::add && op != Op::subtract && op != Op::multiply && op != Op::minus && op != Op::negate &&
             op != Op::exclusive_or;
  }
  return false;
}

const char* sort_word(ExpressionSort sort) {
  switch (sort) {
    case ExpressionSort::boolean: return "Boolean";
    case ExpressionSort::rational: return "rational";
    case ExpressionSort::lattice: return "lattice";
  }
  return "?";
}

// Binding strength; higher binds tighter.
int level(const Expression& e) {
  switch (e.op) {
    case Op::add:
    case Op::subtract: return 1;
    case Op::join: return 2;
    case Op::exclusive_or: return 3;
    case Op::meet:
    case Op::multiply: return 4;
    case Op::negate:
    case Op::minus: return 5;
    case Op::constant: return e.constant < 0 ? 5 : 6;
    default: return 6;
  }
}

class Parser {
 public:
  Parser(std::string_view text, const Sort& codomain)
      : codomain_(codomain), sort_(expression_sort_for(codomain)), tokens_(tokenize(text, sort_)) {}

  Expression parse() {
    Expression e = additive();
    if (peek().kind != Tok::end) fail("an operator or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError("at offset " + std::to_string(t.pos) + ": expected " + expected + ", found " + found, t.pos);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(what);
    ++at_;
  }

  Expression node(Op op, std::vector<Expression> args, std::size_t pos) const {
    if (!allowed(op, sort_)) {
      throw SortError("operator '" + std::string(op_symbol(op)) + "' at offset " + std::to_string(pos) +
                      " is not available in a " + sort_word(sort_) + " expression");
    }
    Expression e;
    e.op = op;
    e.args = std::move(args);
    return e;
  }

  template <class Next>
  Expression binary_level(std::initializer_list<std::pair<Tok, Op>> ops, Next next_level) {
    Expression left = (this->*next_level)();
    for (;;) {
      const Token& t = peek();
      const auto it = std::find_if(ops.begin(), ops.end(), [&](const auto& p) { return p.first == t.kind; });
      if (it == ops.end()) return left;
      const std::size_t pos = t.pos;
      ++at_;
      Expression right = (this->*next_level)();
      left = node(it->second, {std::move(left), std::move(right)}, pos);
    }
  }

  Expression additive() { return binary_level({{Tok::plus, Op::add}, {Tok::minus, Op::subtract}}, &Parser::disjunctive); }
  Expression disjunctive() { return binary_level({{Tok::bar, Op::join}}, &Parser::exclusive); }
  Expression exclusive() { return binary_level({{Tok::caret, Op::exclusive_or}}, &Parser::conjunctive); }
  Expression conjunctive() { return binary_level({{Tok::amp, Op::meet}, {Tok::star, Op::multiply}}, &Parser::unary); }

  Expression unary() {
    const Token& t = peek();
    if (t.kind == Tok::bang) {
      const std::size_t pos = t.pos;
      ++at_;
      return node(Op::negate, {unary()}, pos);
    }
    if (t.kind == Tok::minus) {
      const std::size_t pos = t.pos;
      ++at_;
      if (peek().kind == Tok::number) {
        node(Op::minus, {}, pos);  // context check only
        Expression e = literal();
        e.constant = -e.constant;
        return e;
      }
      return node(Op::minus, {unary()}, pos);
    }
    return primary();
  }

  Expression literal() {
    const Token& t = next();
    Expression e;
    e.op = Op::constant;
    if (sort_ == ExpressionSort::lattice) {
      e.constant = codomain_.parse(t.text);
    } else {
      try {
        e.constant = parse_rational(t.text);
      } catch (const ParseError&) {
        throw ParseError("at offset " + std::to_string(t.pos) + ": malformed number '" + t.text + "'", t.pos);
      }
      if (sort_ == ExpressionSort::boolean && e.constant != 0 && e.constant != 1) {
        throw SortError("constant " + t.text + " at offset " + std::to_string(t.pos) + " is not Boolean");
      }
    }
    return e;
  }

  Expression call(Op op, std::size_t count) {
    const std::size_t pos = peek().pos;
    ++at_;
    expect(Tok::lparen, "'('");
    std::vector<Expression> args;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(Tok::comma, "','");
      args.push_back(additive());
    }
    expect(Tok::rparen, "')'");
    return node(op, std::move(args), pos);
  }

  Expression primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::variable: {
        const std::string digits = t.text.substr(1);
        if (digits.find_first_not_of('0') == std::string::npos || digits.size() > 9) {
          throw ParseError("at offset " + std::to_string(t.pos) + ": variable index must be a positive integer", t.pos);
        }
        ++at_;
        Expression e;
        e.op = Op::variable;
        e.variable = std::stoul(digits);
        return e;
      }
      case Tok::number:
        return literal();
      case Tok::name:
        if (sort_ != ExpressionSort::lattice) fail("a variable x<i>, a constant, '(', min, max, med or a unary operator");
        try {
          return literal();
        } catch (const ParseError&) {
          throw ParseError("at offset " + std::to_string(t.pos) + ": unknown lattice element '" + t.text + "'", t.pos);
        }
      case Tok::lparen: {
        ++at_;
        Expression e = additive();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::kw_min:
        return call(Op::min, 2);
      case Tok::kw_max:
        return call(Op::max, 2);
      case Tok::kw_med:
        return call(Op::median, 3);
      default:
        fail("a variable x<i>, a constant, '(', min, max, med or a unary operator");
    }
  }

  const Sort& codomain_;
  ExpressionSort sort_;
  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

void print(const Expression& e, const Sort& codomain, std::string& out) {
  auto child = [&](const Expression& c, bool parens) {
    if (parens) out += '(';
    print(c, codomain, out);
    if (parens) out += ')';
  };
  switch (e.op) {
    case Op::variable:
      out += "x" + std::to_string(e.variable);
      return;
    case Op::constant:
      out += codomain.kind() == Sort::Kind::lattice ? codomain.format(e.constant) : to_string(e.constant);
      return;
    case Op::negate:
    case Op::minus: {
      out += op_symbol(e.op);
      const Expression& a = e.args[0];
      // Keep -(1) apart from the literal -1.
      child(a, level(a) < 5 || (e.op == Op::minus && a.op == Op::constant && a.constant >= 0));
      return;
    }
    case Op::min:
    case Op::max:
    case Op::median: {
      out += op_symbol(e.op);
      out += '(';
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        print(e.args[i], codomain, out);
      }
      out += ')';
      return;
    }
    default: {
      const int l = level(e);
      child(e.args[0], level(e.args[0]) < l);
      out += ' ';
      out += op_symbol(e.op);
      out += ' ';
      child(e.args[1], level(e.args[1]) <= l);
      return;
    }
  }
}

Value med3(const Sort& s, const Value& a, const Value& b, const Value& c) {
  return s.join(s.join(s.meet(a, b), s.meet(b, c)), s.meet(c, a));
}

}  // namespace

ExpressionSort expression_sort_for(const Sort& codomain) {
  if (codomain.kind() == Sort::Kind::lattice) return ExpressionSort::lattice;
  if (codomain.is_boolean()) return ExpressionSort::boolean;
  return ExpressionSort::rational;
}

Expression parse_ast(std::string_view text, const Sort& codomain) { return Parser(text, codomain).parse(); }

std::string to_string(const Expression& e, const Sort& codomain) {
  std::string out;
  print(e, codomain, out);
  return out;
}

std::size_t max_variable(const Expression& e) {
  std::size_t m = e.op == Op::variable ? e.variable : 0;
  for (const Expression& a : e.args) m = std::max(m, max_variable(a));
  return m;
}

Value evaluate(const Expression& e, const Point& x, const Sort& codomain) {
  auto arg = [&](std::size_t i) { return evaluate(e.args[i], x, codomain); };
  switch (e.op) {
    case Op::variable:
      if (e.variable > x.size()) throw DomainError("variable x" + std::to_string(e.variable) + " beyond the point's arity");
      return x[e.variable - 1];
    case Op::constant:
      return e.constant;
    case Op::negate:
      return 1 - arg(0);
    case Op::minus:
      return -arg(0);
    case Op::meet:
    case Op::min:
      return codomain.meet(arg(0), arg(1));
    case Op::join:
    case Op::max:
      return codomain.join(arg(0), arg(1));
    case Op::exclusive_or:
      return arg(0) != arg(1) ? 1 : 0;
    case Op::add:
      return arg(0) + arg(1);
    case Op::subtract:
      return arg(0) - arg(1);
    case Op::multiply:
      return arg(0) * arg(1);
    case Op::median:
      return med3(codomain, arg(0), arg(1), arg(2));
  }
  return Value(0);
}

FunctionTable parse_expression(std::string_view text, const Sort& domain, const Sort& codomain,
                               std::optional<std::size_t> arity) {
  const Expression e = parse_ast(text, codomain);
  const bool lattice_context = expression_sort_for(codomain) == ExpressionSort::lattice;
  if (lattice_context ? !(domain == codomain) : domain.kind() == Sort::Kind::lattice) {
    throw SortError("cannot read " + domain.name() + " arguments in a " + codomain.name() + " expression");
  }
  std::size_t n = std::max<std::size_t>(max_variable(e), 1);
  if (arity) {
    if (max_variable(e) > *arity) {
      throw DomainError("variable x" + std::to_string(max_variable(e)) + " is beyond the declared arity " + std::to_string(*arity));
    }
    n = *arity;
  }
  return FunctionTable::tabulate(n, domain, codomain, [&](const Point& x) { return evaluate(e, x, codomain); });
}

}  // namespace pivotal
