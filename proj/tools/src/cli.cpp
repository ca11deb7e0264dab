#include "pivotal_cli/cli.hpp"

#include "pivotal/classes.hpp"
#include "pivotal/decomposition.hpp"
#include "pivotal/diagram.hpp"
#include "pivotal/equivalence.hpp"
#include "pivotal/error.hpp"
#include "pivotal/expression.hpp"
#include "pivotal/extensions.hpp"
#include "pivotal/io.hpp"
#include "pivotal/lattice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pivotal::cli {

namespace {

using nlohmann::json;

constexpr std::size_t shown_violations = 20;

struct Options {
  std::string file;
  std::string expr;
  std::string file2;
  std::string expr2;
  std::string sort = "bool";
  std::size_t arity = 0;
  std::size_t grid = 0;
  std::string extension = "lovasz";
  std::string pi;
  std::string order;
  std::string rule = "shannon";
  std::string point;
  std::string set;
  std::string value;
  std::string form;
  std::size_t k = 0;
  std::size_t partial = 0;
  std::size_t max_size = default_lattice_cap;
  std::vector<std::string> words;
  bool json = false;
  bool all_witnesses = false;
  bool count = false;
  bool check = false;
  bool pivots = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_labels(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected a comma-separated list of argument labels, got '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

Point parse_point(const Sort& s, const std::string& text) {
  Point x;
  for (const auto& item : split(text, ',')) x.push_back(s.parse(item));
  return x;
}

std::string format_point(const Sort& s, const Point& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + s.format(x[i]);
  return out + ")";
}

std::string format_labels(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void check_arity(std::size_t n) const {
    if (n > max_arity()) {
      throw DomainError("arity " + std::to_string(n) + " exceeds PIVOTAL_MAX_ARITY = " + std::to_string(max_arity()));
    }
  }

  Sort expression_codomain() {
    if (o_.sort == "bool") return Sort::boolean();
    if (o_.sort == "rat") return Sort::rational();
    if (o_.sort.rfind("lat:", 0) == 0) {
      lattice_file_ = o_.sort.substr(4);
      return make_lattice_sort(read_lattice_file(lattice_file_));
    }
    throw ParseError("unknown sort '" + o_.sort + "' (expected bool, rat or lat:<file>)");
  }

  FunctionTable from_expression(const std::string& text) {
    const Sort y = expression_codomain();
    Sort x = y;
    if (y.kind() == Sort::Kind::rational) x = o_.grid > 1 ? Sort::grid(o_.grid) : Sort::boolean();
    const Expression e = parse_ast(text, y);
    check_arity(std::max<std::size_t>({max_variable(e), o_.arity, 1}));
    return parse_expression(text, x, y, o_.arity ? std::optional<std::size_t>(o_.arity) : std::nullopt);
  }

  FunctionTable from_file(const std::string& path) {
    std::ifstream in(path);
    std::string header;
    if (in >> header && header == "lft") {
      std::string n;
      in >> n >> lattice_file_;
    }
    FunctionTable f = read_table_file(path);
    check_arity(f.arity());
    if (o_.grid > 1 && f.domain().is_boolean() && f.codomain().kind() == Sort::Kind::rational) {
      if (o_.extension == "lovasz") return sample_on_grid(mobius(f), o_.grid);
      if (o_.extension == "mle") return sample_on_grid(sop_form(f), o_.grid);
      throw ParseError("unknown extension '" + o_.extension + "' (expected lovasz or mle)");
    }
    return f;
  }

  FunctionTable function() {
    if (!o_.file.empty() && !o_.expr.empty()) throw ParseError("give either -f or -e, not both");
    if (!o_.file.empty()) return from_file(o_.file);
    if (!o_.expr.empty()) return from_expression(o_.expr);
    throw ParseError("no function given (use -f <file> or -e <expression>)");
  }

  FunctionTable second_function() {
    if (!o_.file2.empty()) return from_file(o_.file2);
    if (!o_.expr2.empty()) return from_expression(o_.expr2);
    throw ParseError("no second function given (use -g <file> or --expr2 <expression>)");
  }

  PivotalFunction pivotal(const FunctionTable& f) {
    if (o_.pi.empty()) throw ParseError("no pivotal function given (use --pi <name|file.pvf>)");
    if (o_.pi.size() > 4 && o_.pi.compare(o_.pi.size() - 4, 4, ".pvf") == 0) {
      return read_pivotal_file(o_.pi, f.domain(), f.codomain());
    }
    std::vector<std::string> parts;
    std::istringstream in(o_.pi);
    for (std::string w; in >> w;) parts.push_back(w);
    if (parts.empty()) throw ParseError("empty --pi");
    const std::vector<std::string> params(parts.begin() + 1, parts.end());
    return builtin_pivotal(parts[0], params, f.domain(), f.codomain());
  }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  std::string table_text(const FunctionTable& f) {
    return write_table(f, lattice_file_.empty() ? "lattice.lat" : lattice_file_);
  }

  int parse() {
    const Sort y = expression_codomain();
    const Expression e = parse_ast(o_.expr, y);
    const FunctionTable f = from_expression(o_.expr);
    if (o_.json) {
      json values = json::array();
      for (const Value& v : f.values()) values.push_back(f.codomain().format(v));
      emit({{"expression", to_string(e, y)}, {"arity", f.arity()}, {"values", values}});
    } else {
      out_ << "expr: " << to_string(e, y) << '\n' << table_text(f);
    }
    return ok;
  }

  int eval() {
    const FunctionTable f = function();
    const Value v = evaluate(f, parse_point(f.domain(), o_.point));
    if (o_.json) {
      emit({{"value", f.codomain().format(v)}});
    } else {
      out_ << f.codomain().format(v) << '\n';
    }
    return ok;
  }

  int cofactor() {
    const FunctionTable f = function();
    out_ << table_text(pivotal::cofactor(f, o_.k, f.domain().parse(o_.value)));
    return ok;
  }

  int section() {
    const FunctionTable f = function();
    out_ << table_text(pivotal::section(f, parse_labels(o_.set), parse_point(f.domain(), o_.point)));
    return ok;
  }

  int essential() {
    const IndexSet s = essential_arguments(function());
    if (o_.json) {
      emit({{"essential", s}});
    } else {
      out_ << format_labels(s) << '\n';
    }
    return ok;
  }

  int equiv() {
    const FunctionTable f = function();
    const FunctionTable g = second_function();
    const auto w = is_equivalent(f, g);
    if (o_.json) {
      json j{{"equivalent", w.has_value()}};
      if (w) {
        j["sigma"] = w->sigma;
        j["mu"] = w->mu;
      }
      emit(j);
    } else if (w) {
      out_ << "equivalent sigma=" << format_tuple(w->sigma) << " mu=" << format_tuple(w->mu) << '\n';
    } else {
      out_ << "not equivalent\n";
    }
    return w ? ok : property_false;
  }

  int synth_pi() {
    const FunctionTable f = function();
    const SynthesisResult r = synthesize_pivotal(f);
    if (o_.json) {
      json j{{"decomposable", r.pi.has_value()}};
      if (r.conflict) j["conflict"] = conflict_json(f, *r.conflict);
      if (r.pi) j["pvf"] = write_pivotal(*r.pi, f.domain());
      emit(j);
    } else if (r.pi) {
      out_ << "decomposable\n" << write_pivotal(*r.pi, f.domain());
    } else {
      const SynthesisConflict& c = *r.conflict;
      out_ << "not decomposable\nconflict: x=" << format_point(f.domain(), c.first) << " k=" << c.first_pivot
           << " f=" << f.codomain().format(c.first_value) << " vs y=" << format_point(f.domain(), c.second)
           << " k=" << c.second_pivot << " f=" << f.codomain().format(c.second_value) << '\n';
    }
    return r.pi ? ok : property_false;
  }

  int synth_cpi() {
    const FunctionTable f = function();
    const ComponentwiseResult r = synthesize_componentwise(f);
    if (o_.json) {
      json j{{"decomposable", r.pis.has_value()}};
      if (r.conflict) j["conflict"] = conflict_json(f, *r.conflict);
      if (o_.all_witnesses) {
        j["all_conflicts"] = json::array();
        for (const auto& c : r.all_conflicts) j["all_conflicts"].push_back(conflict_json(f, c));
      }
      if (r.pis) {
        j["pvf"] = json::array();
        for (const auto& pi : *r.pis) j["pvf"].push_back(write_pivotal(pi, f.domain()));
      }
      emit(j);
    } else if (r.pis) {
      out_ << "c-decomposable\n";
      for (std::size_t k = 0; k < r.pis->size(); ++k) {
        out_ << "# k=" << k + 1 << '\n' << write_pivotal((*r.pis)[k], f.domain());
      }
    } else {
      out_ << "not c-decomposable\n";
      if (o_.all_witnesses) {
        for (const auto& c : r.all_conflicts) out_ << witness_line(f, c);
      } else {
        out_ << witness_line(f, *r.conflict);
      }
    }
    return r.pis ? ok : property_false;
  }

  int check_pi() {
    const FunctionTable f = function();
    const PivotalFunction pi = pivotal(f);
    const DecompositionReport r = check_decomposition(f, pi);
    if (o_.json) {
      json v = json::array();
      for (const auto& viol : r.violations) v.push_back(violation_json(f, viol));
      emit({{"holds", r.holds}, {"grid_verified", r.grid_verified}, {"violations", v}});
    } else if (r.holds) {
      out_ << (r.grid_verified ? "holds (grid-verified)\n" : "holds\n");
    } else {
      out_ << "fails: " << r.violations.size() << " violation(s)\n";
      for (std::size_t i = 0; i < std::min(shown_violations, r.violations.size()); ++i) {
        const Violation& viol = r.violations[i];
        out_ << "x=" << format_point(f.domain(), viol.point) << " k=" << viol.pivot
             << " f=" << f.codomain().format(viol.expected) << " pi=" << pi.value_sort().format(viol.actual) << '\n';
      }
      if (r.violations.size() > shown_violations) out_ << "... " << r.violations.size() - shown_violations << " more\n";
    }
    return r.holds ? ok : property_false;
  }

  int classify() {
    const FunctionTable f = function();
    const VSet minimal = minimal_um_class(f);
    std::string bits;
    for (int c = 1; c <= um_class_count; ++c) bits += um_membership(f, class_vset(c)) ? '1' : '0';
    if (o_.json) {
      json classes = json::array();
      for (int c = 1; c <= um_class_count; ++c) {
        classes.push_back({{"id", c}, {"name", class_name(c)}, {"v", class_vset(c).to_string()}, {"member", bits[c - 1] == '1'}});
      }
      emit({{"minimal", minimal.to_string()}, {"minimal_class", class_id_of(minimal)}, {"bits", bits}, {"classes", classes}});
      return ok;
    }
    out_ << "minimal: " << minimal.to_string() << '\n' << "bits: " << bits << '\n';
    for (int c = 1; c <= um_class_count; ++c) {
      out_ << c << ' ' << class_name(c) << ' ' << class_vset(c).to_string() << ' ' << bits[c - 1] << '\n';
    }
    return ok;
  }

  int umc() {
    if (o_.words.empty()) throw ParseError("umc needs meet, join, complement or member");
    const std::string& op = o_.words[0];
    auto need = [&](std::size_t n) {
      if (o_.words.size() != n + 1) throw ParseError("umc " + op + " takes " + std::to_string(n) + " class argument(s)");
    };
    if (op == "member") {
      need(1);
      const FunctionTable f = function();
      const VSet v = VSet::parse(o_.words[1]);
      const bool member = um_membership(f, v);
      const bool closed = um_closed_form(f, class_id_of(v));
      if (o_.json) {
        emit({{"member", member}, {"closed_form", closed}, {"class", class_id_of(v)}});
      } else {
        out_ << (member ? "member" : "not member") << " of " << class_name(class_id_of(v)) << ' ' << v.to_string()
             << " (closed form: " << (closed ? "member" : "not member") << ")\n";
      }
      return member ? ok : property_false;
    }
    VSet result;
    if (op == "meet" || op == "join") {
      need(2);
      result = um_algebra(op == "meet" ? UmOp::meet : UmOp::join, VSet::parse(o_.words[1]), VSet::parse(o_.words[2]));
    } else if (op == "complement") {
      need(1);
      result = um_algebra(UmOp::complement, VSet::parse(o_.words[1]));
    } else {
      throw ParseError("unknown umc operation '" + op + "'");
    }
    const int id = class_id_of(result);
    if (o_.json) {
      emit({{"v", result.to_string()}, {"class", id}, {"name", class_name(id)}});
    } else {
      out_ << result.to_string() << " class " << id << ' ' << class_name(id) << '\n';
    }
    return ok;
  }

  int mle() {
    const FunctionTable f = function();
    const MultilinearForm m = sop_form(f);
    if (o_.check) {
      const IdentityReport affine = check_mle_identity(m);
      const IdentityReport monotone = check_monotone_mle_identity(m);
      out_ << "identity: " << (affine.holds ? "holds" : "fails") << '\n'
           << "monotone-identity: " << (monotone.holds ? "holds" : "fails") << '\n';
      return affine.holds ? ok : property_false;
    }
    if (o_.point.empty()) {
      out_ << write_mlf(m);
      return ok;
    }
    const Point x = parse_point(Sort::rational(), o_.point);
    out_ << to_string(o_.partial ? mle_partial(m, o_.partial, x) : mle_evaluate(m, x)) << '\n';
    return ok;
  }

  int mobius_cmd() {
    out_ << write_lvf(mobius(function()));
    return ok;
  }

  int lovasz() {
    LovaszForm l = [&] {
      if (o_.form.empty()) return mobius(function());
      std::ifstream in(o_.form);
      if (!in) throw Error("cannot open " + o_.form);
      return read_lvf(in);
    }();
    if (o_.pivots) {
      const auto [p1, p2] = binary_lovasz_pivotals(l);
      out_ << write_pivotal(p1, Sort::rational()) << write_pivotal(p2, Sort::rational());
      return ok;
    }
    if (o_.point.empty()) {
      out_ << write_lvf(l);
      return ok;
    }
    out_ << to_string(lovasz_evaluate(l, parse_point(Sort::rational(), o_.point))) << '\n';
    return ok;
  }

  int dd() {
    const FunctionTable f = function();
    const Diagram d = build(f, parse_rule(o_.rule), o_.order.empty() ? std::vector<std::size_t>{} : parse_labels(o_.order));
    const NodeCount c = node_count(d);
    if (!o_.point.empty()) {
      const Sort& s = d.rule() == Rule::median && f.domain().kind() == Sort::Kind::lattice ? f.domain() : Sort::rational();
      out_ << d.value_sort().format(dd_evaluate(d, parse_point(s, o_.point))) << '\n';
    } else if (o_.json) {
      emit({{"internal", c.internal}, {"terminal", c.terminal}, {"dump", dump(d)}});
    } else if (o_.count) {
      out_ << "internal=" << c.internal << " terminal=" << c.terminal << '\n';
    } else {
      out_ << dump(d);
    }
    return ok;
  }

  int lattice_validate() {
    if (o_.file.empty()) throw ParseError("lattice-validate needs -f <file.lat>");
    const RawLattice raw = read_lattice_file(o_.file);
    try {
      const FiniteLattice l = FiniteLattice::validate(raw, o_.max_size);
      if (o_.json) {
        emit({{"valid", true}, {"size", l.size()}, {"chain", l.is_chain()}});
      } else {
        out_ << "valid: " << l.size() << " elements" << (l.is_chain() ? ", chain" : "") << '\n';
      }
      return ok;
    } catch (const LatticeError& e) {
      if (o_.json) {
        emit({{"valid", false}, {"axiom", e.axiom()}, {"message", e.what()}});
      } else {
        out_ << "invalid (" << e.axiom() << "): " << e.what() << '\n';
      }
      return property_false;
    }
  }

 private:
  static std::string format_tuple(const std::vector<std::size_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
  }

  std::string witness_line(const FunctionTable& f, const SynthesisConflict& c) const {
    return "k=" + std::to_string(c.first_pivot) + " a=" + format_point(f.domain(), c.first) +
           " b=" + format_point(f.domain(), c.second) + '\n';
  }

  json conflict_json(const FunctionTable& f, const SynthesisConflict& c) const {
    return {{"first", format_point(f.domain(), c.first)},
            {"first_pivot", c.first_pivot},
            {"first_value", f.codomain().format(c.first_value)},
            {"second", format_point(f.domain(), c.second)},
            {"second_pivot", c.second_pivot},
            {"second_value", f.codomain().format(c.second_value)}};
  }

  json violation_json(const FunctionTable& f, const Violation& v) const {
    return {{"point", format_point(f.domain(), v.point)},
            {"pivot", v.pivot},
            {"expected", f.codomain().format(v.expected)},
            {"actual", to_string(v.actual)}};
  }

  const Options& o_;
  std::ostream& out_;
  std::string lattice_file_;
};

void function_options(CLI::App* sub, Options& o) {
  sub->add_option("-f,--file", o.file, "Table file (.tt, .pbf, .lft)");
  sub->add_option("-e,--expr", o.expr, "Expression over x1..xn");
  sub->add_option("--sort", o.sort, "Expression sort: bool, rat or lat:<file>");
  sub->add_option("--arity", o.arity, "Arity for -e (default: largest variable index)");
  sub->add_option("--grid", o.grid, "Sample on the grid {0,1/d,...,1}");
  sub->add_option("--extension", o.extension, "Extension sampled by --grid for .pbf files: lovasz or mle");
  sub->add_flag("--json", o.json, "Machine-readable output");
}

}  // namespace

std::size_t max_arity() {
  if (const char* env = std::getenv("PIVOTAL_MAX_ARITY")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pivotal decompositions of finite-domain functions", "pivotal"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Parse an expression and print its table");
  function_options(parse, o);
  auto* eval = app.add_subcommand("eval", "Evaluate a function at a point");
  function_options(eval, o);
  eval->add_option("-x,--point", o.point, "Point, comma separated")->required();
  auto* cof = app.add_subcommand("cofactor", "Fix argument k to a value");
  function_options(cof, o);
  cof->add_option("-k", o.k, "Argument label")->required();
  cof->add_option("-a,--value", o.value, "Domain element")->required();
  auto* sec = app.add_subcommand("section", "S-section at an anchor point");
  function_options(sec, o);
  sec->add_option("--set", o.set, "Argument labels kept free, comma separated")->required();
  sec->add_option("-x,--point", o.point, "Anchor point")->required();
  auto* ess = app.add_subcommand("essential", "Essential arguments");
  function_options(ess, o);
  auto* eq = app.add_subcommand("equiv", "Decide equivalence of two functions");
  function_options(eq, o);
  eq->add_option("-g,--file2", o.file2, "Second table file");
  eq->add_option("--expr2", o.expr2, "Second expression");
  auto* spi = app.add_subcommand("synth-pi", "Synthesize a shared pivotal function");
  function_options(spi, o);
  auto* scpi = app.add_subcommand("synth-cpi", "Synthesize componentwise pivotal functions");
  scpi->alias("cpivot");
  function_options(scpi, o);
  scpi->add_flag("--all-witnesses", o.all_witnesses, "List every conflicting pair at the failing argument");
  auto* cpi = app.add_subcommand("check-pi", "Check a decomposition against a pivotal function");
  function_options(cpi, o);
  cpi->add_option("--pi", o.pi, "Builtin family with parameters, or a .pvf file")->required();
  auto* cls = app.add_subcommand("classify", "UM classes of a Boolean function");
  function_options(cls, o);
  auto* umc = app.add_subcommand("umc", "UM class algebra: meet V W | join V W | complement V | member V");
  function_options(umc, o);
  umc->add_option("words", o.words, "Operation and class arguments")->required();
  auto* mle = app.add_subcommand("mle", "Multilinear extension");
  function_options(mle, o);
  mle->add_option("-x,--point", o.point, "Evaluate at a point of [0,1]^n");
  mle->add_option("--partial", o.partial, "Partial derivative in argument k at -x");
  mle->add_flag("--check", o.check, "Check the affine and monotone pivot identities on the grid");
  auto* mob = app.add_subcommand("mobius", "Möbius coefficients");
  function_options(mob, o);
  auto* lov = app.add_subcommand("lovasz", "Lovász extension");
  function_options(lov, o);
  lov->add_option("--form", o.form, "Read coefficients from an .lvf file");
  lov->add_option("-x,--point", o.point, "Evaluate at a point of [0,1]^n");
  lov->add_flag("--pivots", o.pivots, "Print the binary pivotal functions (n = 2)");
  auto* dd = app.add_subcommand("dd", "Reduced ordered decision diagram");
  function_options(dd, o);
  dd->add_option("--rule", o.rule, "shannon, median or mle");
  dd->add_option("--order", o.order, "Variable order, comma separated");
  dd->add_option("-x,--point", o.point, "Evaluate the diagram at a point");
  dd->add_flag("--count", o.count, "Print node counts only");
  auto* lat = app.add_subcommand("lattice-validate", "Validate a .lat file");
  lat->add_option("-f,--file", o.file, "Lattice file")->required();
  lat->add_option("--max-size", o.max_size, "Element cap");
  lat->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : error;
  }

  Session s(o, out);
  try {
    if (parse->parsed()) return s.parse();
    if (eval->parsed()) return s.eval();
    if (cof->parsed()) return s.cofactor();
    if (sec->parsed()) return s.section();
    if (ess->parsed()) return s.essential();
    if (eq->parsed()) return s.equiv();
    if (spi->parsed()) return s.synth_pi();
    if (scpi->parsed()) return s.synth_cpi();
    if (cpi->parsed()) return s.check_pi();
    if (cls->parsed()) return s.classify();
    if (umc->parsed()) return s.umc();
    if (mle->parsed()) return s.mle();
    if (mob->parsed()) return s.mobius_cmd();
    if (lov->parsed()) return s.lovasz();
    if (dd->parsed()) return s.dd();
    if (lat->parsed()) return s.lattice_validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return error;
  }
  return error;
}

}  // namespace pivotal::cli
