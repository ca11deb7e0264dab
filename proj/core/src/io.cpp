#include "pivotal/io.hpp"

#include "pivotal/error.hpp"

#include <fstream>
#include <sstream>

namespace pivotal {

namespace {

// Non-empty lines with '#' comments stripped, paired with 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

std::size_t parse_count(const std::string& text, std::size_t line, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    fail_at(line, std::string("expected ") + what + ", got '" + text + "'");
  }
  return std::stoul(text);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

template <class Form>
Form read_form(std::istream& in, const char* tag) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(std::string("empty ") + tag + " file");
  const auto header = words(lines[0].second);
  if (header.size() != 2 || header[0] != tag) fail_at(lines[0].first, std::string("expected '") + tag + " <n>'");
  const std::size_t n = parse_count(header[1], lines[0].first, "an arity");
  if (n == 0 || n > 20) fail_at(lines[0].first, "arity must be between 1 and 20");
  std::vector<Rational> values(std::size_t{1} << n);
  std::vector<bool> seen(values.size(), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words(lines[i].second);
    if (w.size() != 2) fail_at(lines[i].first, "expected 'S <rational>'");
    const std::size_t s = parse_count(w[0], lines[i].first, "a subset bitmask");
    if (s >= values.size()) fail_at(lines[i].first, "subset " + w[0] + " outside [" + std::to_string(n) + "]");
    if (seen[s]) fail_at(lines[i].first, "subset " + w[0] + " listed twice");
    seen[s] = true;
    try {
      values[s] = parse_rational(w[1]);
    } catch (const ParseError& e) {
      fail_at(lines[i].first, e.what());
    }
  }
  return Form(n, std::move(values));
}

template <class Form>
std::string write_form(const char* tag, std::size_t n, const std::vector<Rational>& values) {
  std::ostringstream out;
  out << tag << ' ' << n << '\n';
  for (std::size_t s = 0; s < values.size(); ++s) out << s << ' ' << to_string(values[s]) << '\n';
  return out.str();
}

}  // namespace

FunctionTable read_table(std::istream& in, const std::filesystem::path& base_dir) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty table file");
  const auto header = words(lines[0].second);
  const std::size_t hl = lines[0].first;
  if (header.size() < 2) fail_at(hl, "expected 'bool <n>', 'pbf <n> [grid <d>]' or 'lft <n> <lattice-file>'");
  const std::size_t n = parse_count(header[1], hl, "an arity");
  if (n == 0) fail_at(hl, "arity must be at least 1");

  std::vector<std::string> body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (auto& w : words(lines[i].second)) body.push_back(std::move(w));
  }
  const std::size_t body_line = lines.size() > 1 ? lines[1].first : hl;

  auto build = [&](const Sort& domain, const Sort& codomain) {
    const std::size_t count = point_count(domain.size(), n);
    if (body.size() != count) {
      fail_at(body_line, "expected " + std::to_string(count) + " values, got " + std::to_string(body.size()));
    }
    std::vector<Value> values;
    values.reserve(count);
    for (const auto& token : body) {
      try {
        values.push_back(codomain.parse(token));
      } catch (const ParseError& e) {
        fail_at(body_line, e.what());
      }
    }
    return FunctionTable(n, domain, codomain, std::move(values));
  };

  if (header[0] == "bool") {
    if (header.size() != 2) fail_at(hl, "expected 'bool <n>'");
    std::string bits;
    for (const auto& w : body) bits += w;
    const std::size_t count = point_count(2, n);
    if (bits.size() != count) fail_at(body_line, "expected " + std::to_string(count) + " bits, got " + std::to_string(bits.size()));
    std::vector<int> values;
    for (char c : bits) {
      if (c != '0' && c != '1') fail_at(body_line, std::string("bit '") + c + "' is not 0 or 1");
      values.push_back(c - '0');
    }
    return FunctionTable::boolean(n, values);
  }
  if (header[0] == "pbf") {
    Sort domain = Sort::boolean();
    if (header.size() == 4 && header[2] == "grid") {
      domain = Sort::grid(parse_count(header[3], hl, "a grid denominator"));
    } else if (header.size() != 2) {
      fail_at(hl, "expected 'pbf <n> [grid <d>]'");
    }
    return build(domain, Sort::rational());
  }
  if (header[0] == "lft") {
    if (header.size() != 3) fail_at(hl, "expected 'lft <n> <lattice-file>'");
    const Sort lattice = make_lattice_sort(read_lattice_file(base_dir / header[2]));
    return build(lattice, lattice);
  }
  fail_at(hl, "unknown table format '" + header[0] + "'");
}

FunctionTable read_table_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_table(in, path.parent_path());
}

std::string write_table(const FunctionTable& f, const std::string& lattice_file) {
  std::ostringstream out;
  const Sort& x = f.domain();
  const Sort& y = f.codomain();
  if (x.is_boolean() && y.is_boolean()) {
    out << "bool " << f.arity() << '\n';
    for (const Value& v : f.values()) out << (v == 1 ? '1' : '0');
    out << '\n';
  } else if ((x.is_boolean() || x.kind() == Sort::Kind::grid) && y.is_numeric()) {
    out << "pbf " << f.arity();
    if (x.kind() == Sort::Kind::grid) out << " grid " << x.size() - 1;
    out << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << to_string(f.at(i));
    out << '\n';
  } else if (x.kind() == Sort::Kind::lattice && x == y) {
    out << "lft " << f.arity() << ' ' << lattice_file << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << y.format(f.at(i));
    out << '\n';
  } else {
    throw Error("no table format for " + x.name() + "->" + y.name());
  }
  return out.str();
}

RawLattice read_lattice(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.size() < 3) throw ParseError("a lattice file needs a header, element names and a bottom/top line");
  const auto header = words(lines[0].second);
  if (header.size() != 2 || header[0] != "lat") fail_at(lines[0].first, "expected 'lat <element-count>'");
  const std::size_t count = parse_count(header[1], lines[0].first, "an element count");
  RawLattice raw;
  raw.names = words(lines[1].second);
  if (raw.names.size() != count) {
    fail_at(lines[1].first, "expected " + std::to_string(count) + " element names, got " + std::to_string(raw.names.size()));
  }
  const auto bounds = words(lines[2].second);
  if (bounds.size() != 4 || bounds[0] != "bottom" || bounds[2] != "top") fail_at(lines[2].first, "expected 'bottom <a> top <b>'");
  raw.bottom = bounds[1];
  raw.top = bounds[3];
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto w = words(lines[i].second);
    if (w.size() != 3 || w[0] != "leq") fail_at(lines[i].first, "expected 'leq <a> <b>'");
    raw.leq.emplace_back(w[1], w[2]);
  }
  return raw;
}

RawLattice read_lattice_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_lattice(in);
}

std::string write_lattice(const FiniteLattice& l) {
  std::ostringstream out;
  out << "lat " << l.size() << '\n';
  for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l.name(i);
  out << "\nbottom " << l.name(l.bottom()) << " top " << l.name(l.top()) << '\n';
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (a != b && l.leq(a, b)) out << "leq " << l.name(a) << ' ' << l.name(b) << '\n';
    }
  }
  return out.str();
}

PivotalFunction read_pivotal(std::istream& in, const Sort& domain, const Sort& codomain) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty pivotal function file");
  const auto header = words(lines[0].second);
  const std::size_t hl = lines[0].first;
  if (header.size() < 2 || header[0] != "pvf") fail_at(hl, "expected 'pvf extensional <|X|>' or 'pvf builtin <family> ...'");
  if (header[1] == "builtin") {
    if (header.size() < 3) fail_at(hl, "missing family name");
    if (lines.size() > 1) fail_at(lines[1].first, "builtin pivotal files have a single line");
    const std::vector<std::string> params(header.begin() + 3, header.end());
    return builtin_pivotal(header[2], params, domain, codomain);
  }
  if (header[1] != "extensional" || header.size() != 3) fail_at(hl, "expected 'pvf extensional <|X|>'");
  const std::size_t size = parse_count(header[2], hl, "a domain size");
  if (size != domain.size()) {
    throw DomainError("pivotal file is over a " + std::to_string(size) + "-element domain, expected " + domain.name());
  }
  PivotalFunction::Table table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto w = words(lines[i].second);
    if (w.size() != 5 || w[3] != "->") fail_at(lines[i].first, "expected 'p u v -> w'");
    try {
      PivotalFunction::Triple key{domain.parse(w[0]), codomain.parse(w[1]), codomain.parse(w[2])};
      if (!table.emplace(std::move(key), codomain.parse(w[4])).second) fail_at(lines[i].first, "triple listed twice");
    } catch (const ParseError& e) {
      if (e.position() == lines[i].first) throw;
      fail_at(lines[i].first, e.what());
    }
  }
  return PivotalFunction::extensional(domain, codomain, std::move(table));
}

PivotalFunction read_pivotal_file(const std::filesystem::path& path, const Sort& domain, const Sort& codomain) {
  auto in = open(path);
  return read_pivotal(in, domain, codomain);
}

std::string write_pivotal(const PivotalFunction& pi, const Sort& domain) {
  std::ostringstream out;
  const auto* table = pi.table();
  if (!table) {
    out << "pvf builtin";
    for (const auto& w : pi.builtin_spec()) out << ' ' << w;
    out << '\n';
    return out.str();
  }
  const Sort& y = pi.value_sort();
  out << "pvf extensional " << domain.size() << '\n';
  for (const auto& [key, w] : *table) {
    out << domain.format(key.p) << ' ' << y.format(key.u) << ' ' << y.format(key.v) << " -> " << y.format(w) << '\n';
  }
  return out.str();
}

MultilinearForm read_mlf(std::istream& in) { return read_form<MultilinearForm>(in, "mlf"); }

std::string write_mlf(const MultilinearForm& m) { return write_form<MultilinearForm>("mlf", m.arity(), m.vertex_values()); }

LovaszForm read_lvf(std::istream& in) { return read_form<LovaszForm>(in, "lvf"); }

std::string write_lvf(const LovaszForm& l) { return write_form<LovaszForm>("lvf", l.arity(), l.coefficients()); }

}  // namespace pivotal
