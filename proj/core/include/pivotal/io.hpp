#pragma once

#include "pivotal/extensions.hpp"
#include "pivotal/function_table.hpp"
#include "pivotal/lattice.hpp"
#include "pivotal/pivotal_function.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace pivotal {

/// Reads a `.tt`, `.pbf` or `.lft` table; the header decides the format.
/// Lattice files named by `.lft` are resolved against `base_dir`.
///
///   bool <n>              then 2^n characters from {0,1}
///   pbf <n> [grid <d>]    then 2^n (or (d+1)^n) rationals
///   lft <n> <lattice>     then |X|^n element names
FunctionTable read_table(std::istream& in, const std::filesystem::path& base_dir = {});
FunctionTable read_table_file(const std::filesystem::path& path);

/// Writes the format matching the table's sorts. `lattice_file` is the name
/// recorded in a `.lft` header.
std::string write_table(const FunctionTable& f, const std::string& lattice_file = "lattice.lat");

/// `lat <count>`, element names, `bottom <a> top <b>`, then `leq <a> <b>` lines.
RawLattice read_lattice(std::istream& in);
RawLattice read_lattice_file(const std::filesystem::path& path);
std::string write_lattice(const FiniteLattice& l);

/// `pvf extensional <|X|>` followed by `p u v -> w` lines, or
/// `pvf builtin <family> [params...]`.
PivotalFunction read_pivotal(std::istream& in, const Sort& domain, const Sort& codomain);
PivotalFunction read_pivotal_file(const std::filesystem::path& path, const Sort& domain,
                                  const Sort& codomain);
/// Extensional tables list every triple; built-in families write their
/// builtin_spec(). Restricted functions have no file form.
std::string write_pivotal(const PivotalFunction& pi, const Sort& domain);

/// `mlf <n>` / `lvf <n>` followed by `S <rational>` lines, S a decimal bitmask.
MultilinearForm read_mlf(std::istream& in);
std::string write_mlf(const MultilinearForm& m);
LovaszForm read_lvf(std::istream& in);
std::string write_lvf(const LovaszForm& l);

}  // namespace pivotal
