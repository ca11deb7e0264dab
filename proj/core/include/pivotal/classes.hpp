#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/pivotal_function.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pivotal {

/// The four unary Boolean functions.
enum class Unary : std::uint8_t {
  bot = 0,  // constant 0
  top = 1,  // constant 1
  id = 2,
  neg = 3,
};

/// Which unary function the pair (g(1), g(0)) describes.
Unary unary_from_cofactors(bool at_one, bool at_zero);

/// A subset V of {⊥, ⊤, id, ¬}; names the UM-characterized class C_V.
class VSet {
 public:
  constexpr VSet() = default;
  constexpr explicit VSet(std::uint8_t bits) : bits_(bits & 0xF) {}
  VSet(std::initializer_list<Unary> members);

  static constexpr VSet empty() { return VSet(0); }
  static constexpr VSet all() { return VSet(0xF); }

  bool contains(Unary u) const { return (bits_ >> static_cast<unsigned>(u)) & 1U; }
  void insert(Unary u) { bits_ |= static_cast<std::uint8_t>(1U << static_cast<unsigned>(u)); }
  std::uint8_t bits() const { return bits_; }
  std::size_t count() const { return std::bitset<4>(bits_).count(); }
  bool subset_of(VSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// "{bot,id}"; members in the order bot, top, id, neg.
  std::string to_string() const;
  /// Accepts "{a,b}", "a,b", a class name or a class number 1..16.
  static VSet parse(std::string_view text);

  friend constexpr bool operator==(VSet, VSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

std::string_view unary_name(Unary u);

/// Values in {-1, 0, 1} over {0,1}^n, index order as in FunctionTable.
struct SignedTable {
  std::size_t arity;
  std::vector<int> values;
};

/// ∂_j f(x) = f(x ⊕ δ_j) ⊕ f(x). Throws DomainError for j out of range and
/// SortError for non-Boolean tables.
FunctionTable boolean_partial(const FunctionTable& f, std::size_t j);

/// Δ_j f(x) = f(x_j^1) − f(x_j^0).
SignedTable boolean_delta(const FunctionTable& f, std::size_t j);

/// Unary functions occurring as essential unary sections; {c} for a constant c.
VSet minimal_um_class(const FunctionTable& f);

/// f ∈ C_V.
bool um_membership(const FunctionTable& f, VSet v);

/// Number of UM-characterized Boolean classes.
inline constexpr int um_class_count = 16;

/// V of class 1..16 in the listing order empty, all, const0, const1, id, neg,
/// const, chi-top, chi-bot-or-0, chi-bot-or-1, chi-top-or-1, parity-like,
/// cls13, cls14, nondecreasing, nonincreasing.
VSet class_vset(int class_id);
std::string_view class_name(int class_id);
std::optional<int> class_id_from_name(std::string_view name);
/// Class number whose V equals `v`.
int class_id_of(VSet v);

/// Membership via the class's own description (equivalence to ⊥, ⊤, id, ¬ or
/// a characteristic function; derivative conditions), independent of
/// minimal_um_class. Throws DomainError for an invalid class id.
bool um_closed_form(const FunctionTable& f, int class_id);

enum class UmOp { meet, join, complement };

/// meet = V1 ∩ V2, join = V1 ∪ V2, complement = {⊥,⊤,id,¬} \ V1.
VSet um_algebra(UmOp op, VSet v1, VSet v2 = VSet::empty());

/// f ∈ Γ_Π: constants need Π(p,c,c) = c for every p; nonconstant f must be
/// Π-decomposable once its inessential arguments are deleted.
/// Throws CoverageError when Π is undefined on a needed triple.
bool gamma_membership(const FunctionTable& f, const PivotalFunction& pi);

}  // namespace pivotal
