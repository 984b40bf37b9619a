#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/catalog.hpp"

namespace coclass {

struct CoclassVerdict {
  int coclass = 0;
  bool abelian = false;
  friend bool operator==(const CoclassVerdict&, const CoclassVerdict&) = default;
};

enum class Validation { lenient, strict };

/// Coclass of the second 3-class group from the logarithms e_i >= 1 of the
/// 3-class numbers of the four unramified cyclic cubic extensions: the second
/// largest minus one, or coclass 1 (abelian) when the second largest is 1.
/// Strict mode also demands the shape a group can realize: all equal to 1
/// (abelian), the last three equal to 2 (coclass 1), or the two smallest
/// equal to 3 (coclass >= 2). Throws InconsistentPattern; std::invalid_argument
/// for an entry below 1.
CoclassVerdict coclass_from_class_numbers(const std::array<int, 4>& log_orders,
                                          Validation mode = Validation::lenient);

/// Coclass-2 trees with roots <729,40>, <729,49>, <729,54>.
enum class TreeTag { T40, T49, T54, NotApplicable };

std::string_view format_tree(TreeTag t);
/// "T40", "40", "729,40" and "n/a" are accepted. Throws ParseError.
TreeTag parse_tree(std::string_view text);

struct PredictedTTT {
  std::array<AbelianInvariants, 4> tau1;
  AbelianInvariants tau2;
};

/// Whether (c, r, k) lies where the general rule applies. For r >= 2 the
/// interface class c = r + 1 only occurs with k = 0, so (r+1, r, 1) is out.
bool in_regular_range(int c, int r, int k);

/// tau1 = (A(3,c-k), A(3,r+1), T3, T4), tau2 = A(3,c-1) x A(3,r-1), with
/// (T3, T4) fixed by the coclass and, for r = 2, the tree. Throws
/// OutsideRegularRange or MissingTree.
PredictedTTT predict_ttt(int c, int r, int k, TreeTag tree = TreeTag::NotApplicable);

/// The tree whose stable pair (T3, T4) fits a coclass-2 tau1 once the
/// polarization (largest entry) is set aside, if any does.
std::optional<TreeTag> tree_from_stabilization(const std::array<AbelianInvariants, 4>& tau1);

/// One row of the table of small exceptions; a row may cover several ids.
struct ExceptionRow {
  std::vector<GroupId> ids;
  int c = 0;
  int r = 0;
  int k = 0;
  std::array<AbelianInvariants, 4> tau1;
  bool tau1_regular = false;
  AbelianInvariants tau2;
  bool tau2_regular = false;
};

/// All rows, in table order. Loaded once from the embedded data file.
std::span<const ExceptionRow> exception_rows();
/// Throws NotExceptional.
const ExceptionRow& exceptions_table(GroupId id);
/// Parses the table format (see data/table1.txt). Throws CatalogFormatError.
std::vector<ExceptionRow> parse_exception_rows(std::string_view text);

/// Commutator subgroup of a metabelian group of class c and coclass r:
/// A(3,c-2)^2 when irregular, A(3,c-1) x A(3,r-1) otherwise. Irregular
/// requires even c and r = c - 2 (IrregularNotPossible otherwise);
/// std::invalid_argument unless r >= 1 and c >= r + 1 (c = r = 1 allowed).
AbelianInvariants commutator_structure(int c, int r, bool irregular);

/// Homocyclic commutator criterion on the family parameters: for r = 2,
/// rho != 0 and rho = beta - 1; for even r >= 4, rho = -1; never for odd r.
/// std::invalid_argument for r < 2.
bool irregularity_from_params(int r, int rho, int beta);

}  // namespace coclass
