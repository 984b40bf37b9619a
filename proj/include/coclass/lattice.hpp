#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/group.hpp"

namespace coclass {

/// Predicted normal-subgroup lattice of a two-generator metabelian p-group
/// with abelianization (p,p), class c, coclass r and defect 0.
///
/// Below the heading diamond (G, G') sits the grid P(j,l) = Sigma_j x T_l for
/// 3 <= j <= c+1 and 3 <= l <= r+2, where |Sigma_j| = p^(c+1-j) and
/// |T_l| = p^(r+2-l). Each square (P(j,l), P(j+1,l+1)) is a trailing diamond
/// with p-1 inner vertices besides the two grid vertices. For r = 1 the grid
/// collapses to the chain of lower central terms.
struct LatticeNode {
  enum class Kind { whole, maximal, derived, grid, inner, chain };
  Kind kind = Kind::whole;
  std::string name;
  int log_order = 0;
  int j = 0;  // grid column (Sigma index) or chain index
  int l = 0;  // grid row (T index)
  /// gamma_i equals this node for the listed i.
  std::vector<int> gamma;
  /// zeta_i equals this node for the listed i.
  std::vector<int> zeta;
};

struct LatticeEdge {
  int upper = 0;  // node index; upper covers lower with index p
  int lower = 0;
  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

struct LatticeModel {
  int p = 3;
  int c = 0;
  int r = 0;
  std::vector<LatticeNode> nodes;
  std::vector<LatticeEdge> edges;
  /// (upper, lower) node pairs of index p^2 with p+1 intermediates.
  std::vector<LatticeEdge> diamonds;

  int node_index(const std::string& name) const;
};

/// Throws UnsupportedShape unless p is an odd prime, r >= 2 and c >= r+1.
LatticeModel predicted_lattice(int p, int c, int r);
/// The degenerate chain of a group of maximal class (r = 1), c >= 1.
LatticeModel maximal_class_lattice(int p, int c);

/// 1 + c + r + p (3 + cr - c - 2r).
long long normal_count(int p, int c, int r);

/// Expected central series data in logarithmic form (a factor (p,p) is (11)).
struct CentralSeriesSpec {
  enum class Chi { derived, maximal, whole };
  /// gamma_j / gamma_{j+1} for j = 1..c.
  std::vector<AbelianInvariants> gamma_factors;
  /// zeta_j / zeta_{j-1} for j = 1..c.
  std::vector<AbelianInvariants> zeta_factors;
  /// gamma_log_orders[i] is the log order of gamma_(i+1) for i = 0..c;
  /// zeta_log_orders[j] that of zeta_j for j = 0..c.
  std::vector<int> gamma_log_orders;
  std::vector<int> zeta_log_orders;
  /// chi_j for j = 1..c.
  std::vector<Chi> chi;
};

/// Throws UnsupportedShape as predicted_lattice does.
CentralSeriesSpec central_series_spec(int p, int c, int r);

struct LatticeCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct LatticeReport {
  GroupDescriptor descriptor;
  std::size_t normal_subgroups = 0;
  long long predicted = 0;
  std::vector<LatticeCheck> checks;
  bool ok() const;
};

/// Brute-force comparison of a realized group with the predicted lattice:
/// the normal subgroup count, orders, covering edges and diamonds by log
/// order, factors and orders of both central series, which upper central
/// terms are lower central terms, and the two-step centralizers. Throws
/// PreconditionDefect for k = 1 and UnsupportedShape for r = 1.
LatticeReport verify_lattice(const ConcreteGroup& g);

/// Graphviz digraph, one rank per log order; lower central terms are filled
/// circles and the remaining upper central terms open circles.
std::string emit_diagram(const LatticeModel& model);

/// (c, r) shapes behind `lattice --figure N`, N = 2..6.
std::vector<std::pair<int, int>> figure_shapes(int figure);

}  // namespace coclass
