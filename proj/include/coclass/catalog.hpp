#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/artin.hpp"
#include "coclass/group.hpp"
#include "coclass/presentation.hpp"

namespace coclass {

/// SmallGroups identifier <order, index>.
struct GroupId {
  int order = 0;
  int index = 0;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

std::string format_id(const GroupId& id);  // "243,5"
/// Accepts "243,5", "<243,5>" and "243/5". Throws ParseError.
GroupId parse_id(std::string_view text);

/// Parameters of the two-generator family with relations
///   s2^3 = sigma4 sigma_c^(-rho beta) tau4^-1,
///   s3 sigma3 sigma4 = sigma_(c-1)^(rho beta) sigma_c^gamma tau_(r+1)^delta,
///   t3^-1 tau3 tau4 = sigma_(c-1)^(rho delta) sigma_c^alpha tau_(r+1)^beta,
///   tau_(r+2) = sigma_c^-rho.
struct PresentationParams {
  int c = 0;
  int r = 0;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  int rho = 0;
  friend bool operator==(const PresentationParams&, const PresentationParams&) = default;
};

/// Text of the family presentation with `let` definitions for the four
/// commutator series. For c = 3 the factor sigma_(c-1) = sigma_2 is not
/// defined and is read as the identity. Throws UnsupportedParams.
std::string parametrized_presentation_text(const PresentationParams& p);
Presentation parametrized_presentation(const PresentationParams& p);

struct CatalogEntry {
  GroupId id;
  /// Presentation in the text format of parse_presentation.
  std::string presentation_text;
  Presentation presentation;
  std::optional<PresentationParams> params;
  GroupDescriptor expected;
  std::array<AbelianInvariants, 4> expected_tau1;
  AbelianInvariants expected_tau2;
  std::optional<Kappa> expected_kappa;
  /// Id of G / gamma_c(G), where the catalog records it.
  std::optional<GroupId> parent;
  /// Which invariants identified the presentation with the id.
  std::string evidence;
};

/// Every named group, in id order. Loaded once from the embedded catalog.
const std::vector<CatalogEntry>& catalog();
/// Throws UnknownId.
const CatalogEntry& lookup(GroupId id);

/// Parses the catalog file format (see data/catalog.txt). Throws
/// CatalogFormatError.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

struct ValidationReport {
  bool ok = false;
  std::size_t order = 0;
  GroupDescriptor descriptor;
  ArtinPattern pattern;
  std::vector<std::string> mismatches;
};

/// Realizes the entry and compares order, descriptor, tau1 (as a multiset),
/// tau2, the kernel type up to equivalence if given, and that the quotient
/// by the last lower central term is isomorphic to the recorded parent.
ValidationReport validate(const CatalogEntry& entry, const RealizeOptions& options = {});

}  // namespace coclass
