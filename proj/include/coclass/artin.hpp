#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/group.hpp"

namespace coclass {

/// Transfer from G to a subgroup H of index 3, tabulated on G/G'.
struct Transfer {
  /// Least element of each coset of G', ascending.
  std::vector<Element> cosets;
  /// For each coset, the least element of T(coset) * H'.
  std::vector<Element> images;
  /// Preimage in G of the kernel; contains G'.
  Subgroup kernel;
};

/// Artin transfer T: G/G' -> H/H'. The transversal defaults to {1, t, t^2}
/// for the least t outside H. Throws NotIndexThree or DerivedNotContained.
Transfer transfer(const ConcreteGroup& g, const Subgroup& h,
                  std::optional<std::array<Element, 3>> transversal = std::nullopt);

/// Kernel digit for a trivial kernel. Not expected for metabelian groups of
/// order at least 27.
inline constexpr int kTrivialKernel = -1;

using Kappa = std::array<int, 4>;

struct ArtinPattern {
  AbelianInvariants tau0;
  std::array<AbelianInvariants, 4> tau1;
  AbelianInvariants tau2;
  /// 0: total kernel, j: kernel is H_j / G', kTrivialKernel: trivial kernel.
  Kappa kappa{};

  friend bool operator==(const ArtinPattern&, const ArtinPattern&) = default;
};

/// Throws WrongAbelianization unless G/G' is (3,3).
ArtinPattern artin_pattern(const ConcreteGroup& g);

/// True iff a relabeling pi of the four maximal subgroups carries a.tau1 to
/// b.tau1 and a.kappa to b.kappa, with b.kappa[pi(i)] = pi(a.kappa[i]) and 0
/// fixed.
bool equivalent(const ArtinPattern& a, const ArtinPattern& b);
/// The same relation on kernel types alone.
bool kappa_equivalent(const Kappa& a, const Kappa& b);
/// Least representative of the kernel type class in digit-string order.
Kappa canonical_kappa(const Kappa& k);

std::string format_kappa(const Kappa& k);
/// Four characters from 0-4 or '*'. Throws ParseError.
Kappa parse_kappa(std::string_view text);
/// "(21,21,1^3,1^3)"; the list elements drop their own parentheses.
std::string format_tau1(const std::array<AbelianInvariants, 4>& tau1);
/// Accepts the form written by format_tau1, tolerating a trailing comma.
std::array<AbelianInvariants, 4> parse_tau1(std::string_view text);
/// `tau = [(1^2); (21,21,21,21); (1^3)]  kappa = (2241)`
std::string format_pattern(const ArtinPattern& p);
/// [tau0; tau1]
std::string format_ipad(const ArtinPattern& p);

/// Capitulation type name (a.1, D.10, ...) of a kernel type, if listed.
std::optional<std::string> capitulation_type(const Kappa& k);

struct CapitulationType {
  std::string_view name;
  std::string_view kappa;
};
/// The named capitulation types with one representative each.
std::span<const CapitulationType> capitulation_types();

}  // namespace coclass
