#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coclass {

/// Abelian type invariants of a finite abelian 3-group in logarithmic form.
///
/// The group (27,9,9,3) is stored as the exponent list {3,2,2,1}: each entry m
/// stands for a cyclic factor of order 3^m. The list is kept sorted in
/// non-increasing order and never contains zeros, so the trivial group is the
/// empty list.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;

  /// Accepts exponents in any order; zeros are dropped, negatives rejected.
  explicit AbelianInvariants(std::vector<int> exponents);
  AbelianInvariants(std::initializer_list<int> exponents)
      : AbelianInvariants(std::vector<int>(exponents)) {}

  std::span<const int> exponents() const { return exponents_; }
  int log_order() const;
  int rank() const { return static_cast<int>(exponents_.size()); }
  bool trivial() const { return exponents_.empty(); }

  friend bool operator==(const AbelianInvariants&,
                         const AbelianInvariants&) = default;
  friend std::strong_ordering operator<=>(const AbelianInvariants& a,
                                          const AbelianInvariants& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<int> exponents_;
};

/// Decodes the census |{x : x^(3^k) = 1}| for k = 0,1,2,... into the unique
/// abelian invariants reproducing it. Keys must be consecutive from 0 and the
/// last two values must coincide (the census has reached the group order).
/// Throws NonRealizableCounts otherwise.
AbelianInvariants ati_from_order_counts(
    const std::map<int, std::uint64_t>& counts);

/// The rank-2 nearly homocyclic group A(3,n): exponents differ by at most one
/// and sum to n. A(3,0) is trivial and A(3,1) is cyclic of order 3.
AbelianInvariants nearly_homocyclic(int n);

AbelianInvariants direct_product(const AbelianInvariants& a,
                                 const AbelianInvariants& b);

/// Compact logarithmic notation, e.g. "(21^4)" or "(4^23^2)". Repetition
/// counts above 9 are written "^{12}". Any exponent of 10 or more switches
/// to the comma separated form "(12,3,3)".
std::string format_log(const AbelianInvariants& a);

/// Inverse of format_log. Surrounding parentheses are optional, "(0)" is read
/// as the trivial group. Throws ParseError on malformed input.
AbelianInvariants parse_log(std::string_view text);

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a);

}  // namespace coclass
