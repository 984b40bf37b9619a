#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/coset_enumeration.hpp"
#include "coclass/presentation.hpp"

namespace coclass {

using Element = std::uint32_t;

/// A subgroup stored as its sorted element indices together with a
/// (small, not necessarily minimal) generating set.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<Element> sorted_elements, std::vector<Element> generators)
      : elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

  std::span<const Element> elements() const { return elements_; }
  std::span<const Element> generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element e) const;
  /// Subset test on element sets.
  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<Element> generators_;
};

/// A finite group realized by its right regular action. Elements are the
/// indices 0..order-1 with 0 the identity, numbered in breadth-first order
/// over the generator letters x, x^-1, y, y^-1, ... Immutable after
/// construction.
class ConcreteGroup {
 public:
  /// Builds the group from a complete coset table of the trivial subgroup.
  explicit ConcreteGroup(const CosetTable& table);

  std::size_t order() const { return inverses_.size(); }
  Element identity() const { return 0; }
  int generator_count() const { return columns_ / 2; }
  /// Element represented by generator i (0-based).
  Element generator(int i) const { return act(0, 2 * i); }
  std::vector<Element> generators() const;

  /// Right multiplication by a generator letter column.
  Element act(Element a, int column) const {
    return actions_[static_cast<std::size_t>(a) * columns_ +
                    static_cast<std::size_t>(column)];
  }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, long long n) const;
  /// [a,b] = a^-1 b^-1 a b
  Element commutator(Element a, Element b) const;
  /// a^b = b^-1 a b
  Element conjugate(Element a, Element b) const;
  int element_order(Element a) const;
  Element evaluate(const Word& w) const;
  /// Breadth-first normal form of an element as generator column path.
  std::span<const std::uint8_t> path(Element e) const;
  Word word(Element e) const;

  Subgroup whole() const;
  Subgroup trivial() const;
  /// Subgroup generated by gens.
  Subgroup generate(std::span<const Element> gens) const;
  /// Subgroup with the given element set; a generating set is chosen
  /// greedily. The input must be closed under multiplication.
  Subgroup from_elements(std::vector<Element> elements) const;
  /// Smallest subgroup of `within` that contains gens and is normalized by
  /// `within`.
  Subgroup normal_closure(std::span<const Element> gens, const Subgroup& within) const;
  Subgroup normal_closure(std::span<const Element> gens) const {
    return normal_closure(gens, whole());
  }
  bool is_normal(const Subgroup& h) const;

  /// Elements x of g mapped to the least element of the left coset x*H.
  std::vector<Element> coset_labels(const Subgroup& h) const;

 private:
  int columns_ = 0;
  std::vector<Element> actions_;  // order * columns_
  std::vector<Element> inverses_;
  std::vector<std::uint32_t> path_offsets_;
  std::vector<std::uint8_t> path_data_;
};

struct RealizeOptions {
  /// 3^8 by default; the CLI reads COCLASS_ORDER_BOUND.
  std::size_t order_bound = 6561;
};

/// Coset enumeration over the trivial subgroup. Throws InvalidPresentation or
/// EnumerationOverflow.
ConcreteGroup realize(const Presentation& p, const RealizeOptions& options = {});

/// Quotient g/n for a normal subgroup n, realized on the cosets.
ConcreteGroup quotient(const ConcreteGroup& g, const Subgroup& n);

Subgroup join(const ConcreteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const ConcreteGroup& g, const Subgroup& a, const Subgroup& b);
/// [A,B] as the normal closure in <A,B> of the generator commutators.
Subgroup commutator_subgroup(const ConcreteGroup& g, const Subgroup& a,
                             const Subgroup& b);
Subgroup derived_subgroup(const ConcreteGroup& g, const Subgroup& h);
Subgroup center(const ConcreteGroup& g);

/// gamma_1 = G, gamma_{j+1} = [gamma_j, G], ending with the trivial group.
std::vector<Subgroup> lower_central_series(const ConcreteGroup& g);
/// zeta_0 = 1 up to zeta_c = G.
std::vector<Subgroup> upper_central_series(const ConcreteGroup& g);

/// Census |{h in H : h^(3^k) in H'}| / |H'| decoded into invariants of H/H'.
AbelianInvariants abelian_quotient_invariants(const ConcreteGroup& g,
                                              const Subgroup& h);
/// Invariants of the section U/V for normal V <= U with U/V abelian.
AbelianInvariants section_invariants(const ConcreteGroup& g, const Subgroup& upper,
                                     const Subgroup& lower);

/// (n, c, r, k) of a group with abelianization (3,3).
struct GroupDescriptor {
  int n = 0;  // log_3 of the order
  int c = 0;  // nilpotency class
  int r = 0;  // coclass
  int k = 0;  // defect of commutativity

  int nilpotency_index() const { return c + 1; }
  int cf_invariant() const { return r + 1; }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Throws WrongAbelianization unless G/G' is (3,3).
GroupDescriptor descriptor(const ConcreteGroup& g);

/// The four subgroups of index 3 above G', sorted by descending logarithmic
/// order of H/H', then by abelian invariants of H/H' in ascending order, then
/// by lexicographically least element set.
std::vector<Subgroup> maximal_subgroups(const ConcreteGroup& g);

/// Every normal subgroup exactly once, sorted by order then element set.
std::vector<Subgroup> normal_subgroups(const ConcreteGroup& g);

/// chi_j = largest subgroup X with [X, gamma_j] <= gamma_{j+2}.
Subgroup two_step_centralizer(const ConcreteGroup& g,
                              const std::vector<Subgroup>& lower_central, int j);

/// Images of the generators of p under some epimorphism from the group
/// presented by p onto h, if one exists. Exhaustive over generator images
/// outside the Frattini subgroup, so meant for two-generator groups of order
/// at most a few thousand.
std::optional<std::vector<Element>> find_epimorphism(const Presentation& p,
                                                     const ConcreteGroup& h);
/// Isomorphism test for a realized g presented by p.
bool isomorphic(const Presentation& p, const ConcreteGroup& g, const ConcreteGroup& h);

int log3_order(std::size_t order);

}  // namespace coclass
