#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coclass {

/// A word in the free group. Letter +k is generator k (1-based), -k its
/// inverse. The empty word is the identity.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// a^n for any integer n; negative n inverts.
Word power(const Word& w, int n);
/// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
/// Cancels adjacent inverse pairs.
Word free_reduce(const Word& w);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  int generator_count() const {
    return static_cast<int>(generator_names.size());
  }

  /// Throws InvalidPresentation if a relator references an undeclared
  /// generator or the generator list is empty.
  void validate() const;
};

/// Parses the plain-text presentation format:
///
///     gens x y
///     let s2 = [y,x]          # named subword, expanded in place
///     x^3
///     s2^3 = [s2,x]^-1        # relations become lhs * rhs^-1
///
/// Words are juxtapositions of generator names, their inverses (X = x^-1 for
/// single-letter lowercase names), `let` names, parenthesized words,
/// left-normed commutators [a,b,c] = [[a,b],c] and integer powers w^n. The
/// literal `1` denotes the identity. `#` starts a comment.
Presentation parse_presentation(std::string_view text);

/// Parses one word against an existing presentation's generator names.
Word parse_word(std::string_view text, const Presentation& p);

std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Writes `gens ...` followed by one relator per line in a form accepted by
/// parse_presentation.
std::string format_presentation(const Presentation& p);

}  // namespace coclass
