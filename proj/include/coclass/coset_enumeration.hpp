#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coclass/presentation.hpp"

namespace coclass {

/// Complete coset table of a subgroup of finite index. Column 2i holds the
/// action of generator i+1 and column 2i+1 the action of its inverse. Coset 0
/// is the subgroup itself.
struct CosetTable {
  std::size_t index = 0;
  int columns = 0;
  std::vector<std::uint32_t> entries;  // row-major, index * columns

  std::uint32_t at(std::size_t coset, int column) const {
    return entries[coset * static_cast<std::size_t>(columns) +
                   static_cast<std::size_t>(column)];
  }
};

struct EnumerationLimits {
  /// Largest index accepted in the final table.
  std::size_t max_index = 6561;
  /// Number of coset rows the enumerator may hold at once. Zero picks a
  /// default proportional to max_index.
  std::size_t workspace = 0;
};

/// Hasse-Leech-Trotter coset enumeration with lookahead. Throws
/// EnumerationOverflow when the workspace is exhausted or the final index
/// exceeds limits.max_index.
CosetTable enumerate_cosets(const Presentation& p,
                            const std::vector<Word>& subgroup_generators,
                            const EnumerationLimits& limits);

/// Column index of a letter (+k -> 2(k-1), -k -> 2(k-1)+1).
inline int letter_column(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

}  // namespace coclass
