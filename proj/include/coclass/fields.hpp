#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/artin.hpp"
#include "coclass/rules.hpp"

namespace coclass {

enum class Family { imaginary_quadratic, real_quadratic, cyclic_cubic, pure_sextic };

std::string_view format_family(Family f);
/// "imaginary-quadratic", "real-quadratic", "cyclic-cubic", "pure-sextic";
/// underscores and the short forms "imaginary", "real", "cubic", "sextic"
/// are accepted too. Throws UnsupportedFamily.
Family parse_family(std::string_view text);

/// One row of a field table. The label is |d| for quadratic fields and the
/// conductor f otherwise.
struct FieldRecord {
  Family family = Family::imaginary_quadratic;
  std::int64_t label = 0;
  std::string factorization;
  std::array<AbelianInvariants, 4> tau;
  std::string ct;
  std::optional<Kappa> kappa;
  std::optional<int> nu;
  std::optional<int> m;
  /// Graph (cyclic cubic) or Dedekind species (pure sextic).
  std::string extra;
  /// Coclass and class as tabulated, when given.
  std::optional<int> cc;
  std::optional<int> cl;
  /// 1-based line in the source file, 0 if not read from a file.
  std::size_t line = 0;

  friend bool operator==(const FieldRecord& a, const FieldRecord& b);
};

struct RecordDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  std::vector<FieldRecord> records;
  /// Rows skipped in lenient mode.
  std::vector<RecordDiagnostic> diagnostics;
};

/// CSV with header
///   family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra[,cc,cl]
/// Fields may be double-quoted. Lenient mode skips malformed rows with a
/// diagnostic; strict mode throws RecordError on the first one.
LoadResult parse_records(std::string_view csv, Validation mode = Validation::lenient);
/// Reads the file and calls parse_records. Throws RecordError if the file
/// cannot be read.
LoadResult load_records(const std::filesystem::path& path,
                        Validation mode = Validation::lenient);
/// Inverse of parse_records on well-formed records (lines are not kept).
std::string save_records(const std::vector<FieldRecord>& records);

struct Classification {
  CoclassVerdict verdict;
  /// Second largest log order among the four 3-class groups.
  int copolarization_lo = 0;
  /// Whether the verdict agrees with the tabulated cc and cl, if present.
  std::optional<bool> agrees_with_table;
};

/// Applies coclass_from_class_numbers to the log orders of rec.tau.
Classification classify(const FieldRecord& rec, Validation mode = Validation::lenient);

struct MinimalRow {
  int coclass = 0;
  FieldRecord record;
};

/// For each coclass among the records of the given family, the record with
/// the least label; sorted by coclass.
std::vector<MinimalRow> minimal_table(const std::vector<FieldRecord>& records, Family family);

/// d = f^2 for cyclic cubic fields, d = -27 f^4 for pure sextic fields.
/// Throws UnsupportedFamily, or std::overflow_error past 64 bits.
std::int64_t discriminant_from_conductor(Family family, std::int64_t f);

}  // namespace coclass
