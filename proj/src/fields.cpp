#include "coclass/fields.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "coclass/errors.hpp"

namespace coclass {

std::string_view format_family(Family f) {
  switch (f) {
    case Family::imaginary_quadratic: return "imaginary-quadratic";
    case Family::real_quadratic: return "real-quadratic";
    case Family::cyclic_cubic: return "cyclic-cubic";
    case Family::pure_sextic: return "pure-sextic";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    s += ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  static const std::map<std::string, Family> names{
      {"imaginary-quadratic", Family::imaginary_quadratic},
      {"imaginary", Family::imaginary_quadratic},
      {"real-quadratic", Family::real_quadratic},
      {"real", Family::real_quadratic},
      {"cyclic-cubic", Family::cyclic_cubic},
      {"cubic", Family::cyclic_cubic},
      {"pure-sextic", Family::pure_sextic},
      {"sextic", Family::pure_sextic},
  };
  const auto it = names.find(s);
  if (it == names.end()) throw UnsupportedFamily("unknown field family '" + std::string(text) + "'");
  return it->second;
}

bool operator==(const FieldRecord& a, const FieldRecord& b) {
  return a.family == b.family && a.label == b.label && a.factorization == b.factorization &&
         a.tau == b.tau && a.ct == b.ct && a.kappa == b.kappa && a.nu == b.nu && a.m == b.m &&
         a.extra == b.extra && a.cc == b.cc && a.cl == b.cl;
}

namespace {

constexpr std::string_view kHeader =
    "family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra,cc,cl";
constexpr std::size_t kRequiredColumns = 12;
constexpr std::size_t kAllColumns = 14;

struct RowError {
  std::string message;
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw RowError{"unterminated quote"};
  for (auto& f : out) {
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    f.erase(0, f.find_first_not_of(" \t"));
  }
  return out;
}

std::optional<int> optional_int(const std::string& s, const char* what) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw RowError{std::string("bad integer in column ") + what + ": '" + s + "'"};
  }
}

bool looks_like_ati(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '^' || ch == '(' || ch == ')' ||
           ch == ',';
  });
}

FieldRecord parse_row(const std::vector<std::string>& f, std::size_t line) {
  std::size_t atis = 0;
  while (3 + atis < f.size() && looks_like_ati(f[3 + atis])) ++atis;
  if (atis != 4) {
    throw RowError{"expected 4 extension invariants, found " + std::to_string(atis)};
  }
  if (f.size() < kRequiredColumns || f.size() > kAllColumns) {
    throw RowError{"expected " + std::to_string(kRequiredColumns) + " to " +
                   std::to_string(kAllColumns) + " columns, got " + std::to_string(f.size())};
  }
  FieldRecord rec;
  rec.line = line;
  try {
    rec.family = parse_family(f[0]);
  } catch (const UnsupportedFamily& e) {
    throw RowError{e.what()};
  }
  try {
    std::size_t used = 0;
    rec.label = std::stoll(f[1], &used);
    if (used != f[1].size() || rec.label <= 0) throw std::invalid_argument(f[1]);
  } catch (const std::exception&) {
    throw RowError{"label must be a positive integer, got '" + f[1] + "'"};
  }
  rec.factorization = f[2];
  for (int i = 0; i < 4; ++i) {
    const std::string& cell = f[3 + i];
    try {
      rec.tau[i] = parse_log(cell);
    } catch (const ParseError& e) {
      throw RowError{"ati" + std::to_string(i + 1) + ": " + e.what()};
    }
    if (rec.tau[i].trivial()) {
      throw RowError{"ati" + std::to_string(i + 1) + " is trivial; each 3-class number is at least 3"};
    }
  }
  rec.ct = f[7];
  if (!f[8].empty()) {
    std::string k = f[8];
    std::erase(k, '(');
    std::erase(k, ')');
    try {
      rec.kappa = parse_kappa(k);
    } catch (const ParseError& e) {
      throw RowError{std::string("kappa: ") + e.what()};
    }
  }
  rec.nu = optional_int(f[9], "nu");
  rec.m = optional_int(f[10], "m");
  rec.extra = f[11];
  if (f.size() > 12) rec.cc = optional_int(f[12], "cc");
  if (f.size() > 13) rec.cl = optional_int(f[13], "cl");
  return rec;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Compact digits ("21", "111") as in the tables; exponents above 9 fall
// back to the bracketed form.
std::string ati_cell(const AbelianInvariants& a) {
  std::string out;
  for (int e : a.exponents()) {
    if (e > 9) return csv_field(format_log(a));
    out += static_cast<char>('0' + e);
  }
  return out;
}

}  // namespace

LoadResult parse_records(std::string_view csv, Validation mode) {
  LoadResult result;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      header = true;
      if (line.rfind("family,", 0) == 0) continue;
      const std::string msg = "missing header row (" + std::string(kHeader) + ")";
      if (mode == Validation::strict) throw RecordError("line " + std::to_string(line_no) + ": " + msg);
      result.diagnostics.push_back({line_no, msg});
    }
    try {
      result.records.push_back(parse_row(split_csv(line), line_no));
    } catch (const RowError& e) {
      if (mode == Validation::strict) {
        throw RecordError("line " + std::to_string(line_no) + ": " + e.message);
      }
      result.diagnostics.push_back({line_no, e.message});
    }
  }
  return result;
}

LoadResult load_records(const std::filesystem::path& path, Validation mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RecordError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_records(buf.str(), mode);
}

std::string save_records(const std::vector<FieldRecord>& records) {
  std::ostringstream out;
  out << kHeader << '\n';
  const auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : records) {
    out << format_family(r.family) << ',' << r.label << ',' << csv_field(r.factorization);
    for (const auto& t : r.tau) out << ',' << ati_cell(t);
    std::string kappa;
    if (r.kappa) {
      kappa = format_kappa(*r.kappa);
      std::erase(kappa, '(');
      std::erase(kappa, ')');
    }
    out << ',' << csv_field(r.ct) << ',' << kappa << ',' << opt(r.nu) << ',' << opt(r.m) << ','
        << csv_field(r.extra) << ',' << opt(r.cc) << ',' << opt(r.cl) << '\n';
  }
  return out.str();
}

Classification classify(const FieldRecord& rec, Validation mode) {
  std::array<int, 4> lo;
  for (int i = 0; i < 4; ++i) lo[i] = rec.tau[i].log_order();
  Classification out;
  out.verdict = coclass_from_class_numbers(lo, mode);
  std::sort(lo.begin(), lo.end(), std::greater<>());
  out.copolarization_lo = lo[1];
  if (rec.cc || rec.cl) {
    bool agree = true;
    if (rec.cc) agree = agree && *rec.cc == out.verdict.coclass;
    if (rec.cl) agree = agree && (*rec.cl == 1) == out.verdict.abelian;
    out.agrees_with_table = agree;
  }
  return out;
}

std::vector<MinimalRow> minimal_table(const std::vector<FieldRecord>& records, Family family) {
  std::map<int, const FieldRecord*> best;
  for (const auto& r : records) {
    if (r.family != family) continue;
    const int cc = classify(r).verdict.coclass;
    auto [it, fresh] = best.try_emplace(cc, &r);
    if (!fresh && r.label < it->second->label) it->second = &r;
  }
  std::vector<MinimalRow> out;
  for (const auto& [cc, rec] : best) out.push_back({cc, *rec});
  return out;
}

std::int64_t discriminant_from_conductor(Family family, std::int64_t f) {
  if (f <= 0) throw std::invalid_argument("conductor must be positive");
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  switch (family) {
    case Family::cyclic_cubic:
      if (f > kMax / f) throw std::overflow_error("discriminant exceeds 64 bits");
      return f * f;
    case Family::pure_sextic: {
      std::int64_t v = 27;
      for (int i = 0; i < 4; ++i) {
        if (v > kMax / f) throw std::overflow_error("discriminant exceeds 64 bits");
        v *= f;
      }
      return -v;
    }
    default:
      throw UnsupportedFamily("conductor formula applies to cyclic cubic and pure sextic fields, not " +
                              std::string(format_family(family)));
  }
}

}  // namespace coclass
