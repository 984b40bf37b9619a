#include "coclass/rules.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "coclass/errors.hpp"
#include "embedded_data.hpp"

namespace coclass {

CoclassVerdict coclass_from_class_numbers(const std::array<int, 4>& log_orders,
                                          Validation mode) {
  std::array<int, 4> e = log_orders;
  for (int v : e) {
    if (v < 1) throw std::invalid_argument("3-class numbers must be at least 3");
  }
  std::sort(e.begin(), e.end(), std::greater<>());
  const CoclassVerdict verdict =
      e[1] == 1 ? CoclassVerdict{1, true} : CoclassVerdict{e[1] - 1, false};
  if (mode == Validation::strict) {
    const auto show = [&] {
      std::ostringstream s;
      s << '(' << log_orders[0] << ',' << log_orders[1] << ',' << log_orders[2] << ','
        << log_orders[3] << ')';
      return s.str();
    };
    if (verdict.abelian && e[0] != 1) {
      throw InconsistentPattern("log orders " + show() +
                                ": an abelian group needs all four equal to 1");
    }
    if (!verdict.abelian && verdict.coclass == 1 && (e[2] != 2 || e[3] != 2)) {
      throw InconsistentPattern("log orders " + show() +
                                ": coclass 1 needs the three smallest equal to 2");
    }
    if (verdict.coclass >= 2 && (e[2] != 3 || e[3] != 3)) {
      throw InconsistentPattern("log orders " + show() +
                                ": coclass >= 2 needs the two smallest equal to 3");
    }
  }
  return verdict;
}

std::string_view format_tree(TreeTag t) {
  switch (t) {
    case TreeTag::T40: return "T40";
    case TreeTag::T49: return "T49";
    case TreeTag::T54: return "T54";
    case TreeTag::NotApplicable: return "n/a";
  }
  return "n/a";
}

TreeTag parse_tree(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
  }
  if (s.size() > 4 && s.compare(0, 4, "729,") == 0) s = "T" + s.substr(4);
  if (!s.empty() && s[0] != 'T' && s != "N/A") s = "T" + s;
  if (s == "T40") return TreeTag::T40;
  if (s == "T49") return TreeTag::T49;
  if (s == "T54") return TreeTag::T54;
  if (s == "N/A" || s == "TNONE") return TreeTag::NotApplicable;
  throw ParseError("tree must be T40, T49, T54 or n/a", 0);
}

bool in_regular_range(int c, int r, int k) {
  if (k < 0 || k > 1 || r < 1 || c < r + 1) return false;
  if (r == 1) return c >= 4;
  if (r == 2) return c >= 5 || (c == 4 && k == 0);
  // Interface groups (c = r + 1) have k = 0.
  if (c == r + 1) return k == 0;
  return !(c == r + 2 && k == 1);
}

PredictedTTT predict_ttt(int c, int r, int k, TreeTag tree) {
  if (!in_regular_range(c, r, k)) {
    throw OutsideRegularRange("(c,r,k) = (" + std::to_string(c) + "," + std::to_string(r) +
                              "," + std::to_string(k) +
                              ") is outside the regular range; see the exceptions table");
  }
  const AbelianInvariants three{1, 1, 1};
  PredictedTTT out;
  out.tau1[0] = nearly_homocyclic(c - k);
  out.tau1[1] = nearly_homocyclic(r + 1);
  if (r == 1) {
    out.tau1[2] = out.tau1[3] = nearly_homocyclic(r + 1);
  } else if (r >= 3) {
    out.tau1[2] = out.tau1[3] = three;
  } else {
    switch (tree) {
      case TreeTag::T54:
        out.tau1[2] = out.tau1[3] = nearly_homocyclic(r + 1);
        break;
      case TreeTag::T49:
        out.tau1[2] = three;
        out.tau1[3] = nearly_homocyclic(r + 1);
        break;
      case TreeTag::T40:
        out.tau1[2] = out.tau1[3] = three;
        break;
      case TreeTag::NotApplicable:
        throw MissingTree("coclass 2 needs one of the trees T40, T49, T54");
    }
  }
  out.tau2 = direct_product(nearly_homocyclic(c - 1), nearly_homocyclic(r - 1));
  return out;
}

std::optional<TreeTag> tree_from_stabilization(const std::array<AbelianInvariants, 4>& tau1) {
  const AbelianInvariants three{1, 1, 1};
  const AbelianInvariants a3 = nearly_homocyclic(3);
  std::array<AbelianInvariants, 4> sorted = tau1;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.log_order() > b.log_order();
  });
  int n_three = 0;
  int n_a3 = 0;
  for (int i = 1; i < 4; ++i) {
    n_three += sorted[i] == three ? 1 : 0;
    n_a3 += sorted[i] == a3 ? 1 : 0;
  }
  // Co-polarization A(3,3) is one of the last three entries.
  if (n_three + n_a3 != 3 || n_a3 == 0) return std::nullopt;
  switch (n_a3) {
    case 1: return TreeTag::T40;
    case 2: return TreeTag::T49;
    default: return TreeTag::T54;
  }
}

namespace {

std::vector<GroupId> parse_id_range(const std::string& text, std::size_t line) {
  const std::size_t comma = text.find(',');
  const std::size_t dash = text.find('-');
  try {
    if (dash == std::string::npos) return {parse_id(text)};
    const GroupId first = parse_id(text.substr(0, dash));
    const int last = std::stoi(text.substr(dash + 1));
    if (comma == std::string::npos || last < first.index) throw std::invalid_argument("range");
    std::vector<GroupId> ids;
    for (int i = first.index; i <= last; ++i) ids.push_back({first.order, i});
    return ids;
  } catch (const std::exception&) {
    throw CatalogFormatError("table line " + std::to_string(line) + ": bad id range '" +
                             text + "'");
  }
}

bool parse_remark(const std::string& s, std::size_t line) {
  if (s == "regular") return true;
  if (s == "irregular") return false;
  throw CatalogFormatError("table line " + std::to_string(line) +
                           ": remark must be regular or irregular, got '" + s + "'");
}

}  // namespace

std::vector<ExceptionRow> parse_exception_rows(std::string_view text) {
  std::vector<ExceptionRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string w; fields >> w;) f.push_back(w);
    if (f.empty()) continue;
    if (f.size() != 8) {
      throw CatalogFormatError("table line " + std::to_string(line_no) + ": expected 8 columns");
    }
    ExceptionRow row;
    row.ids = parse_id_range(f[0], line_no);
    try {
      row.c = std::stoi(f[1]);
      row.r = std::stoi(f[2]);
      row.k = std::stoi(f[3]);
      row.tau1 = parse_tau1(f[4]);
      row.tau2 = parse_log(f[6]);
    } catch (const std::exception& e) {
      throw CatalogFormatError("table line " + std::to_string(line_no) + ": " + e.what());
    }
    row.tau1_regular = parse_remark(f[5], line_no);
    row.tau2_regular = parse_remark(f[7], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::span<const ExceptionRow> exception_rows() {
  static const std::vector<ExceptionRow> rows = parse_exception_rows(embedded::table1_text());
  return rows;
}

const ExceptionRow& exceptions_table(GroupId id) {
  for (const auto& row : exception_rows()) {
    if (std::find(row.ids.begin(), row.ids.end(), id) != row.ids.end()) return row;
  }
  throw NotExceptional("<" + format_id(id) + "> is not in the exceptions table");
}

AbelianInvariants commutator_structure(int c, int r, bool irregular) {
  if (r < 1 || (c < r + 1 && !(c == 1 && r == 1))) {
    throw std::invalid_argument("commutator structure needs r >= 1 and c >= r + 1");
  }
  if (irregular) {
    if (c % 2 != 0 || r != c - 2) {
      throw IrregularNotPossible("homocyclic commutator subgroup needs even c and r = c - 2");
    }
    return direct_product(nearly_homocyclic(c - 2), nearly_homocyclic(c - 2));
  }
  return direct_product(nearly_homocyclic(c - 1), nearly_homocyclic(r - 1));
}

bool irregularity_from_params(int r, int rho, int beta) {
  if (r < 2) throw std::invalid_argument("the parameter criterion needs r >= 2");
  if (r == 2) return rho != 0 && rho == beta - 1;
  if (r % 2 == 0) return rho == -1;
  return false;
}

}  // namespace coclass
