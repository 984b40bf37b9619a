#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"
#include "embedded_data.hpp"

namespace coclass {

std::string format_id(const GroupId& id) {
  return std::to_string(id.order) + "," + std::to_string(id.index);
}

GroupId parse_id(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
    ++base;
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    text = text.substr(1, text.size() - 2);
    ++base;
  }
  const std::size_t sep = text.find_first_of(",/");
  if (sep == std::string_view::npos) throw ParseError("group id needs ORDER,INDEX", base);
  GroupId id;
  const auto number = [&](std::string_view part, std::size_t at, int& out) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty() || out <= 0) {
      throw ParseError("group id needs positive integers", at);
    }
  };
  number(text.substr(0, sep), base, id.order);
  number(text.substr(sep + 1), base + sep + 1, id.index);
  return id;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw CatalogFormatError("catalog line " + std::to_string(line) + ": " + what);
}

// "c=3 r=2 ..." into a map.
std::map<std::string, int> key_values(std::string_view text, std::size_t line) {
  std::map<std::string, int> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) fail(line, "expected key=value, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(line, "bad integer in '" + item + "'");
    }
  }
  return out;
}

int required(const std::map<std::string, int>& kv, const char* key, std::size_t line) {
  const auto it = kv.find(key);
  if (it == kv.end()) fail(line, std::string("missing ") + key);
  return it->second;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::optional<CatalogEntry> cur;
  bool in_presentation = false;
  bool have_expect = false, have_tau1 = false, have_tau2 = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const std::string_view line = trim(raw);

    if (in_presentation) {
      if (line == "end") {
        in_presentation = false;
        try {
          cur->presentation = parse_presentation(cur->presentation_text);
        } catch (const Error& e) {
          fail(line_no, format_id(cur->id) + ": " + e.what());
        }
        if (!have_expect || !have_tau1 || !have_tau2) {
          fail(line_no, format_id(cur->id) + ": record needs expect, tau1 and tau2");
        }
        out.push_back(std::move(*cur));
        cur.reset();
      } else {
        cur->presentation_text += std::string(raw) + "\n";
      }
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    const std::size_t space = line.find(' ');
    const std::string_view key = line.substr(0, space);
    const std::string_view value =
        space == std::string_view::npos ? std::string_view() : trim(line.substr(space));
    if (key == "id") {
      if (cur) fail(line_no, "record " + format_id(cur->id) + " is missing 'end'");
      cur.emplace();
      have_expect = have_tau1 = have_tau2 = false;
      try {
        cur->id = parse_id(value);
      } catch (const ParseError& e) {
        fail(line_no, e.what());
      }
      continue;
    }
    if (!cur) fail(line_no, "field outside a record");
    try {
      if (key == "expect") {
        const auto kv = key_values(value, line_no);
        cur->expected.c = required(kv, "c", line_no);
        cur->expected.r = required(kv, "r", line_no);
        cur->expected.k = required(kv, "k", line_no);
        cur->expected.n = cur->expected.c + cur->expected.r;
        have_expect = true;
      } else if (key == "tau1") {
        cur->expected_tau1 = parse_tau1(value);
        have_tau1 = true;
      } else if (key == "tau2") {
        cur->expected_tau2 = parse_log(value);
        have_tau2 = true;
      } else if (key == "kappa") {
        cur->expected_kappa = parse_kappa(value);
      } else if (key == "params") {
        const auto kv = key_values(value, line_no);
        PresentationParams p;
        p.c = required(kv, "c", line_no);
        p.r = required(kv, "r", line_no);
        p.alpha = required(kv, "alpha", line_no);
        p.beta = required(kv, "beta", line_no);
        p.gamma = required(kv, "gamma", line_no);
        p.delta = required(kv, "delta", line_no);
        p.rho = required(kv, "rho", line_no);
        cur->params = p;
      } else if (key == "parent") {
        cur->parent = parse_id(value);
      } else if (key == "evidence") {
        cur->evidence = std::string(value);
      } else if (key == "presentation") {
        in_presentation = true;
      } else {
        fail(line_no, "unknown field '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      fail(line_no, e.what());
    }
  }
  if (cur) fail(line_no, "record " + format_id(cur->id) + " is missing 'end'");
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].id == out[i - 1].id) {
      throw CatalogFormatError("duplicate catalog id " + format_id(out[i].id));
    }
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = parse_catalog(embedded::catalog_text());
  return entries;
}

const CatalogEntry& lookup(GroupId id) {
  const auto& all = catalog();
  const auto it = std::lower_bound(all.begin(), all.end(), id,
                                   [](const CatalogEntry& e, const GroupId& x) { return e.id < x; });
  if (it == all.end() || it->id != id) {
    throw UnknownId("no catalog entry for <" + format_id(id) + ">");
  }
  return *it;
}

namespace {

std::vector<AbelianInvariants> sorted_list(const std::array<AbelianInvariants, 4>& a) {
  std::vector<AbelianInvariants> v(a.begin(), a.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ValidationReport validate(const CatalogEntry& entry, const RealizeOptions& options) {
  ValidationReport rep;
  const ConcreteGroup g = realize(entry.presentation, options);
  rep.order = g.order();
  const auto miss = [&](const std::string& what) { rep.mismatches.push_back(what); };

  if (g.order() != static_cast<std::size_t>(entry.id.order)) {
    miss("order " + std::to_string(g.order()) + " != " + std::to_string(entry.id.order));
    return rep;
  }
  rep.descriptor = descriptor(g);
  if (!(rep.descriptor == entry.expected)) {
    miss("descriptor (c,r,k) = (" + std::to_string(rep.descriptor.c) + "," +
         std::to_string(rep.descriptor.r) + "," + std::to_string(rep.descriptor.k) + ")");
  }
  rep.pattern = artin_pattern(g);
  if (sorted_list(rep.pattern.tau1) != sorted_list(entry.expected_tau1)) {
    miss("tau1 " + format_tau1(rep.pattern.tau1) + " vs " + format_tau1(entry.expected_tau1));
  }
  if (rep.pattern.tau2 != entry.expected_tau2) {
    miss("tau2 " + format_log(rep.pattern.tau2) + " vs " + format_log(entry.expected_tau2));
  }
  if (entry.expected_kappa && !kappa_equivalent(rep.pattern.kappa, *entry.expected_kappa)) {
    miss("kappa " + format_kappa(rep.pattern.kappa) + " not equivalent to " +
         format_kappa(*entry.expected_kappa));
  }
  if (entry.parent) {
    const auto lcs = lower_central_series(g);
    const Subgroup& last = lcs[lcs.size() - 2];
    const ConcreteGroup q = quotient(g, last);
    const CatalogEntry& parent = lookup(*entry.parent);
    const ConcreteGroup pg = realize(parent.presentation, options);
    if (!isomorphic(parent.presentation, pg, q)) {
      miss("quotient by the last lower central term is not <" + format_id(*entry.parent) + ">");
    }
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace coclass
