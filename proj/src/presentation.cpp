#include "coclass/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "coclass/errors.hpp"

namespace coclass {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, int n) {
  const Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

void Presentation::validate() const {
  if (generator_names.empty()) {
    throw InvalidPresentation("presentation declares no generators");
  }
  for (const Word& r : relators) {
    for (int l : r) {
      if (l == 0 || std::abs(l) > generator_count()) {
        throw InvalidPresentation("relator references undeclared generator " +
                                  std::to_string(l));
      }
    }
  }
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t base,
             const std::map<std::string, Word>& names)
      : text_(text), base_(base), names_(names) {}

  Word parse_all() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("presentation: " + what, base_ + pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '*')) {
      ++pos_;
    }
  }

  bool at_word_end() {
    skip_space();
    return pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ']' ||
           text_[pos_] == ')';
  }

  Word parse_word() {
    Word w;
    while (!at_word_end()) {
      Word t = parse_term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return w;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      int sign = 1;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      }
      const std::size_t start = pos_;
      long n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        if (n > 100000) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected an integer exponent");
      atom = power(atom, sign * static_cast<int>(n));
      skip_space();
    }
    return atom;
  }

  Word parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of word");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word acc = parse_word();
      int parts = 1;
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        acc = commutator(acc, parse_word());
        ++parts;
      }
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      if (parts < 2) fail("commutator needs at least two entries");
      ++pos_;
      return acc;
    }
    if (c == '1' && (pos_ + 1 >= text_.size() || !is_name_char(text_[pos_ + 1]))) {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name_run();
    fail(std::string("unexpected character '") + c + "'");
  }

  // A run of identifier characters is split greedily into known names, so
  // "xyX" and "s2x" both work without separators.
  Word parse_name_run() {
    std::size_t end = pos_;
    while (end < text_.size() && is_name_char(text_[end])) ++end;
    Word out;
    while (pos_ < end) {
      std::optional<std::size_t> best;
      for (std::size_t len = end - pos_; len > 0; --len) {
        if (names_.count(std::string(text_.substr(pos_, len)))) {
          best = len;
          break;
        }
      }
      if (!best) fail("unknown name in '" + std::string(text_.substr(pos_, end - pos_)) + "'");
      const Word& w = names_.at(std::string(text_.substr(pos_, *best)));
      out.insert(out.end(), w.begin(), w.end());
      pos_ += *best;
    }
    return out;
  }

  std::string_view text_;
  std::size_t base_;
  const std::map<std::string, Word>& names_;
  std::size_t pos_ = 0;
};

std::map<std::string, Word> generator_name_table(
    const std::vector<std::string>& gens) {
  std::map<std::string, Word> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names[gens[i]] = Word{static_cast<int>(i + 1)};
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string& g = gens[i];
    if (g.size() == 1 && std::islower(static_cast<unsigned char>(g[0]))) {
      const std::string inv(1, static_cast<char>(std::toupper(g[0])));
      if (!names.count(inv)) names[inv] = Word{-static_cast<int>(i + 1)};
    }
  }
  return names;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), is_name_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::map<std::string, Word> names;
  bool have_gens = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t body_offset = offset + (body.data() - line.data());

    if (body.substr(0, 5) == "gens " || body == "gens") {
      if (have_gens) throw ParseError("presentation: duplicate 'gens'", body_offset);
      std::istringstream in{std::string(body.substr(4))};
      std::string g;
      while (in >> g) {
        if (!valid_identifier(g)) {
          throw ParseError("presentation: bad generator name '" + g + "'", body_offset);
        }
        if (std::find(p.generator_names.begin(), p.generator_names.end(), g) !=
            p.generator_names.end()) {
          throw ParseError("presentation: duplicate generator '" + g + "'", body_offset);
        }
        p.generator_names.push_back(g);
      }
      if (p.generator_names.empty()) {
        throw ParseError("presentation: 'gens' needs at least one name", body_offset);
      }
      names = generator_name_table(p.generator_names);
      have_gens = true;
      continue;
    }
    if (!have_gens) {
      throw ParseError("presentation: expected 'gens' before relators", body_offset);
    }
    if (body.substr(0, 4) == "let ") {
      const std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("presentation: 'let' needs '='", body_offset);
      }
      const std::string name(trim(body.substr(4, eq - 4)));
      if (!valid_identifier(name)) {
        throw ParseError("presentation: bad name '" + name + "'", body_offset);
      }
      const std::string_view rhs = body.substr(eq + 1);
      names[name] = free_reduce(
          WordParser(rhs, body_offset + eq + 1, names).parse_all());
      continue;
    }
    std::string_view rel = body;
    std::size_t rel_offset = body_offset;
    if (rel.substr(0, 4) == "rel ") {
      rel.remove_prefix(4);
      rel_offset += 4;
    }
    const std::size_t eq = rel.find('=');
    Word w;
    if (eq == std::string_view::npos) {
      w = WordParser(rel, rel_offset, names).parse_all();
    } else {
      if (rel.find('=', eq + 1) != std::string_view::npos) {
        throw ParseError("presentation: more than one '='", rel_offset + eq);
      }
      const Word lhs = WordParser(rel.substr(0, eq), rel_offset, names).parse_all();
      const Word rhs =
          WordParser(rel.substr(eq + 1), rel_offset + eq + 1, names).parse_all();
      w = concat(lhs, inverse(rhs));
    }
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  if (!have_gens) throw ParseError("presentation: missing 'gens' line", 0);
  p.validate();
  return p;
}

Word parse_word(std::string_view text, const Presentation& p) {
  const auto names = generator_name_table(p.generator_names);
  return free_reduce(WordParser(text, 0, names).parse_all());
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int run = static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    const std::string& name = names.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    out += name;
    if (w[i] < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "gens";
  for (const auto& g : p.generator_names) out += " " + g;
  out += '\n';
  for (const Word& r : p.relators) out += format_word(r, p.generator_names) + '\n';
  return out;
}

}  // namespace coclass
