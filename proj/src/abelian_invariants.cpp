#include "coclass/abelian_invariants.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>

#include "coclass/errors.hpp"

namespace coclass {

AbelianInvariants::AbelianInvariants(std::vector<int> exponents) {
  for (int e : exponents) {
    if (e < 0) throw Error("abelian invariants: negative exponent");
  }
  std::erase(exponents, 0);
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  exponents_ = std::move(exponents);
}

int AbelianInvariants::log_order() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

namespace {

int exact_log3(std::uint64_t v) {
  int e = 0;
  while (v > 1 && v % 3 == 0) {
    v /= 3;
    ++e;
  }
  return v == 1 ? e : -1;
}

}  // namespace

AbelianInvariants ati_from_order_counts(
    const std::map<int, std::uint64_t>& counts) {
  if (counts.empty() || counts.begin()->first != 0 ||
      counts.begin()->second != 1) {
    throw NonRealizableCounts("order census must start with counts[0] = 1");
  }
  // logs[k] = log_3 |{x : x^(3^k) = 1}|
  std::vector<int> logs;
  int expected_key = 0;
  for (const auto& [k, v] : counts) {
    if (k != expected_key) {
      throw NonRealizableCounts("order census keys must be consecutive");
    }
    ++expected_key;
    const int e = exact_log3(v);
    if (e < 0) {
      throw NonRealizableCounts("order census value " + std::to_string(v) +
                                " is not a power of 3");
    }
    if (!logs.empty() && e < logs.back()) {
      throw NonRealizableCounts("order census is decreasing");
    }
    logs.push_back(e);
  }
  if (logs.size() > 1 && logs[logs.size() - 1] != logs[logs.size() - 2]) {
    throw NonRealizableCounts("order census has not stabilized");
  }
  // ranks[k] = number of cyclic factors of exponent >= k
  std::vector<int> exponents;
  int previous_rank = -1;
  for (std::size_t k = 1; k < logs.size(); ++k) {
    const int rank = logs[k] - logs[k - 1];
    if (previous_rank >= 0 && rank > previous_rank) {
      throw NonRealizableCounts(
          "order census is not that of an abelian 3-group");
    }
    previous_rank = rank;
  }
  for (std::size_t k = 1; k < logs.size(); ++k) {
    const int at_least_k = logs[k] - logs[k - 1];
    const int at_least_next =
        k + 1 < logs.size() ? logs[k + 1] - logs[k] : 0;
    for (int i = 0; i < at_least_k - at_least_next; ++i) {
      exponents.push_back(static_cast<int>(k));
    }
  }
  return AbelianInvariants(std::move(exponents));
}

AbelianInvariants nearly_homocyclic(int n) {
  if (n < 0) throw Error("nearly_homocyclic: negative logarithmic order");
  const int m = n / 2;
  const int remainder = n % 2;
  std::vector<int> exps;
  for (int i = 0; i < remainder; ++i) exps.push_back(m + 1);
  for (int i = 0; i < 2 - remainder; ++i) exps.push_back(m);
  return AbelianInvariants(std::move(exps));
}

AbelianInvariants direct_product(const AbelianInvariants& a,
                                 const AbelianInvariants& b) {
  std::vector<int> merged(a.exponents().begin(), a.exponents().end());
  merged.insert(merged.end(), b.exponents().begin(), b.exponents().end());
  return AbelianInvariants(std::move(merged));
}

std::string format_log(const AbelianInvariants& a) {
  const auto exps = a.exponents();
  const bool extended =
      std::any_of(exps.begin(), exps.end(), [](int e) { return e > 9; });
  std::string out = "(";
  if (extended) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(exps[i]);
    }
  } else {
    for (std::size_t i = 0; i < exps.size();) {
      std::size_t j = i;
      while (j < exps.size() && exps[j] == exps[i]) ++j;
      out += static_cast<char>('0' + exps[i]);
      const std::size_t run = j - i;
      if (run > 9) {
        out += "^{" + std::to_string(run) + "}";
      } else if (run > 1) {
        out += '^';
        out += static_cast<char>('0' + run);
      }
      i = j;
    }
  }
  out += ')';
  return out;
}

namespace {

class AtiParser {
 public:
  explicit AtiParser(std::string_view text) : text_(text) {}

  AbelianInvariants parse() {
    skip_space();
    std::size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) {
      --end;
    }
    bool parenthesized = false;
    if (pos_ < end && text_[pos_] == '(') {
      if (text_[end - 1] != ')') fail("missing closing parenthesis", end);
      parenthesized = true;
      ++pos_;
      --end;
    }
    end_ = end;
    skip_space();
    if (pos_ == end_) {
      if (!parenthesized) fail("empty abelian invariants", pos_);
      return {};
    }
    const std::string_view body = text_.substr(pos_, end_ - pos_);
    if (body == "0") return {};
    if (body.find(',') != std::string_view::npos) return parse_extended();
    return parse_compact();
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("abelian invariants: " + what, at);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  int read_number() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a number", start);
    return static_cast<int>(value);
  }

  void check_order(std::vector<int>& exps, int e, std::size_t at) const {
    if (!exps.empty() && e > exps.back()) {
      fail("exponents must be non-increasing", at);
    }
  }

  AbelianInvariants parse_extended() {
    std::vector<int> exps;
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      const int e = read_number();
      if (e == 0) fail("zero exponent", at);
      check_order(exps, e, at);
      exps.push_back(e);
      skip_space();
      if (pos_ == end_) break;
      if (text_[pos_] != ',') fail("expected ','", pos_);
      ++pos_;
    }
    return AbelianInvariants(std::move(exps));
  }

  AbelianInvariants parse_compact() {
    std::vector<int> exps;
    while (pos_ < end_) {
      const std::size_t at = pos_;
      const char ch = text_[pos_];
      if (ch < '1' || ch > '9') fail("expected an exponent digit", at);
      const int e = ch - '0';
      ++pos_;
      int count = 1;
      if (pos_ < end_ && text_[pos_] == '^') {
        ++pos_;
        if (pos_ < end_ && text_[pos_] == '{') {
          ++pos_;
          count = read_number();
          if (pos_ >= end_ || text_[pos_] != '}') fail("expected '}'", pos_);
          ++pos_;
        } else if (pos_ < end_ && text_[pos_] >= '1' && text_[pos_] <= '9') {
          count = text_[pos_] - '0';
          ++pos_;
        } else {
          fail("expected a repetition count", pos_);
        }
        if (count == 0) fail("zero repetition count", at);
      }
      check_order(exps, e, at);
      exps.insert(exps.end(), count, e);
    }
    return AbelianInvariants(std::move(exps));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

}  // namespace

AbelianInvariants parse_log(std::string_view text) {
  return AtiParser(text).parse();
}

std::ostream& operator<<(std::ostream& os, const AbelianInvariants& a) {
  return os << format_log(a);
}

}  // namespace coclass
