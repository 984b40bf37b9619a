#include "coclass/artin.hpp"

#include <algorithm>
#include <numeric>

#include "coclass/errors.hpp"

namespace coclass {

namespace {

// All 24 permutations of {0,1,2,3}.
const std::vector<std::array<int, 4>>& permutations4() {
  static const std::vector<std::array<int, 4>> perms = [] {
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

int relabel(int digit, const std::array<int, 4>& pi) {
  return digit >= 1 ? pi[digit - 1] + 1 : digit;
}

bool kappa_maps(const Kappa& a, const Kappa& b, const std::array<int, 4>& pi) {
  for (int i = 0; i < 4; ++i) {
    if (b[pi[i]] != relabel(a[i], pi)) return false;
  }
  return true;
}

}  // namespace

Transfer transfer(const ConcreteGroup& g, const Subgroup& h,
                  std::optional<std::array<Element, 3>> transversal) {
  if (h.order() * 3 != g.order()) {
    throw NotIndexThree("subgroup of order " + std::to_string(h.order()) +
                        " does not have index 3");
  }
  const Subgroup derived = derived_subgroup(g, g.whole());
  if (!derived.is_subgroup_of(h)) {
    throw DerivedNotContained("G' is not contained in the subgroup");
  }
  const auto left_label = g.coset_labels(h);
  std::array<Element, 3> t{};
  if (transversal) {
    t = *transversal;
    std::array<Element, 3> labels{left_label[t[0]], left_label[t[1]], left_label[t[2]]};
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw Error("transversal does not meet three distinct cosets");
    }
  } else {
    Element outside = 1;
    while (h.contains(outside)) ++outside;
    t = {g.identity(), outside, g.multiply(outside, outside)};
  }

  const Subgroup h_derived = derived_subgroup(g, h);
  const auto hd_label = g.coset_labels(h_derived);
  const auto gd_label = g.coset_labels(derived);

  Transfer out;
  for (Element x = 0; x < g.order(); ++x) {
    if (gd_label[x] == x) out.cosets.push_back(x);
  }
  std::vector<Element> kernel_elements;
  for (Element x : out.cosets) {
    Element product = g.identity();
    for (Element gi : t) {
      const Element xgi = g.multiply(x, gi);
      const Element* gj = std::find_if(t.begin(), t.end(), [&](Element c) {
        return left_label[c] == left_label[xgi];
      });
      product = g.multiply(product, g.multiply(g.inverse(*gj), xgi));
    }
    out.images.push_back(hd_label[product]);
  }
  for (std::size_t i = 0; i < out.cosets.size(); ++i) {
    if (out.images[i] != g.identity()) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (gd_label[y] == out.cosets[i]) kernel_elements.push_back(y);
    }
  }
  out.kernel = g.from_elements(std::move(kernel_elements));
  return out;
}

ArtinPattern artin_pattern(const ConcreteGroup& g) {
  const Subgroup all = g.whole();
  const Subgroup derived = derived_subgroup(g, all);
  ArtinPattern p;
  p.tau0 = section_invariants(g, all, derived);
  if (p.tau0 != AbelianInvariants{1, 1}) {
    throw WrongAbelianization("G/G' is " + format_log(p.tau0) + ", not (1^2)");
  }
  const auto maxes = maximal_subgroups(g);
  for (int i = 0; i < 4; ++i) p.tau1[i] = abelian_quotient_invariants(g, maxes[i]);
  p.tau2 = abelian_quotient_invariants(g, derived);
  for (int i = 0; i < 4; ++i) {
    const Subgroup kernel = transfer(g, maxes[i]).kernel;
    if (kernel.order() == g.order()) {
      p.kappa[i] = 0;
    } else if (kernel == derived) {
      p.kappa[i] = kTrivialKernel;
    } else {
      const auto it = std::find(maxes.begin(), maxes.end(), kernel);
      if (it == maxes.end()) throw Error("transfer kernel is not a maximal subgroup");
      p.kappa[i] = static_cast<int>(it - maxes.begin()) + 1;
    }
  }
  return p;
}

bool equivalent(const ArtinPattern& a, const ArtinPattern& b) {
  for (const auto& pi : permutations4()) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) ok = a.tau1[i] == b.tau1[pi[i]];
    if (ok && kappa_maps(a.kappa, b.kappa, pi)) return true;
  }
  return false;
}

bool kappa_equivalent(const Kappa& a, const Kappa& b) {
  for (const auto& pi : permutations4()) {
    if (kappa_maps(a, b, pi)) return true;
  }
  return false;
}

Kappa canonical_kappa(const Kappa& k) {
  Kappa best{};
  bool have = false;
  for (const auto& pi : permutations4()) {
    Kappa image{};
    for (int i = 0; i < 4; ++i) image[pi[i]] = relabel(k[i], pi);
    if (!have || image < best) {
      best = image;
      have = true;
    }
  }
  return best;
}

std::string format_kappa(const Kappa& k) {
  std::string s = "(";
  for (int d : k) s += d == kTrivialKernel ? '*' : static_cast<char>('0' + d);
  return s + ")";
}

Kappa parse_kappa(std::string_view text) {
  std::size_t base = 0;
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    base = 1;
  }
  if (text.size() != 4) throw ParseError("kappa needs four digits", base);
  Kappa k{};
  for (std::size_t i = 0; i < 4; ++i) {
    const char c = text[i];
    if (c == '*') {
      k[i] = kTrivialKernel;
    } else if (c >= '0' && c <= '4') {
      k[i] = c - '0';
    } else {
      throw ParseError(std::string("bad kappa digit '") + c + "'", base + i);
    }
  }
  return k;
}

namespace {

std::string bare(const AbelianInvariants& a) {
  const std::string s = format_log(a);
  return a.trivial() ? s : s.substr(1, s.size() - 2);
}

}  // namespace

std::string format_tau1(const std::array<AbelianInvariants, 4>& tau1) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += bare(tau1[i]);
  }
  return s + ")";
}

std::array<AbelianInvariants, 4> parse_tau1(std::string_view text) {
  std::size_t base = 0;
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
    base = 1;
  }
  if (!text.empty() && text.back() == ',') text.remove_suffix(1);
  std::array<AbelianInvariants, 4> out;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = i < 3 ? text.find(',', start) : text.size();
    if (comma == std::string_view::npos) {
      throw ParseError("tau1 needs four entries", base + text.size());
    }
    const std::string_view item = text.substr(start, comma - start);
    if (i == 3 && item.find(',') != std::string_view::npos) {
      throw ParseError("tau1 has more than four entries", base + start + item.find(','));
    }
    try {
      out[i] = parse_log(item);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), base + start + e.position());
    }
    start = comma + 1;
  }
  return out;
}

std::string format_ipad(const ArtinPattern& p) {
  return "[" + format_log(p.tau0) + "; " + format_tau1(p.tau1) + "]";
}

std::string format_pattern(const ArtinPattern& p) {
  return "tau = [" + format_log(p.tau0) + "; " + format_tau1(p.tau1) + "; " +
         format_log(p.tau2) + "]  kappa = " + format_kappa(p.kappa);
}

namespace {

constexpr CapitulationType kTypes[] = {
    {"a.1", "0000"},  {"A.1", "1111"},  {"a.3", "0100"}, {"b.10", "0043"},
    {"c.18", "0313"}, {"c.21", "0231"}, {"D.5", "4224"}, {"D.10", "2241"},
    {"G.19", "2143"}, {"H.4", "4443"},  {"F.11", "4331"}, {"F.12", "1422"},
    {"F.13", "3413"},
};

}  // namespace

std::span<const CapitulationType> capitulation_types() { return kTypes; }

std::optional<std::string> capitulation_type(const Kappa& k) {
  for (const auto& t : kTypes) {
    if (kappa_equivalent(k, parse_kappa(t.kappa))) return std::string(t.name);
  }
  return std::nullopt;
}

}  // namespace coclass
