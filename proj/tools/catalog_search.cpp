// Searches presentations whose realized Artin pattern matches a named group.
//
//   catalog_search family C R [BOUND]   sweep the parametrized family
//   catalog_search central              class-3 coclass-2 central extensions
//   catalog_search lift X3 Y3 S23       class-4 central lifts of a class-3 group
//   catalog_search show [BOUND] < file  analyse one presentation
//
// With --classes after the mode arguments, candidates with equal invariants
// are split into isomorphism classes and one presentation per class is
// printed.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coclass/artin.hpp"
#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"

using namespace coclass;

namespace {

struct Candidate {
  std::string tag;
  std::string text;
};

// Element order histogram, class count, normal subgroup count, centre order
// and order-3 counts inside the maximal subgroups.
std::string fingerprint(const ConcreteGroup& g) {
  std::map<int, int> orders;
  for (Element x = 0; x < g.order(); ++x) ++orders[g.element_order(x)];
  std::vector<std::uint8_t> seen(g.order(), 0);
  int classes = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    std::vector<Element> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element s : g.generators()) {
        const Element y = g.conjugate(orbit[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
  }
  std::ostringstream out;
  out << "ord";
  for (const auto& [o, n] : orders) out << " " << o << ":" << n;
  out << " cls " << classes << " nsg " << normal_subgroups(g).size() << " z "
      << center(g).order();
  std::vector<std::string> per;
  for (const Subgroup& h : maximal_subgroups(g)) {
    int thirds = 0;
    for (Element x : h.elements()) thirds += g.element_order(x) == 3 ? 1 : 0;
    per.push_back(format_log(abelian_quotient_invariants(g, h)) + "/" +
                  std::to_string(thirds));
  }
  std::sort(per.begin(), per.end());
  out << " max";
  for (const auto& s : per) out << " " << s;
  return out.str();
}

std::string exp_factor(const char* name, int e) {
  if (e == 0) return "";
  return std::string(" ") + name + "^" + std::to_string(e);
}

std::vector<Candidate> family(int c, int r) {
  std::vector<Candidate> out;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int g = -1; g <= 1; ++g)
        for (int d = -1; d <= 1; ++d)
          for (int rho = -1; rho <= 1; ++rho) {
            const PresentationParams p{c, r, a, b, g, d, rho};
            std::ostringstream tag;
            tag << "alpha=" << a << " beta=" << b << " gamma=" << g << " delta=" << d
                << " rho=" << rho;
            out.push_back({tag.str(), parametrized_presentation_text(p)});
          }
  return out;
}

// G' = <s2,s3,t3> elementary, gamma_3 = <s3,t3> central.
std::vector<Candidate> central() {
  std::vector<Candidate> out;
  for (int code = 0; code < 729; ++code) {
    int v = code;
    int e[6];
    for (int& x : e) {
      x = v % 3;
      v /= 3;
    }
    std::ostringstream t;
    t << "gens x y\nlet s2 = [y,x]\nlet s3 = [s2,x]\nlet t3 = [s2,y]\n"
      << "[s3,x]\n[s3,y]\n[t3,x]\n[t3,y]\ns3^3\nt3^3\n"
      << "x^3 = 1" << exp_factor("s3", e[0]) << exp_factor("t3", e[1]) << "\n"
      << "y^3 = 1" << exp_factor("s3", e[2]) << exp_factor("t3", e[3]) << "\n"
      << "s2^3 = 1" << exp_factor("s3", e[4]) << exp_factor("t3", e[5]) << "\n";
    std::ostringstream tag;
    tag << "x3=" << e[0] << e[1] << " y3=" << e[2] << e[3] << " s23=" << e[4] << e[5];
    out.push_back({tag.str(), t.str()});
  }
  return out;
}

// gamma_4 = <w> central of order 3, generated by [s3,x] or by [t3,y].
std::vector<Candidate> lift(const std::string& rx, const std::string& ry,
                            const std::string& rs) {
  std::vector<Candidate> out;
  for (int kind = 0; kind < 2; ++kind) {
    for (int code = 0; code < 2187; ++code) {
      int v = code;
      int e[7];
      for (int& x : e) {
        x = v % 3;
        v /= 3;
      }
      if (kind == 1 && e[0] != 0) continue;
      std::ostringstream t;
      t << "gens x y\nlet s2 = [y,x]\nlet s3 = [s2,x]\nlet t3 = [s2,y]\n";
      if (kind == 0) {
        t << "let w = [s3,x]\n[t3,y] = 1" << exp_factor("w", e[0]) << "\n";
      } else {
        t << "let w = [t3,y]\n[s3,x]\n";
      }
      t << "[s3,y] = 1" << exp_factor("w", e[1]) << "\n[t3,x] = 1" << exp_factor("w", e[1])
        << "\n[w,x]\n[w,y]\nw^3\n[s2,s3]\n[s2,t3]\n[s3,t3]\n"
        << "x^3 = " << rx << exp_factor("w", e[2]) << "\n"
        << "y^3 = " << ry << exp_factor("w", e[3]) << "\n"
        << "s2^3 = " << rs << exp_factor("w", e[4]) << "\n"
        << "s3^3 = 1" << exp_factor("w", e[5]) << "\n"
        << "t3^3 = 1" << exp_factor("w", e[6]) << "\n";
      std::ostringstream tag;
      tag << "kind=" << kind << " e=";
      for (int x : e) tag << x;
      out.push_back({tag.str(), t.str()});
    }
  }
  return out;
}

struct Analysed {
  Candidate candidate;
  Presentation presentation;
  ConcreteGroup group;
  std::string key;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool classes = std::find(args.begin(), args.end(), "--classes") != args.end();
  args.erase(std::remove(args.begin(), args.end(), "--classes"), args.end());
  const std::string mode = args.empty() ? "show" : args[0];
  std::size_t bound = 6561;
  std::vector<Candidate> candidates;
  if (mode == "family" && args.size() >= 3) {
    candidates = family(std::stoi(args[1]), std::stoi(args[2]));
    if (args.size() > 3) bound = std::stoul(args[3]);
  } else if (mode == "central") {
    candidates = central();
    bound = 729;
  } else if (mode == "lift" && args.size() >= 4) {
    candidates = lift(args[1], args[2], args[3]);
    bound = 729;
  } else if (mode == "show") {
    if (args.size() > 1) bound = std::stoul(args[1]);
    candidates.push_back({"input", std::string(std::istreambuf_iterator<char>(std::cin), {})});
  } else {
    std::cerr << "usage: catalog_search family C R [BOUND] | central | lift X3 Y3 S23 | "
                 "show [BOUND]  [--classes]\n";
    return 2;
  }

  RealizeOptions opts;
  opts.order_bound = bound;
  std::map<std::string, std::vector<Analysed>> by_key;
  for (const auto& c : candidates) {
    std::cout << c.tag << ": " << std::flush;
    try {
      Presentation p = parse_presentation(c.text);
      ConcreteGroup g = realize(p, opts);
      const auto d = descriptor(g);
      const auto pat = artin_pattern(g);
      std::ostringstream key;
      key << g.order() << " c=" << d.c << " r=" << d.r << " k=" << d.k << " "
          << format_pattern(pat) << " " << capitulation_type(pat.kappa).value_or("?");
      std::cout << key.str() << " | " << fingerprint(g) << "\n";
      if (classes) {
        ArtinPattern canon = pat;
        canon.kappa = canonical_kappa(pat.kappa);
        std::ostringstream k2;
        k2 << g.order() << " c=" << d.c << " r=" << d.r << " k=" << d.k << " "
           << format_log(pat.tau2) << " " << format_kappa(canon.kappa);
        by_key[k2.str()].push_back({c, std::move(p), std::move(g), k2.str()});
      }
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  if (!classes) return 0;
  for (auto& [key, list] : by_key) {
    std::vector<const Analysed*> reps;
    for (const auto& a : list) {
      bool known = false;
      for (const Analysed* r : reps) {
        if (isomorphic(r->presentation, r->group, a.group)) {
          known = true;
          break;
        }
      }
      if (!known) reps.push_back(&a);
    }
    std::cout << "== " << key << ": " << reps.size() << " class(es) among " << list.size()
              << "\n";
    for (const Analysed* r : reps) {
      std::cout << "-- " << r->candidate.tag << " | " << fingerprint(r->group) << "\n"
                << r->candidate.text;
    }
  }
  return 0;
}
