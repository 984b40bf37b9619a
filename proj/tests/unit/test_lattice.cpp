#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"
#include "coclass/lattice.hpp"

using namespace coclass;

namespace {

// Pairs (u, v) with lo(u) - lo(v) = 2 joined by exactly p + 1 paths of two
// covering edges.
std::set<std::pair<int, int>> diamonds_by_search(const LatticeModel& m) {
  std::map<int, std::vector<int>> below;
  for (const auto& e : m.edges) below[e.upper].push_back(e.lower);
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(m.nodes.size()); ++u) {
    std::map<int, int> paths;
    for (int w : below[u]) {
      for (int v : below[w]) ++paths[v];
    }
    for (const auto& [v, n] : paths) {
      if (n == m.p + 1) out.insert({u, v});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("normal subgroup counts") {
  CHECK(normal_count(3, 3, 2) == 12);
  CHECK(normal_count(5, 3, 2) == 16);
  CHECK(normal_count(3, 7, 6) == 92);
  CHECK(normal_count(3, 5, 2) == 20);
}

TEST_CASE("model sizes follow the count for p = 3, 5, 7") {
  for (int p : {3, 5, 7}) {
    for (int r = 2; r <= 8; ++r) {
      for (int c = r + 1; c <= 12; ++c) {
        CAPTURE(p);
        CAPTURE(c);
        CAPTURE(r);
        const LatticeModel m = predicted_lattice(p, c, r);
        CHECK(static_cast<long long>(m.nodes.size()) == normal_count(p, c, r));
        CHECK(m.diamonds.size() ==
              static_cast<std::size_t>(1 + (c - 2) * (r - 1)));
      }
    }
  }
}

TEST_CASE("model shapes") {
  const LatticeModel small = predicted_lattice(3, 3, 2);
  CHECK(small.nodes.size() == 12);
  CHECK(small.diamonds.size() == 2);
  const LatticeModel big = predicted_lattice(3, 7, 6);
  CHECK(big.diamonds.size() == 26);
  CHECK_THROWS_AS(predicted_lattice(3, 4, 1), UnsupportedShape);
  CHECK_THROWS_AS(predicted_lattice(3, 2, 2), UnsupportedShape);
  CHECK_THROWS_AS(predicted_lattice(4, 3, 2), UnsupportedShape);
  CHECK(small.node_index("G'") >= 0);
  CHECK_THROWS_AS(small.node_index("nope"), std::out_of_range);
}

TEST_CASE("listed diamonds are exactly the diamonds of the model") {
  for (int p : {3, 5}) {
    for (int r = 2; r <= 5; ++r) {
      for (int c = r + 1; c <= 8; ++c) {
        CAPTURE(c);
        CAPTURE(r);
        const LatticeModel m = predicted_lattice(p, c, r);
        std::set<std::pair<int, int>> listed;
        for (const auto& d : m.diamonds) {
          listed.insert({d.upper, d.lower});
          CHECK(m.nodes[d.upper].log_order - m.nodes[d.lower].log_order == 2);
        }
        CHECK(listed == diamonds_by_search(m));
        for (const auto& e : m.edges) {
          CHECK(m.nodes[e.upper].log_order == m.nodes[e.lower].log_order + 1);
        }
      }
    }
  }
}

TEST_CASE("central series in the model agree with the series data") {
  for (int r = 2; r <= 8; ++r) {
    for (int c = r + 1; c <= 12; ++c) {
      CAPTURE(c);
      CAPTURE(r);
      const LatticeModel m = predicted_lattice(3, c, r);
      const CentralSeriesSpec s = central_series_spec(3, c, r);
      std::map<int, int> gamma_lo, zeta_lo;
      for (const auto& n : m.nodes) {
        for (int j : n.gamma) gamma_lo[j] = n.log_order;
        for (int j : n.zeta) zeta_lo[j] = n.log_order;
      }
      REQUIRE(gamma_lo.size() == static_cast<std::size_t>(c + 1));
      REQUIRE(zeta_lo.size() == static_cast<std::size_t>(c + 1));
      for (int j = 1; j <= c + 1; ++j) CHECK(gamma_lo[j] == s.gamma_log_orders[j - 1]);
      for (int j = 0; j <= c; ++j) CHECK(zeta_lo[j] == s.zeta_log_orders[j]);

      int total = 0;
      int bicyclic = 0;
      for (const auto& f : s.gamma_factors) {
        total += f.log_order();
        bicyclic += f == AbelianInvariants{1, 1} ? 1 : 0;
      }
      CHECK(total == c + r);
      CHECK(bicyclic == r);
    }
  }
}

TEST_CASE("central series data examples") {
  const auto s = central_series_spec(3, 3, 2);
  CHECK(s.gamma_factors ==
        std::vector<AbelianInvariants>{{1, 1}, {1}, {1, 1}});
  const auto t = central_series_spec(3, 5, 4);
  CHECK(t.zeta_factors ==
        std::vector<AbelianInvariants>{{1, 1}, {1, 1}, {1, 1}, {1}, {1, 1}});
  for (int r = 2; r <= 8; ++r) {
    const auto u = central_series_spec(3, r + 1, r);
    CHECK(std::count(u.chi.begin(), u.chi.end(), CentralSeriesSpec::Chi::maximal) == 0);
  }
}

TEST_CASE("brute force agrees with the model on defect zero groups") {
  int checked = 0;
  for (const auto& e : catalog()) {
    if (e.expected.r < 2 || e.expected.k != 0 || e.id.order > 729) continue;
    CAPTURE(format_id(e.id));
    const LatticeReport rep = verify_lattice(realize(e.presentation));
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(static_cast<long long>(rep.normal_subgroups) == rep.predicted);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("lattice verification needs defect zero and coclass two or more") {
  CHECK_THROWS_AS(verify_lattice(realize(lookup({729, 34}).presentation)),
                  PreconditionDefect);
  CHECK_THROWS_AS(verify_lattice(realize(lookup({81, 8}).presentation)),
                  UnsupportedShape);
}

TEST_CASE("groups of maximal class have chain lattices") {
  for (const auto& e : catalog()) {
    if (e.expected.r != 1 || e.expected.c < 2) continue;
    CAPTURE(format_id(e.id));
    const auto g = realize(e.presentation);
    const LatticeModel m = maximal_class_lattice(3, e.expected.c);
    CHECK(normal_subgroups(g).size() == m.nodes.size());
  }
}

TEST_CASE("diagrams are deterministic") {
  const std::string a = emit_diagram(predicted_lattice(3, 5, 3));
  const std::string b = emit_diagram(predicted_lattice(3, 5, 3));
  CHECK(a == b);
  CHECK(a.rfind("digraph", 0) == 0);

  const std::string fig3 = emit_diagram(predicted_lattice(3, 7, 6));
  for (int lo = 0; lo <= 13; ++lo) {
    CHECK(fig3.find("lo" + std::to_string(lo) + " [label=") != std::string::npos);
  }
  CHECK(fig3.find("lo14 ") == std::string::npos);
  const std::string chain = emit_diagram(maximal_class_lattice(3, 5));
  CHECK(chain.find("lo6 [label=") != std::string::npos);
}

TEST_CASE("figure shapes") {
  CHECK(figure_shapes(6) == std::vector<std::pair<int, int>>{{11, 8}});
  CHECK(figure_shapes(3).front() == std::pair{7, 6});
  CHECK(figure_shapes(2).size() == 5);
  CHECK_THROWS_AS(figure_shapes(7), std::out_of_range);
}

TEST_CASE("family groups of class 5 and 6 with coclass 2") {
  for (int c : {5, 6}) {
    CAPTURE(c);
    PresentationParams params;
    params.c = c;
    params.r = 2;
    const auto g = realize(parametrized_presentation(params));
    const GroupDescriptor d = descriptor(g);
    REQUIRE(d == GroupDescriptor{c + 2, c, 2, 0});
    const LatticeReport rep = verify_lattice(g);
    CHECK(rep.ok());
    CHECK(static_cast<long long>(rep.normal_subgroups) == normal_count(3, c, 2));
  }
  CHECK(normal_count(3, 5, 2) == 20);
}
