#include "coclass/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "coclass/errors.hpp"

namespace coclass {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_shape(int p, int c, int r) {
  if (!is_odd_prime(p)) throw UnsupportedShape("p must be an odd prime");
  if (r < 2) {
    throw UnsupportedShape("coclass 1 lattices are chains; use the maximal class model");
  }
  if (c < r + 1) throw UnsupportedShape("class must be at least coclass + 1");
}

std::string grid_name(int j, int l) {
  return "P(" + std::to_string(j) + "," + std::to_string(l) + ")";
}

class Builder {
 public:
  explicit Builder(LatticeModel& m) : m_(m) {}

  int add(LatticeNode::Kind kind, std::string name, int lo, int j = 0, int l = 0) {
    LatticeNode n;
    n.kind = kind;
    n.name = std::move(name);
    n.log_order = lo;
    n.j = j;
    n.l = l;
    m_.nodes.push_back(std::move(n));
    return static_cast<int>(m_.nodes.size()) - 1;
  }
  void edge(int upper, int lower) { m_.edges.push_back({upper, lower}); }
  void diamond(int upper, int lower) { m_.diamonds.push_back({upper, lower}); }

 private:
  LatticeModel& m_;
};

}  // namespace

int LatticeModel::node_index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].name == name) return static_cast<int>(i);
  }
  throw std::out_of_range("no lattice node " + name);
}

long long normal_count(int p, int c, int r) {
  const long long P = p, C = c, R = r;
  return 1 + C + R + P * (3 + C * R - C - 2 * R);
}

LatticeModel predicted_lattice(int p, int c, int r) {
  check_shape(p, c, r);
  LatticeModel m;
  m.p = p;
  m.c = c;
  m.r = r;
  Builder b(m);
  using K = LatticeNode::Kind;
  const int whole = b.add(K::whole, "G", c + r);
  // Maximal subgroups come before G' so that G' is created after them.
  const int first_max = static_cast<int>(m.nodes.size());
  for (int i = 1; i <= p + 1; ++i) b.add(K::maximal, "M" + std::to_string(i), c + r - 1);
  const int derived = b.add(K::derived, "G'", c + r - 2);
  for (int i = 0; i <= p; ++i) {
    b.edge(whole, first_max + i);
    b.edge(first_max + i, derived);
  }
  b.diamond(whole, derived);

  const auto lo = [&](int j, int l) { return (c + 1 - j) + (r + 2 - l); };
  std::map<std::pair<int, int>, int> grid;
  for (int j = 3; j <= c + 1; ++j) {
    for (int l = 3; l <= r + 2; ++l) grid[{j, l}] = b.add(K::grid, grid_name(j, l), lo(j, l), j, l);
  }
  b.edge(derived, grid.at({3, 3}));
  for (int j = 3; j <= c + 1; ++j) {
    for (int l = 3; l <= r + 2; ++l) {
      const int u = grid.at({j, l});
      if (j <= c) b.edge(u, grid.at({j + 1, l}));
      if (l <= r + 1) b.edge(u, grid.at({j, l + 1}));
      if (j <= c && l <= r + 1) {
        const int v = grid.at({j + 1, l + 1});
        for (int i = 1; i <= p - 1; ++i) {
          const int inner = b.add(K::inner,
                                  "D(" + std::to_string(j) + "," + std::to_string(l) + ")." +
                                      std::to_string(i),
                                  lo(j, l) - 1, j, l);
          b.edge(u, inner);
          b.edge(inner, v);
        }
        b.diamond(u, v);
      }
    }
  }

  m.nodes[whole].gamma.push_back(1);
  m.nodes[derived].gamma.push_back(2);
  for (int j = 3; j <= c + 1; ++j) {
    m.nodes[grid.at(j <= r + 1 ? std::pair{j, j} : std::pair{j, r + 2})].gamma.push_back(j);
  }
  m.nodes[grid.at({c + 1, r + 2})].zeta.push_back(0);
  for (int j = 1; j <= c - 2; ++j) {
    const auto at = j <= r - 1 ? std::pair{c + 1 - j, r + 2 - j} : std::pair{c + 1 - j, 3};
    m.nodes[grid.at(at)].zeta.push_back(j);
  }
  m.nodes[derived].zeta.push_back(c - 1);
  m.nodes[whole].zeta.push_back(c);
  return m;
}

LatticeModel maximal_class_lattice(int p, int c) {
  if (!is_odd_prime(p)) throw UnsupportedShape("p must be an odd prime");
  if (c < 1) throw UnsupportedShape("class must be positive");
  LatticeModel m;
  m.p = p;
  m.c = c;
  m.r = 1;
  Builder b(m);
  using K = LatticeNode::Kind;
  const int whole = b.add(K::whole, "G", c + 1);
  const int first_max = static_cast<int>(m.nodes.size());
  for (int i = 1; i <= p + 1; ++i) b.add(K::maximal, "M" + std::to_string(i), c);
  const int derived = b.add(K::derived, "G'", c - 1, 2);
  for (int i = 0; i <= p; ++i) {
    b.edge(whole, first_max + i);
    b.edge(first_max + i, derived);
  }
  b.diamond(whole, derived);
  m.nodes[whole].gamma.push_back(1);
  m.nodes[derived].gamma.push_back(2);
  int above = derived;
  for (int j = 3; j <= c + 1; ++j) {
    const int n = b.add(K::chain, "gamma" + std::to_string(j), c + 1 - j, j);
    m.nodes[n].gamma.push_back(j);
    b.edge(above, n);
    above = n;
  }
  // The upper central series is the lower one reversed.
  for (auto& n : m.nodes) {
    if (!n.gamma.empty()) n.zeta.push_back(c + 1 - n.gamma.front());
  }
  return m;
}

CentralSeriesSpec central_series_spec(int p, int c, int r) {
  check_shape(p, c, r);
  const AbelianInvariants bicyclic{1, 1};
  const AbelianInvariants cyclic{1};
  CentralSeriesSpec s;
  for (int j = 1; j <= c; ++j) {
    s.gamma_factors.push_back(j == 1 || (3 <= j && j <= r + 1) ? bicyclic : cyclic);
    s.zeta_factors.push_back(j <= r - 1 || j == c ? bicyclic : cyclic);
  }
  s.gamma_log_orders.assign(static_cast<std::size_t>(c) + 1, 0);
  for (int j = c; j >= 1; --j) {
    s.gamma_log_orders[j - 1] = s.gamma_log_orders[j] + s.gamma_factors[j - 1].log_order();
  }
  s.zeta_log_orders.assign(static_cast<std::size_t>(c) + 1, 0);
  for (int j = 1; j <= c; ++j) {
    s.zeta_log_orders[j] = s.zeta_log_orders[j - 1] + s.zeta_factors[j - 1].log_order();
  }
  for (int j = 1; j <= c; ++j) {
    using Chi = CentralSeriesSpec::Chi;
    s.chi.push_back(j <= r ? Chi::derived : j <= c - 1 ? Chi::maximal : Chi::whole);
  }
  return s;
}

bool LatticeReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const LatticeCheck& c) { return c.pass; });
}

namespace {

std::string show_histogram(const std::map<int, int>& h) {
  std::string out;
  for (const auto& [k, v] : h) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + ":" + std::to_string(v);
  }
  return out;
}

template <class T, class F>
std::string show_list(const std::vector<T>& v, F f) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ' ';
    out += f(x);
  }
  return out;
}

std::string chi_name(CentralSeriesSpec::Chi c) {
  switch (c) {
    case CentralSeriesSpec::Chi::derived: return "G'";
    case CentralSeriesSpec::Chi::maximal: return "max";
    case CentralSeriesSpec::Chi::whole: return "G";
  }
  return "?";
}

}  // namespace

LatticeReport verify_lattice(const ConcreteGroup& g) {
  LatticeReport rep;
  rep.descriptor = descriptor(g);
  const int c = rep.descriptor.c;
  const int r = rep.descriptor.r;
  if (r < 2) throw UnsupportedShape("coclass 1 groups have a chain lattice");
  if (rep.descriptor.k != 0) {
    throw PreconditionDefect("the lattice model needs defect of commutativity 0, got k = " +
                             std::to_string(rep.descriptor.k));
  }
  const LatticeModel model = predicted_lattice(3, c, r);
  const CentralSeriesSpec spec = central_series_spec(3, c, r);
  const auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const std::vector<Subgroup> normals = normal_subgroups(g);
  rep.normal_subgroups = normals.size();
  rep.predicted = normal_count(3, c, r);
  add("normal count", static_cast<long long>(normals.size()) == rep.predicted,
      std::to_string(normals.size()) + " vs " + std::to_string(rep.predicted));

  std::vector<int> lo(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) lo[i] = log3_order(normals[i].order());

  std::map<int, int> got_orders, want_orders;
  for (int v : lo) ++got_orders[v];
  for (const auto& n : model.nodes) ++want_orders[n.log_order];
  add("orders", got_orders == want_orders,
      show_histogram(got_orders) + " vs " + show_histogram(want_orders));

  // Covers in the normal lattice of a p-group have index p.
  std::vector<std::vector<std::size_t>> below(normals.size());
  for (std::size_t u = 0; u < normals.size(); ++u) {
    for (std::size_t v = 0; v < normals.size(); ++v) {
      if (lo[v] == lo[u] - 1 && normals[v].is_subgroup_of(normals[u])) below[u].push_back(v);
    }
  }
  std::map<int, int> got_covers, want_covers;
  for (std::size_t u = 0; u < normals.size(); ++u) {
    if (!below[u].empty()) got_covers[lo[u]] += static_cast<int>(below[u].size());
  }
  for (const auto& e : model.edges) ++want_covers[model.nodes[e.upper].log_order];
  add("covers", got_covers == want_covers,
      show_histogram(got_covers) + " vs " + show_histogram(want_covers));

  std::map<int, int> got_diamonds, want_diamonds;
  for (std::size_t u = 0; u < normals.size(); ++u) {
    std::map<std::size_t, int> two_down;
    for (std::size_t w : below[u]) {
      for (std::size_t v : below[w]) ++two_down[v];
    }
    for (const auto& [v, mids] : two_down) {
      if (mids == 4) ++got_diamonds[lo[u]];
    }
  }
  for (const auto& d : model.diamonds) ++want_diamonds[model.nodes[d.upper].log_order];
  add("diamonds", got_diamonds == want_diamonds,
      show_histogram(got_diamonds) + " vs " + show_histogram(want_diamonds));

  const auto gamma = lower_central_series(g);
  const auto zeta = upper_central_series(g);
  std::vector<AbelianInvariants> gf, zf;
  for (int j = 1; j <= c; ++j) {
    gf.push_back(section_invariants(g, gamma[j - 1], gamma[j]));
    zf.push_back(section_invariants(g, zeta[j], zeta[j - 1]));
  }
  const auto fmt = [](const AbelianInvariants& a) { return format_log(a); };
  add("gamma factors", gf == spec.gamma_factors,
      show_list(gf, fmt) + " vs " + show_list(spec.gamma_factors, fmt));
  add("zeta factors", zf == spec.zeta_factors,
      show_list(zf, fmt) + " vs " + show_list(spec.zeta_factors, fmt));
  const int bicyclic = static_cast<int>(
      std::count(gf.begin(), gf.end(), AbelianInvariants{1, 1}));
  add("bicyclic gamma factors", bicyclic == r,
      std::to_string(bicyclic) + " vs coclass " + std::to_string(r));

  // Which upper central terms coincide with a lower central term.
  std::vector<int> got_shared, want_shared;
  for (int j = 0; j <= c; ++j) {
    if (std::find(gamma.begin(), gamma.end(), zeta[j]) != gamma.end()) got_shared.push_back(j);
  }
  for (const auto& n : model.nodes) {
    if (!n.gamma.empty()) want_shared.insert(want_shared.end(), n.zeta.begin(), n.zeta.end());
  }
  std::sort(want_shared.begin(), want_shared.end());
  const auto num = [](int v) { return std::to_string(v); };
  add("upper terms on the lower series", got_shared == want_shared,
      show_list(got_shared, num) + " vs " + show_list(want_shared, num));

  std::vector<CentralSeriesSpec::Chi> chi;
  std::optional<Subgroup> chosen;
  bool same_maximal = true;
  for (int j = 1; j <= c; ++j) {
    const Subgroup x = two_step_centralizer(g, gamma, j);
    using Chi = CentralSeriesSpec::Chi;
    if (x.order() == g.order()) {
      chi.push_back(Chi::whole);
    } else if (x == gamma[1]) {
      chi.push_back(Chi::derived);
    } else if (x.order() * 3 == g.order()) {
      chi.push_back(Chi::maximal);
      if (chosen && !(*chosen == x)) same_maximal = false;
      chosen = x;
    } else {
      add("two-step centralizers", false, "chi_" + std::to_string(j) + " has unexpected order");
      return rep;
    }
  }
  add("two-step centralizers", chi == spec.chi && same_maximal,
      show_list(chi, chi_name) + " vs " + show_list(spec.chi, chi_name));
  return rep;
}

std::string emit_diagram(const LatticeModel& m) {
  std::ostringstream out;
  out << "digraph normal_lattice_p" << m.p << "_c" << m.c << "_r" << m.r << " {\n"
      << "  label=\"p=" << m.p << ", c=" << m.c << ", r=" << m.r << "\";\n"
      << "  labelloc=t;\n"
      << "  edge [dir=none];\n"
      << "  node [shape=point, width=0.06];\n";
  int top = 0;
  for (const auto& n : m.nodes) top = std::max(top, n.log_order);
  // Axis of logarithmic orders.
  out << "  subgraph axis {\n    node [shape=plaintext, width=0.3];\n";
  for (int lo = top; lo >= 0; --lo) out << "    lo" << lo << " [label=\"" << lo << "\"];\n";
  for (int lo = top; lo > 0; --lo) out << "    lo" << lo << " -> lo" << lo - 1 << " [style=invis];\n";
  out << "  }\n";
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    const auto& n = m.nodes[i];
    std::string xlabel;
    for (int g : n.gamma) xlabel += (xlabel.empty() ? "" : " ") + std::string("γ") + std::to_string(g);
    for (int z : n.zeta) xlabel += (xlabel.empty() ? "" : " ") + std::string("ζ") + std::to_string(z);
    out << "  n" << i << " [tooltip=\"" << n.name << "\"";
    if (!n.gamma.empty()) {
      out << ", shape=circle, style=filled, fillcolor=black, width=0.14";
    } else if (!n.zeta.empty()) {
      out << ", shape=circle, width=0.14";
    }
    if (!xlabel.empty()) out << ", xlabel=\"" << xlabel << "\"";
    out << "];\n";
  }
  std::map<int, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < m.nodes.size(); ++i) ranks[m.nodes[i].log_order].push_back(i);
  for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
    out << "  { rank=same; lo" << it->first << ";";
    for (std::size_t i : it->second) out << " n" << i << ";";
    out << " }\n";
  }
  for (const auto& e : m.edges) out << "  n" << e.upper << " -> n" << e.lower << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::pair<int, int>> figure_shapes(int figure) {
  switch (figure) {
    case 2: return {{9, 1}, {7, 1}, {5, 1}, {3, 1}, {1, 1}};
    case 3: return {{7, 6}, {5, 4}, {3, 2}};
    case 4: return {{7, 2}, {6, 2}, {5, 2}, {4, 2}};
    case 5: return {{7, 4}, {6, 4}, {5, 3}};
    case 6: return {{11, 8}};
    default: throw std::out_of_range("figure number must be 2 to 6");
  }
}

}  // namespace coclass
