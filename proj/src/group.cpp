#include "coclass/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coclass/errors.hpp"

namespace coclass {

bool Subgroup::contains(Element e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return order() <= other.order() &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

ConcreteGroup::ConcreteGroup(const CosetTable& table) : columns_(table.columns) {
  const std::size_t n = table.index;
  if (n == 0 || columns_ <= 0) throw Error("empty coset table");
  constexpr Element kNone = ~Element{0};
  std::vector<Element> renumber(n, kNone);
  std::vector<Element> order_of_visit;
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::uint8_t> via(n, 0);
  order_of_visit.reserve(n);
  renumber[0] = 0;
  order_of_visit.push_back(0);
  for (std::size_t qi = 0; qi < order_of_visit.size(); ++qi) {
    const Element c = order_of_visit[qi];
    for (int x = 0; x < columns_; ++x) {
      const Element d = table.at(c, x);
      if (renumber[d] != kNone) continue;
      renumber[d] = static_cast<Element>(order_of_visit.size());
      parent[renumber[d]] = static_cast<std::uint32_t>(qi);
      via[renumber[d]] = static_cast<std::uint8_t>(x);
      order_of_visit.push_back(d);
    }
  }
  if (order_of_visit.size() != n) throw Error("coset table is not connected");

  actions_.resize(n * static_cast<std::size_t>(columns_));
  for (std::size_t e = 0; e < n; ++e) {
    const Element old = order_of_visit[e];
    for (int x = 0; x < columns_; ++x) {
      actions_[e * columns_ + x] = renumber[table.at(old, x)];
    }
  }

  path_offsets_.assign(n + 1, 0);
  std::vector<std::vector<std::uint8_t>> paths(n);
  for (std::size_t e = 1; e < n; ++e) {
    paths[e] = paths[parent[e]];
    paths[e].push_back(via[e]);
  }
  for (std::size_t e = 0; e < n; ++e) {
    path_offsets_[e + 1] = path_offsets_[e] + static_cast<std::uint32_t>(paths[e].size());
    path_data_.insert(path_data_.end(), paths[e].begin(), paths[e].end());
  }

  inverses_.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto p = path(static_cast<Element>(e));
    Element v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = act(v, *it ^ 1);
    inverses_[e] = v;
  }
}

std::vector<Element> ConcreteGroup::generators() const {
  std::vector<Element> g;
  for (int i = 0; i < generator_count(); ++i) g.push_back(generator(i));
  return g;
}

std::span<const std::uint8_t> ConcreteGroup::path(Element e) const {
  return {path_data_.data() + path_offsets_[e], path_offsets_[e + 1] - path_offsets_[e]};
}

Word ConcreteGroup::word(Element e) const {
  Word w;
  for (std::uint8_t x : path(e)) w.push_back((x & 1) ? -(x / 2 + 1) : x / 2 + 1);
  return w;
}

Element ConcreteGroup::multiply(Element a, Element b) const {
  for (std::uint8_t x : path(b)) a = act(a, x);
  return a;
}

Element ConcreteGroup::power(Element a, long long n) const {
  if (n < 0) {
    a = inverse(a);
    n = -n;
  }
  Element result = 0;
  while (n > 0) {
    if (n & 1) result = multiply(result, a);
    a = multiply(a, a);
    n >>= 1;
  }
  return result;
}

Element ConcreteGroup::commutator(Element a, Element b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

Element ConcreteGroup::conjugate(Element a, Element b) const {
  return multiply(multiply(inverse(b), a), b);
}

int ConcreteGroup::element_order(Element a) const {
  int n = 1;
  for (Element x = a; x != 0; x = multiply(x, a)) ++n;
  return n;
}

Element ConcreteGroup::evaluate(const Word& w) const {
  Element e = 0;
  for (int l : w) {
    if (l == 0 || std::abs(l) > generator_count()) {
      throw InvalidPresentation("word references undeclared generator " +
                                std::to_string(l));
    }
    e = act(e, letter_column(l));
  }
  return e;
}

Subgroup ConcreteGroup::whole() const {
  std::vector<Element> all(order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return Subgroup(std::move(all), generators());
}

Subgroup ConcreteGroup::trivial() const { return Subgroup({0}, {}); }

namespace {

// Closure of a growing element set under right multiplication by gens.
class Closure {
 public:
  Closure(const ConcreteGroup& g) : g_(g), member_(g.order(), 0) {
    member_[0] = 1;
    list_.push_back(0);
  }

  bool has(Element e) const { return member_[e] != 0; }

  void add_generator(Element s) {
    if (has(s)) {
      gens_.push_back(s);
      return;
    }
    gens_.push_back(s);
    // Old elements times old generators are already inside; rescanning all of
    // them against every generator keeps this simple and still linear.
    for (std::size_t i = 0; i < list_.size(); ++i) {
      for (Element t : gens_) {
        const Element p = g_.multiply(list_[i], t);
        if (!member_[p]) {
          member_[p] = 1;
          list_.push_back(p);
        }
      }
    }
  }

  const std::vector<Element>& gens() const { return gens_; }

  Subgroup take() {
    std::vector<Element> sorted = list_;
    std::sort(sorted.begin(), sorted.end());
    return Subgroup(std::move(sorted), gens_);
  }

 private:
  const ConcreteGroup& g_;
  std::vector<std::uint8_t> member_;
  std::vector<Element> list_;
  std::vector<Element> gens_;
};

}  // namespace

Subgroup ConcreteGroup::generate(std::span<const Element> gens) const {
  Closure c(*this);
  for (Element s : gens) {
    if (s != 0 && !c.has(s)) c.add_generator(s);
  }
  return c.take();
}

Subgroup ConcreteGroup::from_elements(std::vector<Element> elements) const {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Closure c(*this);
  for (Element e : elements) {
    if (!c.has(e)) c.add_generator(e);
  }
  Subgroup s = c.take();
  if (s.elements().size() != elements.size()) {
    throw Error("element set is not closed under multiplication");
  }
  return s;
}

Subgroup ConcreteGroup::normal_closure(std::span<const Element> gens,
                                       const Subgroup& within) const {
  Closure c(*this);
  for (Element s : gens) {
    if (s != 0 && !c.has(s)) c.add_generator(s);
  }
  // Conjugating the generators by the generators of `within` suffices in a
  // finite group.
  for (std::size_t i = 0; i < c.gens().size(); ++i) {
    for (Element w : within.generators()) {
      const Element t = conjugate(c.gens()[i], w);
      if (!c.has(t)) c.add_generator(t);
    }
  }
  return c.take();
}

bool ConcreteGroup::is_normal(const Subgroup& h) const {
  for (Element s : h.generators()) {
    for (Element x : generators()) {
      if (!h.contains(conjugate(s, x))) return false;
    }
  }
  return true;
}

std::vector<Element> ConcreteGroup::coset_labels(const Subgroup& h) const {
  constexpr Element kNone = ~Element{0};
  std::vector<Element> label(order(), kNone);
  std::vector<Element> orbit;
  for (Element x = 0; x < order(); ++x) {
    if (label[x] != kNone) continue;
    // Elements are visited in increasing order, so x is the least of xH.
    orbit.assign(1, x);
    label[x] = x;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element t : h.generators()) {
        const Element y = multiply(orbit[i], t);
        if (label[y] == kNone) {
          label[y] = x;
          orbit.push_back(y);
        }
      }
    }
  }
  return label;
}

int log3_order(std::size_t order) {
  int n = 0;
  while (order > 1 && order % 3 == 0) {
    order /= 3;
    ++n;
  }
  return order == 1 ? n : -1;
}

ConcreteGroup realize(const Presentation& p, const RealizeOptions& options) {
  p.validate();
  if (p.relators.empty()) {
    throw InvalidPresentation("presentation has no relators; the group is infinite");
  }
  EnumerationLimits limits;
  limits.max_index = options.order_bound;
  ConcreteGroup g(enumerate_cosets(p, {}, limits));
  if (log3_order(g.order()) < 0) {
    throw InvalidPresentation("presented group has order " + std::to_string(g.order()) +
                              ", not a power of 3");
  }
  return g;
}

ConcreteGroup quotient(const ConcreteGroup& g, const Subgroup& n) {
  const auto label = g.coset_labels(n);
  std::map<Element, std::uint32_t> index;
  for (Element x = 0; x < g.order(); ++x) {
    if (label[x] == x) index.emplace(x, static_cast<std::uint32_t>(index.size()));
  }
  CosetTable t;
  t.index = index.size();
  t.columns = 2 * g.generator_count();
  t.entries.resize(t.index * t.columns);
  for (const auto& [rep, i] : index) {
    for (int x = 0; x < t.columns; ++x) {
      t.entries[i * t.columns + x] = index.at(label[g.act(rep, x)]);
    }
  }
  return ConcreteGroup(t);
}

Subgroup join(const ConcreteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  std::vector<Element> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return g.generate(gens);
}

Subgroup intersection(const ConcreteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return g.from_elements(std::move(common));
}

Subgroup commutator_subgroup(const ConcreteGroup& g, const Subgroup& a,
                             const Subgroup& b) {
  std::vector<Element> comms;
  for (Element x : a.generators()) {
    for (Element y : b.generators()) comms.push_back(g.commutator(x, y));
  }
  std::vector<Element> both(a.generators().begin(), a.generators().end());
  both.insert(both.end(), b.generators().begin(), b.generators().end());
  return g.normal_closure(comms, g.generate(both));
}

Subgroup derived_subgroup(const ConcreteGroup& g, const Subgroup& h) {
  return commutator_subgroup(g, h, h);
}

Subgroup center(const ConcreteGroup& g) {
  std::vector<Element> z;
  const auto gens = g.generators();
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : gens) {
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return g.from_elements(std::move(z));
}

std::vector<Subgroup> lower_central_series(const ConcreteGroup& g) {
  std::vector<Subgroup> series{g.whole()};
  const Subgroup all = g.whole();
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next.order() == series.back().order()) {
      throw Error("group is not nilpotent");
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> upper_central_series(const ConcreteGroup& g) {
  std::vector<Subgroup> series{g.trivial()};
  const auto gens = g.generators();
  while (series.back().order() < g.order()) {
    const Subgroup& prev = series.back();
    std::vector<Element> next;
    for (Element x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Element s : gens) {
        if (!prev.contains(g.commutator(x, s))) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(x);
    }
    if (next.size() == prev.order()) throw Error("group is not nilpotent");
    series.push_back(g.from_elements(std::move(next)));
  }
  return series;
}

AbelianInvariants section_invariants(const ConcreteGroup& g, const Subgroup& upper,
                                     const Subgroup& lower) {
  const std::uint64_t target = upper.order() / lower.order();
  std::map<int, std::uint64_t> counts;
  std::vector<Element> powers(upper.elements().begin(), upper.elements().end());
  for (int k = 0;; ++k) {
    std::uint64_t inside = 0;
    for (Element x : powers) inside += lower.contains(x) ? 1 : 0;
    counts[k] = inside / lower.order();
    if (counts[k] == target) {
      counts[k + 1] = target;
      break;
    }
    if (k > 64) throw NonRealizableCounts("element census did not stabilize");
    for (Element& x : powers) x = g.multiply(g.multiply(x, x), x);
  }
  return ati_from_order_counts(counts);
}

AbelianInvariants abelian_quotient_invariants(const ConcreteGroup& g,
                                              const Subgroup& h) {
  return section_invariants(g, h, derived_subgroup(g, h));
}

GroupDescriptor descriptor(const ConcreteGroup& g) {
  const Subgroup all = g.whole();
  const Subgroup derived = derived_subgroup(g, all);
  if (g.order() / derived.order() != 9 ||
      section_invariants(g, all, derived) != AbelianInvariants{1, 1}) {
    throw WrongAbelianization("G/G' is not of type (3,3)");
  }
  GroupDescriptor d;
  d.n = log3_order(g.order());
  d.c = static_cast<int>(lower_central_series(g).size()) - 1;
  d.r = d.n - d.c;
  if (d.r == 1) {
    d.k = 1;
    for (const Subgroup& m : maximal_subgroups(g)) {
      if (derived_subgroup(g, m).order() == 1) {
        d.k = 0;
        break;
      }
    }
  } else {
    const Subgroup z = center(g);
    if (z.order() == 3) {
      d.k = 1;
    } else if (z.order() == 9 && section_invariants(g, z, g.trivial()) ==
                                     AbelianInvariants{1, 1}) {
      d.k = 0;
    } else {
      throw UnsupportedShape("centre of order " + std::to_string(z.order()) +
                             " is neither (3) nor (3,3)");
    }
  }
  return d;
}

std::vector<Subgroup> maximal_subgroups(const ConcreteGroup& g) {
  const Subgroup all = g.whole();
  const Subgroup derived = derived_subgroup(g, all);
  if (g.order() / derived.order() != 9) {
    throw WrongAbelianization("G/G' does not have order 9");
  }
  const auto label = g.coset_labels(derived);
  std::vector<Subgroup> found;
  for (Element x = 1; x < g.order(); ++x) {
    if (label[x] != x || derived.contains(x)) continue;
    std::vector<Element> gens{x};
    gens.insert(gens.end(), derived.generators().begin(), derived.generators().end());
    Subgroup h = g.generate(gens);
    if (std::find(found.begin(), found.end(), h) == found.end()) {
      found.push_back(std::move(h));
    }
  }
  if (found.size() != 4) {
    throw WrongAbelianization("expected four maximal subgroups above G', found " +
                              std::to_string(found.size()));
  }
  struct Key {
    int lo;
    AbelianInvariants aqi;
    std::size_t index;
  };
  std::vector<Key> keys;
  for (std::size_t i = 0; i < found.size(); ++i) {
    AbelianInvariants a = abelian_quotient_invariants(g, found[i]);
    keys.push_back({a.log_order(), std::move(a), i});
  }
  // Equal orders: the type with more, smaller factors first, e.g. (1^2)
  // before (2).
  std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
    if (a.lo != b.lo) return a.lo > b.lo;
    if (a.aqi != b.aqi) return a.aqi < b.aqi;
    return found[a.index] < found[b.index];
  });
  std::vector<Subgroup> out;
  for (const Key& k : keys) out.push_back(found[k.index]);
  return out;
}

std::vector<Subgroup> normal_subgroups(const ConcreteGroup& g) {
  // Normal closures of single elements; conjugates and coprime powers give
  // the same closure, so one representative per class is enough.
  std::vector<std::uint8_t> done(g.order(), 0);
  std::set<Subgroup> principal;
  const auto gens = g.generators();
  for (Element x = 1; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> cls{x};
    done[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Element s : gens) {
        for (Element y : {g.conjugate(cls[i], s), g.inverse(cls[i])}) {
          if (!done[y]) {
            done[y] = 1;
            cls.push_back(y);
          }
        }
      }
    }
    const Element one[] = {x};
    principal.insert(g.normal_closure(one));
  }

  std::set<Subgroup> lattice{g.trivial()};
  std::vector<Subgroup> frontier{g.trivial()};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& n : frontier) {
      for (const Subgroup& p : principal) {
        if (p.is_subgroup_of(n)) continue;
        Subgroup j = join(g, n, p);
        if (lattice.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out(lattice.begin(), lattice.end());
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() < b.order();
  });
  return out;
}

Subgroup two_step_centralizer(const ConcreteGroup& g,
                              const std::vector<Subgroup>& lower_central, int j) {
  if (j < 1 || j > static_cast<int>(lower_central.size())) {
    throw Error("two-step centralizer index out of range");
  }
  const Subgroup& gj = lower_central[j - 1];
  const std::size_t idx = static_cast<std::size_t>(j) + 1;
  const Subgroup target = idx < lower_central.size() ? lower_central[idx] : g.trivial();
  std::vector<Element> chi;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element s : gj.generators()) {
      if (!target.contains(g.commutator(x, s))) {
        ok = false;
        break;
      }
    }
    if (ok) chi.push_back(x);
  }
  return g.from_elements(std::move(chi));
}

namespace {

bool relators_hold(const ConcreteGroup& h, const std::vector<Word>& relators,
                   const std::vector<Element>& images,
                   const std::vector<Element>& inverse_images) {
  for (const Word& r : relators) {
    Element e = h.identity();
    for (int l : r) {
      e = h.multiply(e, l > 0 ? images[l - 1] : inverse_images[-l - 1]);
    }
    if (e != h.identity()) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Element>> find_epimorphism(const Presentation& p,
                                                     const ConcreteGroup& h) {
  p.validate();
  const int n = p.generator_count();
  // Generators of h must map onto h modulo the Frattini subgroup, which for
  // a 3-group is generated by G' and cubes.
  std::vector<Element> frattini_gens;
  for (Element x : h.generators()) frattini_gens.push_back(h.power(x, 3));
  const Subgroup derived = derived_subgroup(h, h.whole());
  frattini_gens.insert(frattini_gens.end(), derived.generators().begin(),
                       derived.generators().end());
  const Subgroup frattini = h.normal_closure(frattini_gens);
  std::vector<Element> candidates;
  for (Element x = 0; x < h.order(); ++x) {
    if (!frattini.contains(x)) candidates.push_back(x);
  }
  // Shorter relators first so that most tuples fail fast.
  std::vector<Word> relators = p.relators;
  std::sort(relators.begin(), relators.end(),
            [](const Word& a, const Word& b) { return a.size() < b.size(); });

  std::vector<Element> images(n), inverse_images(n);
  std::vector<std::size_t> idx(n, 0);
  if (candidates.empty()) return std::nullopt;
  while (true) {
    for (int i = 0; i < n; ++i) {
      images[i] = candidates[idx[i]];
      inverse_images[i] = h.inverse(images[i]);
    }
    if (relators_hold(h, relators, images, inverse_images) &&
        h.generate(images).order() == h.order()) {
      return images;
    }
    int i = n - 1;
    while (i >= 0 && ++idx[i] == candidates.size()) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) return std::nullopt;
  }
}

bool isomorphic(const Presentation& p, const ConcreteGroup& g, const ConcreteGroup& h) {
  if (g.order() != h.order()) return false;
  return find_epimorphism(p, h).has_value();
}

}  // namespace coclass
