#include <doctest.h>

#include <map>

#include "coclass/catalog.hpp"
#include "coclass/errors.hpp"

using namespace coclass;

TEST_CASE("group ids parse in several notations") {
  CHECK(parse_id("243,5") == GroupId{243, 5});
  CHECK(parse_id(" <729,40> ") == GroupId{729, 40});
  CHECK(parse_id("81/7") == GroupId{81, 7});
  CHECK(format_id({243, 5}) == "243,5");
  CHECK_THROWS_AS(parse_id("243"), ParseError);
  CHECK_THROWS_AS(parse_id("243,x"), ParseError);
  CHECK_THROWS_AS(parse_id("0,1"), ParseError);
}

TEST_CASE("catalog holds the named groups") {
  const auto& all = catalog();
  CHECK(all.size() == 32);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].id < all[i].id);
  CHECK(lookup({243, 6}).id == GroupId{243, 6});
  CHECK_THROWS_AS(lookup({729, 48}), UnknownId);
  CHECK_THROWS_AS(lookup({5, 1}), UnknownId);
}

TEST_CASE("family entries store the text the builder produces") {
  int with_params = 0;
  for (const auto& e : catalog()) {
    if (!e.params) continue;
    ++with_params;
    CAPTURE(format_id(e.id));
    const Presentation built = parametrized_presentation(*e.params);
    CHECK(built.generator_names == e.presentation.generator_names);
    CHECK(built.relators == e.presentation.relators);
    CHECK(e.params->c == e.expected.c);
    CHECK(e.params->r == e.expected.r);
  }
  CHECK(with_params > 15);
}

TEST_CASE("every catalog entry validates") {
  for (const auto& e : catalog()) {
    CAPTURE(format_id(e.id));
    const ValidationReport rep = validate(e);
    for (const auto& m : rep.mismatches) MESSAGE(m);
    CHECK(rep.ok);
    CHECK(rep.order == static_cast<std::size_t>(e.id.order));
  }
}

TEST_CASE("entries sharing an order are pairwise non-isomorphic") {
  std::map<int, std::vector<const CatalogEntry*>> by_order;
  for (const auto& e : catalog()) by_order[e.id.order].push_back(&e);
  for (const auto& [order, list] : by_order) {
    if (order > 729) continue;
    std::vector<ConcreteGroup> groups;
    for (const auto* e : list) groups.push_back(realize(e->presentation));
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        // Differing descriptors or patterns settle it cheaply.
        if (!(list[i]->expected == list[j]->expected)) continue;
        CAPTURE(format_id(list[i]->id));
        CAPTURE(format_id(list[j]->id));
        CHECK_FALSE(isomorphic(list[i]->presentation, groups[i], groups[j]));
      }
    }
  }
}

TEST_CASE("catalog parser reports malformed records") {
  const std::string good =
      "id 9,2\nexpect c=1 r=1 k=0\ntau1 (1,1,1,1)\ntau2 (0)\nevidence e\n"
      "presentation\ngens x y\nx^3\ny^3\n[x,y]\nend\n";
  CHECK(parse_catalog(good).size() == 1);
  CHECK_THROWS_AS(parse_catalog(good + good), CatalogFormatError);
  CHECK_THROWS_AS(parse_catalog("id 9,2\nexpect c=1\n"), CatalogFormatError);
  CHECK_THROWS_AS(parse_catalog("tau2 (0)\n"), CatalogFormatError);
  CHECK_THROWS_AS(parse_catalog("id 9,2\ncolour red\n"), CatalogFormatError);
  CHECK_THROWS_AS(parse_catalog("id 9,2\npresentation\ngens x\nx^3\nend\n"),
                  CatalogFormatError);
}

TEST_CASE("a wrong expectation is reported, not hidden") {
  CatalogEntry e = lookup({243, 5});
  e.expected_tau2 = AbelianInvariants{2, 2};
  e.expected_kappa = Kappa{0, 0, 0, 0};
  const ValidationReport rep = validate(e);
  CHECK_FALSE(rep.ok);
  CHECK(rep.mismatches.size() == 2);
}
