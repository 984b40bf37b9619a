#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "coclass/abelian_invariants.hpp"
#include "coclass/errors.hpp"

using coclass::AbelianInvariants;

namespace {

// Element-order census of the abelian group Z/3^m1 x ... by enumerating all
// tuples directly.
std::map<int, std::uint64_t> census(const std::vector<int>& exps) {
  std::vector<std::uint64_t> mod;
  std::uint64_t order = 1;
  for (int m : exps) {
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) q *= 3;
    mod.push_back(q);
    order *= q;
  }
  std::map<int, std::uint64_t> counts;
  for (int k = 0;; ++k) {
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= 3;
    std::uint64_t hits = 0;
    std::vector<std::uint64_t> t(mod.size(), 0);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      std::uint64_t rest = idx;
      bool zero = true;
      for (std::size_t i = 0; i < mod.size(); ++i) {
        const std::uint64_t a = rest % mod[i];
        rest /= mod[i];
        if ((a * pk) % mod[i] != 0) zero = false;
      }
      hits += zero ? 1 : 0;
    }
    counts[k] = hits;
    if (hits == order) {
      counts[k + 1] = hits;  // the decoder wants the stable value twice
      break;
    }
  }
  return counts;
}

std::vector<int> random_exponents(std::mt19937& rng, int max_lo) {
  std::vector<int> e;
  int left = std::uniform_int_distribution<int>(0, max_lo)(rng);
  while (left > 0) {
    const int m = std::uniform_int_distribution<int>(1, left)(rng);
    e.push_back(m);
    left -= m;
  }
  return e;
}

}  // namespace

TEST_CASE("order census decoding") {
  CHECK(coclass::ati_from_order_counts({{0, 1}, {1, 9}, {2, 27}, {3, 27}}) ==
        AbelianInvariants{2, 1});
  CHECK(coclass::ati_from_order_counts({{0, 1}, {1, 1}}).trivial());
  CHECK(coclass::ati_from_order_counts({{0, 1}, {1, 9}, {2, 9}}) ==
        AbelianInvariants{1, 1});
  CHECK(coclass::ati_from_order_counts(census({2, 1})) == AbelianInvariants{2, 1});
}

TEST_CASE("order census rejects impossible counts") {
  CHECK_THROWS_AS(coclass::ati_from_order_counts({{0, 1}, {1, 10}, {2, 10}}),
                  coclass::NonRealizableCounts);
  CHECK_THROWS_AS(coclass::ati_from_order_counts({{0, 3}, {1, 9}, {2, 9}}),
                  coclass::NonRealizableCounts);
  // (3) grows by 3, then by 9: no abelian group does that.
  CHECK_THROWS_AS(coclass::ati_from_order_counts({{0, 1}, {1, 3}, {2, 27}, {3, 27}}),
                  coclass::NonRealizableCounts);
  CHECK_THROWS_AS(coclass::ati_from_order_counts({{0, 1}, {1, 9}, {2, 3}}),
                  coclass::NonRealizableCounts);
}

TEST_CASE("census decoding is a left inverse on small groups") {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto e = random_exponents(rng, 8);
    const AbelianInvariants a(e);
    CHECK(coclass::ati_from_order_counts(census(e)) == a);
  }
}

TEST_CASE("nearly homocyclic groups") {
  CHECK(coclass::nearly_homocyclic(7) == AbelianInvariants{4, 3});
  CHECK(coclass::nearly_homocyclic(0).trivial());
  CHECK(coclass::nearly_homocyclic(4) == AbelianInvariants{2, 2});
  CHECK(coclass::nearly_homocyclic(1) == AbelianInvariants{1});
  for (int n = 0; n <= 40; ++n) {
    const auto a = coclass::nearly_homocyclic(n);
    CHECK(a.log_order() == n);
    CHECK(a.rank() <= 2);
    if (a.rank() == 2) CHECK(a.exponents()[0] - a.exponents()[1] <= 1);
  }
}

TEST_CASE("direct products") {
  CHECK(coclass::direct_product({2, 2}, {1}) == AbelianInvariants{2, 2, 1});
  CHECK(coclass::direct_product(coclass::nearly_homocyclic(2), coclass::nearly_homocyclic(1)) ==
        AbelianInvariants{1, 1, 1});
  CHECK(coclass::direct_product(coclass::nearly_homocyclic(2), coclass::nearly_homocyclic(2)) ==
        AbelianInvariants{1, 1, 1, 1});
}

TEST_CASE("logarithmic text form") {
  CHECK(coclass::format_log({2, 1, 1, 1, 1}) == "(21^4)");
  CHECK(coclass::parse_log("4^23^2") == AbelianInvariants{4, 4, 3, 3});
  CHECK(coclass::parse_log("(4^23^2)") == AbelianInvariants{4, 4, 3, 3});
  CHECK(coclass::format_log({}) == "()");
  CHECK(coclass::parse_log("()").trivial());
  CHECK(coclass::parse_log("(0)").trivial());
  CHECK(coclass::parse_log("(12,3)") == AbelianInvariants{12, 3});
  CHECK(coclass::parse_log(coclass::format_log({12, 3})) == AbelianInvariants{12, 3});
  CHECK(coclass::parse_log("1^{12}") == AbelianInvariants(std::vector<int>(12, 1)));
}

TEST_CASE("malformed logarithmic text") {
  for (const char* bad : {"(12", "(1a)", "(13)", "(2^)", "(,1)", "(1,2)", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(coclass::parse_log(bad), coclass::ParseError);
  }
  try {
    coclass::parse_log("(2x)");
    FAIL("expected a parse error");
  } catch (const coclass::ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("format and parse round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> e;
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < len; ++i) e.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    const AbelianInvariants a(e);
    CHECK(coclass::parse_log(coclass::format_log(a)) == a);
  }
}
