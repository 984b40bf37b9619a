#include <doctest.h>

#include <filesystem>
#include <map>
#include <stdexcept>

#include "coclass/errors.hpp"
#include "coclass/fields.hpp"

using namespace coclass;

namespace {

const std::filesystem::path kData = COCLASS_DATA_DIR;

std::vector<FieldRecord> load(const char* name) {
  const LoadResult r = load_records(kData / "fields" / name, Validation::strict);
  REQUIRE(r.diagnostics.empty());
  return r.records;
}

std::map<int, std::int64_t> minima(const std::vector<FieldRecord>& recs, Family f) {
  std::map<int, std::int64_t> out;
  for (const auto& row : minimal_table(recs, f)) out[row.coclass] = row.record.label;
  return out;
}

const char* kFixtures[] = {"imaginary.csv", "real.csv", "cyclic_cubic.csv",
                           "pure_sextic.csv"};

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("imaginary-quadratic") == Family::imaginary_quadratic);
  CHECK(parse_family("real_quadratic") == Family::real_quadratic);
  CHECK(parse_family("cubic") == Family::cyclic_cubic);
  CHECK(parse_family("pure-sextic") == Family::pure_sextic);
  CHECK(format_family(Family::cyclic_cubic) == "cyclic-cubic");
  CHECK_THROWS_AS(parse_family("quartic"), UnsupportedFamily);
}

TEST_CASE("fixtures load") {
  CHECK(load("imaginary.csv").size() == 4);
  CHECK(load("real.csv").size() == 5);
  CHECK(load("cyclic_cubic.csv").size() == 5);
  CHECK(load("pure_sextic.csv").size() == 4);
  CHECK(parse_records("").records.empty());
  CHECK(parse_records("family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra\n")
            .records.empty());
  CHECK_THROWS_AS(load_records(kData / "fields" / "missing.csv"), RecordError);
}

TEST_CASE("classification reproduces the tabulated coclass") {
  int rows = 0;
  for (const char* name : kFixtures) {
    for (const auto& rec : load(name)) {
      CAPTURE(rec.label);
      REQUIRE(rec.cc.has_value());
      const Classification c = classify(rec);
      CHECK(c.verdict.coclass == *rec.cc);
      CHECK(c.agrees_with_table == true);
      CHECK(classify(rec, Validation::strict).verdict == c.verdict);
      if (c.verdict.abelian) {
        CHECK(c.copolarization_lo == 1);
      } else {
        CHECK(c.copolarization_lo == *rec.cc + 1);
      }
      ++rows;
    }
  }
  CHECK(rows == 18);
}

TEST_CASE("classification examples") {
  FieldRecord rec;
  rec.family = Family::real_quadratic;
  rec.label = 32009;
  rec.tau = {AbelianInvariants{1, 1}, {2, 1}, {1, 1}, {1, 1}};
  auto c = classify(rec);
  CHECK(c.verdict == CoclassVerdict{1, false});
  CHECK(c.copolarization_lo == 2);
  CHECK_FALSE(c.agrees_with_table.has_value());

  rec.tau = {AbelianInvariants{3, 2}, {1, 1, 1}, {2, 2}, {1, 1, 1}};
  c = classify(rec);
  CHECK(c.verdict.coclass == 3);
  CHECK(c.copolarization_lo == 4);

  rec.tau = {AbelianInvariants{2}, {1}, {1}, {1}};
  CHECK_THROWS_AS(classify(rec, Validation::strict), InconsistentPattern);
}

TEST_CASE("minimal tables") {
  const auto imag = load("imaginary.csv");
  CHECK(minima(imag, Family::imaginary_quadratic) ==
        std::map<int, std::int64_t>{{2, 3896}, {4, 27156}, {6, 423640}, {8, 99888340}});
  CHECK(minima(load("real.csv"), Family::real_quadratic) ==
        std::map<int, std::int64_t>{
            {1, 32009}, {2, 214712}, {3, 710652}, {4, 8127208}, {5, 180527768}});
  CHECK(minima(load("cyclic_cubic.csv"), Family::cyclic_cubic) ==
        std::map<int, std::int64_t>{{1, 657}, {2, 7657}, {3, 41839}, {4, 231469}});
  CHECK(minima(load("pure_sextic.csv"), Family::pure_sextic) ==
        std::map<int, std::int64_t>{{1, 30}, {2, 418}, {3, 1626}});
  CHECK(minimal_table(imag, Family::real_quadratic).empty());
  const std::vector<FieldRecord> one{imag[1]};
  const auto single = minimal_table(one, Family::imaginary_quadratic);
  REQUIRE(single.size() == 1);
  CHECK(single[0].coclass == 4);
  CHECK(single[0].record == imag[1]);
}

TEST_CASE("imaginary quadratic coclasses are even") {
  for (const auto& rec : load("imaginary.csv")) {
    CHECK(classify(rec).verdict.coclass % 2 == 0);
  }
}

TEST_CASE("save and load round trip") {
  for (const char* name : kFixtures) {
    const auto recs = load(name);
    const auto again = parse_records(save_records(recs), Validation::strict).records;
    CHECK(again == recs);
  }
  FieldRecord odd;
  odd.family = Family::cyclic_cubic;
  odd.label = 7;
  odd.factorization = "a, \"quoted\" cell";
  odd.tau = {AbelianInvariants{12, 3}, {1}, {1}, {1}};
  const auto back = parse_records(save_records({odd}), Validation::strict).records;
  REQUIRE(back.size() == 1);
  CHECK(back[0] == odd);
}

TEST_CASE("malformed rows") {
  const std::string header =
      "family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra\n";
  const std::string three = header + "imaginary-quadratic,3896,,111,21,111,,H.4,,,\n";
  const LoadResult lenient = parse_records(three);
  CHECK(lenient.records.empty());
  REQUIRE(lenient.diagnostics.size() == 1);
  CHECK(lenient.diagnostics[0].line == 2);
  CHECK(lenient.diagnostics[0].message.find("expected 4 extension invariants") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_records(three, Validation::strict), RecordError);

  const std::string bad_label = header + "real-quadratic,-5,,11,21,11,11,,,,,\n";
  CHECK_THROWS_AS(parse_records(bad_label, Validation::strict), RecordError);
  const std::string trivial = header + "real-quadratic,5,,11,0,11,11,,,,,\n";
  CHECK_THROWS_AS(parse_records(trivial, Validation::strict), RecordError);
  const std::string family = header + "quartic,5,,11,21,11,11,,,,,\n";
  CHECK(parse_records(family).diagnostics.size() == 1);
  const std::string good = header + "real-quadratic,5,,11,21,11,11,,,,,\n" + family.substr(header.size());
  const LoadResult mixed = parse_records(good);
  CHECK(mixed.records.size() == 1);
  CHECK(mixed.diagnostics.size() == 1);
}

TEST_CASE("discriminants from conductors") {
  CHECK(discriminant_from_conductor(Family::cyclic_cubic, 657) == 431649);
  CHECK(discriminant_from_conductor(Family::pure_sextic, 30) == -21870000);
  CHECK(discriminant_from_conductor(Family::pure_sextic, 1) == -27);
  CHECK_THROWS_AS(discriminant_from_conductor(Family::real_quadratic, 5), UnsupportedFamily);
  CHECK_THROWS_AS(discriminant_from_conductor(Family::pure_sextic, 1LL << 20),
                  std::overflow_error);
}
