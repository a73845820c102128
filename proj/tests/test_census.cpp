#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "commhilb/census.hpp"
#include "commhilb/census_io.hpp"

using namespace commhilb;
namespace fs = std::filesystem;

namespace {

using Entries = std::map<std::vector<std::int64_t>, std::int64_t>;

// Conjugates every generator by the unimodular matrix p (integer inverse
// computed from the adjugate; requires det p = +-1).
GroupSpec conjugated(const GroupSpec& spec, const IntMat& p) {
  const std::int64_t det = determinant(p);
  REQUIRE((det == 1 || det == -1));
  REQUIRE(p.size() == 2);
  IntMat inv(2);
  inv.at(0, 0) = det * p.at(1, 1);
  inv.at(0, 1) = -det * p.at(0, 1);
  inv.at(1, 0) = -det * p.at(1, 0);
  inv.at(1, 1) = det * p.at(0, 0);
  REQUIRE((p * inv).is_identity());
  GroupSpec out = spec;
  out.name += "-conjugated";
  for (IntMat& g : out.generators) g = p * g * inv;
  return out;
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / ("commhilb-test-" + name)) {}
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
};

}  // namespace

TEST_CASE("censuses of the smallest groups, element by element") {
  SECTION("U2: identity and the swap") {
    CharPolyCensus c = enumerate_census(group_preset("U2"));
    REQUIRE(c.total == 2);
    REQUIRE(c.entries == Entries{{{1, -2}, 1}, {{-1, 0}, 1}});
  }
  SECTION("A1: plus and minus one") {
    CharPolyCensus c = enumerate_census(group_preset("A1"));
    REQUIRE(c.entries == Entries{{{-1}, 1}, {{1}, 1}});
  }
  SECTION("A2") {
    CharPolyCensus c = enumerate_census(group_preset("A2"));
    REQUIRE(c.total == 6);
    REQUIRE(c.entries == Entries{{{-1, 0}, 3}, {{1, -2}, 1}, {{1, 1}, 2}});
  }
  SECTION("B2") {
    CharPolyCensus c = enumerate_census(group_preset("B2"));
    REQUIRE(c.total == 8);
    REQUIRE(c.entries ==
            Entries{{{-1, 0}, 4}, {{1, -2}, 1}, {{1, 0}, 2}, {{1, 2}, 1}});
  }
  SECTION("G2") {
    CharPolyCensus c = enumerate_census(group_preset("G2"));
    REQUIRE(c.total == 12);
    REQUIRE(c.entries == Entries{{{-1, 0}, 6},
                                 {{1, -2}, 1},
                                 {{1, -1}, 2},
                                 {{1, 1}, 2},
                                 {{1, 2}, 1}});
  }
}

TEST_CASE("census totals across the preset families") {
  REQUIRE(enumerate_census(group_preset("A3")).total == 24);
  REQUIRE(enumerate_census(group_preset("D4")).total == 192);
  REQUIRE(enumerate_census(group_preset("F4")).total == 1152);
  REQUIRE(enumerate_census(group_preset("U4")).total == 24);
  REQUIRE(enumerate_census(group_preset("Spin7")).total == 48);
  REQUIRE(enumerate_census(group_preset("U1")).total == 1);
  REQUIRE(enumerate_census(group_preset("Spin2")).total == 1);

  SECTION("dual Cartan matrices give the same census") {
    REQUIRE(enumerate_census(group_preset("B3")).entries ==
            enumerate_census(group_preset("C3")).entries);
  }
}

TEST_CASE("census is invariant under unimodular change of basis") {
  GroupSpec a2 = group_preset("A2");
  CharPolyCensus reference = enumerate_census(a2);
  for (const IntMat& p : {IntMat::from_rows({{1, 1}, {0, 1}}),
                          IntMat::from_rows({{2, 1}, {1, 1}}),
                          IntMat::from_rows({{1, 0}, {-3, 1}}),
                          IntMat::from_rows({{0, 1}, {1, 0}})}) {
    CharPolyCensus conj = enumerate_census(conjugated(a2, p));
    REQUIRE(conj.entries == reference.entries);
  }
}

TEST_CASE("generator sets outside the orbit encoding fall back to dense hashing") {
  // A unimodular change of basis whose inverse has two columns with all
  // coordinates distinct: the basis orbit under the permutation group then
  // exceeds the compact encoding (two full 8!-orbits), forcing the dense
  // matrix path.  The census must be unchanged.
  const int n = 8;
  IntMat t = IntMat::identity(n);
  for (int i = 1; i < n; ++i) t.at(i, 0) = i + 1;
  for (int i = 2; i < n; ++i) t.at(i, 1) = i;
  IntMat tinv(n);  // forward substitution against the unit lower triangle
  for (int col = 0; col < n; ++col)
    for (int i = 0; i < n; ++i) {
      std::int64_t x = (i == col) ? 1 : 0;
      for (int k = 0; k < i; ++k) x -= t.at(i, k) * tinv.at(k, col);
      tinv.at(i, col) = x;
    }
  REQUIRE((t * tinv).is_identity());

  GroupSpec u8 = group_preset("U8");
  GroupSpec twisted = u8;
  twisted.name = "U8-twisted";
  for (IntMat& g : twisted.generators) g = tinv * g * t;

  detail::BasisOrbit orbit;
  REQUIRE(!detail::build_basis_orbit(twisted, orbit));  // encoding overflows

  CharPolyCensus reference = enumerate_census(u8);
  CharPolyCensus dense = enumerate_census(twisted);
  REQUIRE(dense.total == 40320);
  REQUIRE(dense.entries == reference.entries);
}

TEST_CASE("half of the elements have determinant +1") {
  for (const char* name : {"A2", "B2", "G2", "F4", "U3"}) {
    CharPolyCensus c = enumerate_census(group_preset(name));
    CAPTURE(name);
    REQUIRE(det_plus_count(c) * 2 == c.total);
  }
}

TEST_CASE("closure limits") {
  SECTION("a preset with an understated order aborts") {
    GroupSpec lying = group_preset("A2");
    lying.expected_order = 2;
    lying.degrees = {1, 2};
    REQUIRE_THROWS_WITH(enumerate_census(lying),
                        Catch::Matchers::ContainsSubstring("exceeded limit"));
  }
  SECTION("an infinite group aborts at the limit") {
    GroupSpec infinite;
    infinite.name = "shear";
    infinite.rank = 2;
    infinite.generators = {IntMat::from_rows({{1, 1}, {0, 1}})};
    infinite.degrees = {1, 1};
    infinite.expected_order = 1;
    REQUIRE_THROWS_WITH(enumerate_census(infinite, 1000),
                        Catch::Matchers::ContainsSubstring("exceeded limit"));
  }
  SECTION("limit below the expected order is rejected") {
    REQUIRE_THROWS_AS(enumerate_census(group_preset("G2"), 5), std::invalid_argument);
  }
  SECTION("E8 enumeration is refused with a pointer to file ingestion") {
    REQUIRE_THROWS_WITH(enumerate_census(group_preset("E8")),
                        Catch::Matchers::ContainsSubstring("census file"));
  }
}

TEST_CASE("element lists for the brute-force scope") {
  auto u2 = element_list(group_preset("U2"));
  REQUIRE(u2.size() == 2);
  REQUIRE(u2[0].is_identity());
  REQUIRE(element_list(group_preset("G2")).size() == 12);
  REQUIRE_THROWS_AS(element_list(group_preset("G2"), 5), std::invalid_argument);
}

TEST_CASE("census files round-trip byte-for-byte") {
  GroupSpec g2 = group_preset("G2");
  CharPolyCensus census = enumerate_census(g2);
  TempFile file("g2.census.json");
  write_census(census, g2, file.path);

  CharPolyCensus back = read_census(file.path, g2);
  REQUIRE(back.entries == census.entries);
  REQUIRE(back.total == census.total);

  TempFile file2("g2-second.census.json");
  write_census(back, g2, file2.path);
  std::ifstream a(file.path), b(file2.path);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  REQUIRE(sa == sb);
}

TEST_CASE("census file validation") {
  GroupSpec g2 = group_preset("G2");
  CharPolyCensus census = enumerate_census(g2);
  TempFile file("tampered.census.json");
  write_census(census, g2, file.path);

  nlohmann::json j;
  {
    std::ifstream in(file.path);
    in >> j;
  }

  SECTION("a flipped count fails the checksum") {
    j["entries"][0]["count"] = j["entries"][0]["count"].get<std::int64_t>() + 1;
    std::ofstream(file.path) << j.dump(2);
    REQUIRE_THROWS_WITH(read_census(file.path, g2),
                        Catch::Matchers::ContainsSubstring("checksum"));
  }
  SECTION("a consistent edit still fails on the total") {
    j["entries"][0]["count"] = j["entries"][0]["count"].get<std::int64_t>() + 1;
    CharPolyCensus edited;
    edited.rank = 2;
    for (const auto& e : j["entries"]) {
      edited.entries[e["charpoly"].get<std::vector<std::int64_t>>()] =
          e["count"].get<std::int64_t>();
      edited.total += e["count"].get<std::int64_t>();
    }
    j["checksum"] = census_checksum(edited);
    std::ofstream(file.path) << j.dump(2);
    REQUIRE_THROWS_WITH(read_census(file.path, g2),
                        Catch::Matchers::ContainsSubstring("total"));
  }
  SECTION("format version mismatch") {
    j["format_version"] = 99;
    std::ofstream(file.path) << j.dump(2);
    REQUIRE_THROWS_WITH(read_census(file.path, g2),
                        Catch::Matchers::ContainsSubstring("format version"));
  }
  SECTION("rank mismatch against the requesting group") {
    REQUIRE_THROWS_WITH(read_census(file.path, group_preset("B3")),
                        Catch::Matchers::ContainsSubstring("rank"));
  }
  SECTION("order mismatch against the requesting group") {
    REQUIRE_THROWS_WITH(read_census(file.path, group_preset("B2")),
                        Catch::Matchers::ContainsSubstring("order"));
  }
}

TEST_CASE("a group beyond desk scale is accepted by file ingestion only") {
  GroupSpec e8 = group_preset("E8");

  // Structurally valid stand-in entries with the right total; the identity
  // charpoly (x-1)^8 and the central element's (x+1)^8.
  CharPolyCensus stand_in;
  stand_in.rank = 8;
  stand_in.entries[{1, -8, 28, -56, 70, -56, 28, -8}] = 1;
  stand_in.entries[{1, 8, 28, 56, 70, 56, 28, 8}] = 696729599;
  stand_in.total = 696729600;

  TempFile file("e8.census.json");
  write_census(stand_in, e8, file.path);
  CharPolyCensus back = read_census(file.path, e8);
  REQUIRE(back.total == e8.expected_order);
  REQUIRE(back.total == degree_product(e8.degrees));

  SECTION("the wrong total is rejected") {
    CharPolyCensus wrong = stand_in;
    wrong.entries[{1, 8, 28, 56, 70, 56, 28, 8}] -= 1;
    wrong.total -= 1;
    TempFile bad("e8-bad.census.json");
    REQUIRE_THROWS_WITH(write_census(wrong, e8, bad.path),
                        Catch::Matchers::ContainsSubstring("order"));
  }
}
