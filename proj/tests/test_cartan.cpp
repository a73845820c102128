#include <catch2/catch_amalgamated.hpp>

#include "commhilb/cartan.hpp"

using namespace commhilb;

TEST_CASE("named presets carry the expected classical data") {
  SECTION("U2") {
    GroupSpec s = group_preset("U2");
    REQUIRE(s.rank == 2);
    REQUIRE(s.generators.size() == 1);
    REQUIRE(s.generators[0] == IntMat::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(s.degrees == std::vector<int>{1, 2});
    REQUIRE(s.expected_order == 2);
  }
  SECTION("G2") {
    GroupSpec s = group_preset("G2");
    REQUIRE(s.rank == 2);
    REQUIRE(s.degrees == std::vector<int>{2, 6});
    REQUIRE(s.expected_order == 12);
  }
  SECTION("exceptional orders") {
    REQUIRE(group_preset("F4").expected_order == 1152);
    REQUIRE(group_preset("E6").expected_order == 51840);
    REQUIRE(group_preset("E7").expected_order == 2903040);
    REQUIRE(group_preset("E7").rank == 7);
    REQUIRE(group_preset("E8").expected_order == 696729600);
  }
  SECTION("classical families") {
    REQUIRE(group_preset("A4").expected_order == 120);
    REQUIRE(group_preset("B5").expected_order == 3840);
    REQUIRE(group_preset("C5").expected_order == 3840);
    REQUIRE(group_preset("D5").expected_order == 1920);
    REQUIRE(group_preset("U5").expected_order == 120);
    REQUIRE(group_preset("SU5").expected_order == 120);
    REQUIRE(group_preset("SU5").rank == 4);
    REQUIRE(group_preset("Sp3").expected_order == 48);
    REQUIRE(group_preset("Spin7").expected_order == 48);   // B3
    REQUIRE(group_preset("Spin8").expected_order == 192);  // D4
    REQUIRE(group_preset("Spin9").degrees == std::vector<int>{2, 4, 6, 8});
    REQUIRE(group_preset("Spin8").degrees == std::vector<int>{2, 4, 6, 4});
  }
  SECTION("rank-1 torus groups are trivial") {
    REQUIRE(group_preset("U1").expected_order == 1);
    REQUIRE(group_preset("U1").generators.empty());
    REQUIRE(group_preset("Spin2").expected_order == 1);
    REQUIRE(group_preset("Spin2").degrees == std::vector<int>{1});
  }
}

TEST_CASE("every generator is an involution with determinant -1") {
  for (const char* name : {"U4", "SU4", "Sp3", "Spin5", "Spin6", "A3", "B3", "C3",
                           "D4", "G2", "F4", "E6"}) {
    GroupSpec s = group_preset(name);
    REQUIRE(degree_product(s.degrees) == s.expected_order);
    for (const IntMat& g : s.generators) {
      CAPTURE(name);
      REQUIRE(g.is_involution());
      REQUIRE(determinant(g) == -1);
    }
  }
}

TEST_CASE("reflection construction from a Cartan matrix") {
  SECTION("rank 1 is negation") {
    auto gens = cartan_reflections({{2}});
    REQUIRE(gens.size() == 1);
    REQUIRE(gens[0] == IntMat::from_rows({{-1}}));
  }
  SECTION("the A2 braid relation: product of the generators has order 3") {
    auto gens = cartan_reflections({{2, -1}, {-1, 2}});
    IntMat p = gens[0] * gens[1];
    IntMat ppp = p * p * p;
    REQUIRE(!(p * p).is_identity());
    REQUIRE(ppp.is_identity());
  }
  SECTION("the G2 bond: product of the generators has order 6") {
    auto gens = cartan_reflections({{2, -1}, {-3, 2}});
    IntMat p = gens[0] * gens[1];
    IntMat acc = p;
    for (int k = 1; k < 6; ++k) {
      REQUIRE(!acc.is_identity());
      acc = acc * p;
    }
    REQUIRE(acc.is_identity());
  }
  SECTION("invalid input") {
    REQUIRE_THROWS_AS(cartan_reflections({{2, -1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(cartan_reflections({{1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(cartan_reflections({{2, 1}, {1, 2}}), std::invalid_argument);
  }
}

TEST_CASE("label and family resolution") {
  REQUIRE(resolve_group("Un", 3).name == "U3");
  REQUIRE(resolve_group("Spin2n1", 3).name == "Spin7");
  REQUIRE(resolve_group("Spin2n", 4).name == "Spin8");
  REQUIRE(resolve_group("E7").name == "E7");

  SECTION("SO aliases share Weyl data with Spin and carry a component note") {
    GroupSpec so5 = group_preset("SO5");
    GroupSpec spin5 = group_preset("Spin5");
    REQUIRE(so5.rank == spin5.rank);
    REQUIRE(so5.degrees == spin5.degrees);
    REQUIRE(so5.generators == spin5.generators);
    REQUIRE(!so5.note.empty());
    REQUIRE(spin5.note.empty());
    REQUIRE(group_preset("SO3").expected_order == 2);
  }

  SECTION("errors") {
    REQUIRE_THROWS_AS(group_preset("H3"), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("E9"), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("U0"), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("SU1"), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("U"), std::invalid_argument);
    REQUIRE_THROWS_AS(resolve_group("Un"), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("Un", 0), std::invalid_argument);
    REQUIRE_THROWS_AS(group_preset("Un", 99), std::invalid_argument);
  }
}
