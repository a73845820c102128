#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commhilb/census.hpp"
#include "commhilb/molien.hpp"
#include "commhilb/triseries.hpp"
#include "commhilb/unipoly.hpp"

using namespace commhilb;

namespace {

TriSeries random_series(std::mt19937& rng, Caps caps, bool unit_constant = false) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  TriSeries x(caps);
  for (int a = 0; a <= caps.q; ++a)
    for (int b = 0; b <= caps.s; ++b)
      for (int m = 0; m <= caps.t; ++m) x.set_coeff(a, b, m, Rat(num(rng), den(rng)));
  if (unit_constant && x.coeff(0, 0, 0) == 0) x.set_coeff(0, 0, 0, Rat(1));
  return x;
}

}  // namespace

TEST_CASE("univariate polynomial basics") {
  UniPoly p{Rat(1), Rat(2), Rat(1)};
  REQUIRE(p.str("t") == "1 + 2*t + t^2");
  REQUIRE(p == UniPoly{Rat(1), Rat(1)} * UniPoly{Rat(1), Rat(1)});
  REQUIRE(p.eval(Rat(3)) == 16);
  REQUIRE(p.divide_exact(UniPoly{Rat(1), Rat(1)}) == UniPoly{Rat(1), Rat(1)});
  REQUIRE_THROWS_AS(p.divide_exact(UniPoly{Rat(1), Rat(3)}), std::domain_error);
  REQUIRE(UniPoly{Rat(1), Rat(-1)}.inverse_trunc(3) ==
          UniPoly{Rat(1), Rat(1), Rat(1), Rat(1)});
  REQUIRE((UniPoly{Rat(0)}).is_zero());
  REQUIRE(UniPoly{Rat(-1), Rat(0), Rat(Int(1), Int(2))}.str("q") == "-1 + 1/2*q^2");
}

TEST_CASE("trigraded arithmetic on tiny inputs") {
  const Caps caps{2, 2, 0};
  TriSeries one_plus(caps), one_minus(caps);
  one_plus.set_coeff(0, 0, 0, Rat(1));
  one_plus.set_coeff(1, 1, 0, Rat(1));  // 1 + q s
  one_minus.set_coeff(0, 0, 0, Rat(1));
  one_minus.set_coeff(1, 1, 0, Rat(-1));  // 1 - q s
  TriSeries expected(caps);
  expected.set_coeff(0, 0, 0, Rat(1));
  expected.set_coeff(2, 2, 0, Rat(-1));
  REQUIRE(mul(one_plus, one_minus) == expected);

  REQUIRE(scale(one_plus, Rat(0)).is_zero());
  REQUIRE(add(one_plus, scale(one_plus, Rat(-1))).is_zero());
}

TEST_CASE("caps are enforced") {
  TriSeries x(Caps{1, 1, 1}), y(Caps{2, 1, 1});
  REQUIRE_THROWS_AS(x + y, std::invalid_argument);
  REQUIRE_THROWS_AS(x * y, std::invalid_argument);
  REQUIRE_THROWS_AS(x.embedded(Caps{0, 5, 5}), std::invalid_argument);
  REQUIRE_THROWS_AS(x.set_coeff(2, 0, 0, Rat(1)), std::out_of_range);
  REQUIRE(x.embedded(Caps{4, 4, 4}).caps() == Caps{4, 4, 4});
}

TEST_CASE("series inversion") {
  SECTION("geometric series") {
    TriSeries x(Caps{0, 0, 3});
    x.set_coeff(0, 0, 0, Rat(1));
    x.set_coeff(0, 0, 1, Rat(-1));  // 1 - t
    TriSeries inv = inverse(x);
    for (int m = 0; m <= 3; ++m) REQUIRE(inv.coeff(0, 0, m) == 1);
  }
  SECTION("2 - (1+t)^2, checked against its linear recurrence") {
    // The closed form 1/(1 - 2t - t^2) satisfies c_k = 2 c_{k-1} + c_{k-2}.
    std::vector<Rat> expect = {Rat(1), Rat(2)};
    for (int k = 2; k <= 5; ++k)
      expect.push_back(2 * expect[k - 1] + expect[k - 2]);
    TriSeries x(Caps{0, 0, 5});
    x.set_coeff(0, 0, 0, Rat(1));   // 2 - (1+t)^2 = 1 - 2t - t^2
    x.set_coeff(0, 0, 1, Rat(-2));
    x.set_coeff(0, 0, 2, Rat(-1));
    TriSeries inv = inverse(x);
    for (int m = 0; m <= 5; ++m) REQUIRE(inv.coeff(0, 0, m) == expect[m]);
  }
  SECTION("inverse of one is one") {
    REQUIRE(inverse(TriSeries::one(Caps{2, 2, 2})) == TriSeries::one(Caps{2, 2, 2}));
  }
  SECTION("zero constant term is rejected") {
    TriSeries x(Caps{1, 1, 1});
    x.set_coeff(1, 0, 0, Rat(1));
    REQUIRE_THROWS_AS(inverse(x), std::domain_error);
  }
  SECTION("the inverse is two-sided within caps") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      TriSeries x = random_series(rng, Caps{2, 2, 2}, true);
      REQUIRE(mul(x, inverse(x)) == TriSeries::one(Caps{2, 2, 2}));
      REQUIRE(mul(inverse(x), x) == TriSeries::one(Caps{2, 2, 2}));
    }
  }
}

TEST_CASE("ring axioms hold within caps") {
  std::mt19937 rng(20240811);
  const Caps caps{3, 3, 2};
  for (int trial = 0; trial < 12; ++trial) {
    TriSeries x = random_series(rng, caps);
    TriSeries y = random_series(rng, caps);
    TriSeries z = random_series(rng, caps);
    REQUIRE(mul(x, y) == mul(y, x));
    REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    REQUIRE(mul(add(x, y), z) == add(mul(x, z), mul(y, z)));
    REQUIRE(add(add(x, y), z) == add(x, add(y, z)));
  }
}

TEST_CASE("determinant factors from characteristic polynomials") {
  SECTION("identity of rank 2") {
    auto [det_q, det_s] = eval_det_factors({1, -2, 1});
    REQUIRE(det_q == UniPoly{Rat(1), Rat(0), Rat(-2), Rat(0), Rat(1)});
    REQUIRE(det_s == UniPoly{Rat(1), Rat(2), Rat(1)});
  }
  SECTION("the swap") {
    auto [det_q, det_s] = eval_det_factors({-1, 0, 1});
    REQUIRE(det_q == UniPoly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
    REQUIRE(det_s == UniPoly{Rat(1), Rat(0), Rat(-1)});
  }
  SECTION("negation in rank 1") {
    auto [det_q, det_s] = eval_det_factors({1, 1});
    REQUIRE(det_q == UniPoly{Rat(1), Rat(0), Rat(1)});
    REQUIRE(det_s == UniPoly{Rat(1), Rat(-1)});
  }
  SECTION("identity in every rank up to 8: (1-q^2)^n and (1+s)^n") {
    for (int n = 1; n <= 8; ++n) {
      UniPoly id = UniPoly{Rat(-1), Rat(1)}.pow(n);  // (x-1)^n
      std::vector<std::int64_t> cp;
      for (int k = 0; k <= n; ++k) cp.push_back(to_integer(id.coeff(k)).convert_to<std::int64_t>());
      auto [det_q, det_s] = eval_det_factors(cp);
      REQUIRE(det_q == UniPoly{Rat(1), Rat(0), Rat(-1)}.pow(n));
      REQUIRE(det_s == UniPoly{Rat(1), Rat(1)}.pow(n));
    }
  }
  SECTION("normalization at the origin over a whole census") {
    for (const auto& [cp, count] : enumerate_census(group_preset("G2")).entries) {
      std::vector<std::int64_t> monic = cp;
      monic.push_back(1);
      auto [det_q, det_s] = eval_det_factors(monic);
      REQUIRE(det_q.coeff(0) == 1);
      REQUIRE(det_s.coeff(0) == 1);
    }
  }
  SECTION("non-monic input is rejected") {
    REQUIRE_THROWS_AS(eval_det_factors({1, -2, 2}), std::invalid_argument);
  }
}

TEST_CASE("collapsing the q-grading") {
  SECTION("the golden rank-2 series at tensor length 1 gives 2s + s^2") {
    TriSeries f = closed_form_u2(Caps{6, 6, 3});
    TriSeries collapsed = sum_q(f);
    // Independent route: (1+s)^2 - 1.
    UniPoly expect = UniPoly{Rat(1), Rat(1)}.pow(2) - UniPoly::one();
    for (int b = 0; b <= 6; ++b) REQUIRE(collapsed.coeff(0, b, 1) == expect.coeff(b));
    REQUIRE(collapsed.coeff(0, 1, 1) == 2);
    REQUIRE(collapsed.coeff(0, 2, 1) == 1);
  }
  SECTION("constants and zero") {
    REQUIRE(sum_q(TriSeries::one(Caps{3, 2, 2})) == TriSeries::one(Caps{0, 2, 2}));
    REQUIRE(sum_q(TriSeries(Caps{3, 2, 2})).is_zero());
  }
}

TEST_CASE("canonical text rendering orders terms by (m, b, a)") {
  TriSeries x(Caps{2, 1, 1});
  x.set_coeff(0, 0, 0, Rat(1));
  x.set_coeff(0, 1, 1, Rat(2));
  x.set_coeff(2, 1, 1, Rat(1));
  REQUIRE(x.str() == "1 + 2*s*t + q^2*s*t");

  TriSeries y(Caps{0, 2, 1});
  y.set_coeff(0, 2, 1, Rat(-1));
  y.set_coeff(0, 0, 0, Rat(1));
  REQUIRE(y.str() == "1 - s^2*t");
  REQUIRE(TriSeries(Caps{1, 1, 1}).str() == "0");
}
