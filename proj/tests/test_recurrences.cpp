#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pseudou/blocks.hpp"
#include "pseudou/recurrences.hpp"

using namespace pseudou;
using namespace pseudou::recurrences;

namespace {
const std::vector<std::pair<int, int>> kPairs = {
    {5, 1}, {5, 3}, {7, 1}, {7, 3}, {7, 5}, {9, 1}, {9, 5}, {9, 7}};
}

TEST_CASE("builtin table") {
  const auto s = builtin_spec(5, 1);
  CHECK(s.char_poly == std::vector<BigInt>{3, -3, 1});
  CHECK(s.initial == std::vector<BigInt>{2, 3});

  CHECK(builtin_spec(7, 3).char_poly == std::vector<BigInt>{-49, 49, -14, 1});
  CHECK(builtin_spec(9, 7).char_poly ==
        std::vector<BigInt>{257, -257, 101, -10, 1});

  // conjugate exponents resolve to the same spec
  CHECK(builtin_spec(5, 9).label == std::make_pair(5, 1));
  CHECK(builtin_spec(7, 11).initial == builtin_spec(7, 3).initial);

  CHECK_THROWS_AS(builtin_spec(11, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_spec(5, 2), std::invalid_argument);
}

TEST_CASE("extension reproduces the published sequences") {
  CHECK(extend(builtin_spec(5, 1), 11) ==
        std::vector<BigInt>{2, 3, 3, 0, -9, -27, -54, -81, -81, 0, 243});
  CHECK(extend(builtin_spec(7, 1), 11) ==
        std::vector<BigInt>{3, 8, 18, 29, 2, -237, -1275, -4703, -13750,
                            -31156, -41167});
  CHECK(extend(builtin_spec(9, 5), 5) ==
        std::vector<BigInt>{4, 30, 414, 7317, 137862});
  CHECK(extend(builtin_spec(5, 3), 6) ==
        std::vector<BigInt>{2, 5, 15, 50, 175, 625});
}

TEST_CASE("recurrence terms match the enumerated signatures") {
  for (auto [p, e] : kPairs) {
    const int g_max = (p == 9) ? 4 : 5;
    const auto seq = extend(builtin_spec(p, e), g_max);
    const cyclo::RootOfUnity zeta(2 * p, e);
    for (int g = 1; g <= g_max; ++g)
      CHECK(seq[g - 1] == blocks::signature(g, p, zeta).sigma);
  }
}

TEST_CASE("level-5 dimensions for higher genus") {
  const auto seq = extend(builtin_spec(5, 3), 12);
  for (int g = 1; g <= 12; ++g) CHECK(seq[g - 1] == blocks::dim_blocks(g, 5));
}

TEST_CASE("mod orbits") {
  const auto o51 = mod_orbit(builtin_spec(5, 1), 5);
  CHECK(o51.preperiod == 0);
  CHECK(o51.period == 24);
  const std::vector<int> head{2, 3, 3, 0, 1, 3, 1, 4, 4, 0};
  CHECK(std::equal(head.begin(), head.end(), o51.residues.begin()));

  const auto o71 = mod_orbit(builtin_spec(7, 1), 7);
  CHECK(o71.preperiod == 0);
  CHECK(o71.period == 12);
  CHECK(o71.residues == std::vector<int>{3, 1, 4, 1, 2, 1, 6, 1, 5, 1, 0, 1});

  // (7,3) mod 7: eventually periodic, terms repeat with period dividing 36
  // from g = 55 on
  const auto o73 = mod_orbit(builtin_spec(7, 3), 7);
  CHECK(o73.preperiod + 1 <= 55);
  CHECK(36 % o73.period == 0);
  const auto seq = extend(builtin_spec(7, 3), 120);
  for (int g = 55; g + 36 <= 120; ++g)
    CHECK((seq[g - 1] - seq[g + 35]) % 7 == 0);
}

TEST_CASE("zero loci") {
  const auto z51 = zero_locus(builtin_spec(5, 1), 5);
  CHECK(z51.period == 24);
  CHECK(z51.classes == std::vector<int>{4, 10, 16, 22});

  const auto z71 = zero_locus(builtin_spec(7, 1), 7);
  CHECK(z71.period == 12);
  CHECK(z71.classes == std::vector<int>{11});
}

TEST_CASE("invertibility criterion and its guarantees") {
  CHECK(invertibility_criterion(builtin_spec(5, 1), 5));
  CHECK(invertibility_criterion(builtin_spec(7, 5), 7));
  CHECK_FALSE(invertibility_criterion(builtin_spec(7, 3), 7));
  CHECK_FALSE(invertibility_criterion(builtin_spec(9, 5), 3));

  for (auto [p, e] : kPairs) {
    const auto spec = builtin_spec(p, e);
    const int m = (p == 9) ? 3 : p;
    if (!invertibility_criterion(spec, m)) continue;
    const auto orbit = mod_orbit(spec, m);
    // purely periodic and the state never vanishes entirely
    CHECK(orbit.preperiod == 0);
    const auto z = zero_locus(spec, m);
    CHECK(static_cast<int>(z.classes.size()) < z.period);
  }
}

TEST_CASE("companion determinant") {
  for (auto [p, e] : kPairs) {
    const auto spec = builtin_spec(p, e);
    const BigInt det = companion_determinant(spec);
    CHECK((det == spec.char_poly[0] || det == -spec.char_poly[0]));
    CHECK(abs(det) == abs(spec.char_poly[0]));
  }
}

TEST_CASE("input validation") {
  RecurrenceSpec bad;
  bad.char_poly = {3, -3, 2};
  bad.initial = {1, 2};
  CHECK_THROWS_AS(extend(bad, 5), std::invalid_argument);
  CHECK_THROWS_AS(mod_orbit(builtin_spec(5, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(extend(builtin_spec(5, 1), 0), std::invalid_argument);
}
