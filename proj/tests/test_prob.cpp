#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "betinfo/prob.hpp"

using namespace betinfo;

TEST_CASE("deformed logarithm and exponential") {
  // ln_r at r = 2: (x^{-1} - 1)/(-1) = 1 - 1/x.
  CHECK(ln_r(4.0, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(ln_r(4.0, 1.0) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(ln_r(1.0, 0.3) == doctest::Approx(0.0));
  // Inverse pair.
  for (double r : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    for (double x : {0.25, 1.0, 3.0}) {
      CHECK(exp_q(ln_r(x, r), r) == doctest::Approx(x).epsilon(1e-12));
    }
  }
}

TEST_CASE("eta map and its inverse") {
  for (double r : {-2.0, 0.0, 0.5, 1.0, 3.0}) {
    for (double x : {-0.7, 0.0, 0.4, 1.3}) {
      CHECK(eta_r_inv(eta_r(x, r), r) == doctest::Approx(x).epsilon(1e-12));
    }
  }
  // r = 1 is the identity map.
  CHECK(eta_r(0.37, 1.0) == doctest::Approx(0.37).epsilon(1e-15));
}

TEST_CASE("pseudo addition and subtraction invert each other") {
  for (double r : {0.0, 0.5, 2.0}) {
    const double x = 0.8, y = 0.3;
    CHECK(pseudo_sub(pseudo_add(x, y, r), y, r) ==
          doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("escort distribution") {
  const Pmf p = make_pmf({0.25, 0.75});
  const Pmf e = escort(p, 2.0);
  CHECK(e.w[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(e.w[1] == doctest::Approx(0.9).epsilon(1e-14));
  // s = 1 leaves the distribution unchanged.
  const Pmf e1 = escort(p, 1.0);
  CHECK(e1.w[0] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("marginalization and conditioning round trip") {
  // w[x * ng + g]
  const Joint2 j = make_joint2(2, 2, {0.1, 0.2, 0.3, 0.4});
  const Pmf px = marginalize(j, 0);
  const Pmf pg = marginalize(j, 1);
  CHECK(px.w[0] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(px.w[1] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(pg.w[0] == doctest::Approx(0.4).epsilon(1e-14));

  // p(x|g): rows indexed by x, columns by g.
  const CondTable c = condition(j, 0);
  CHECK(c.at(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(c.at(1, 0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(c.at(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Recomposing gives the joint back (rows = target variable).
  const Joint2 back = compose(c, pg);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t g = 0; g < 2; ++g) {
      CHECK(back.at(x, g) == doctest::Approx(j.at(x, g)).epsilon(1e-12));
    }
  }

  const Pmf col = c.column(1);
  CHECK(col.w[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("odds tables carry a single sign") {
  const OddsTable pos = make_odds({2.0, 4.0});
  CHECK(pos.sign == 1);
  const OddsTable neg = make_odds({-2.0, -4.0});
  CHECK(neg.sign == -1);
  CHECK_THROWS_AS(make_odds({2.0, -4.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_odds({2.0, 0.0}), std::invalid_argument);

  const OddsTable table = make_odds(2, 2, {2.0, 2.0, 4.0, 4.0});
  CHECK(table.at(1, 1) == doctest::Approx(4.0));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(make_pmf({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(make_pmf({-0.5, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_joint2(2, 2, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_cond_table(2, 2, {0.5, 0.5, 0.6, 0.4}),
                  std::invalid_argument);
}
