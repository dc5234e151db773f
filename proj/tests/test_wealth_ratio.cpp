#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "betinfo/betting.hpp"
#include "betinfo/entropies.hpp"
#include "betinfo/prob.hpp"
#include "betinfo/wealth_ratio.hpp"

using namespace betinfo;

TEST_CASE("order-2 aggregate probability as a betting value") {
  const Pmf p = make_pmf({0.25, 0.75});
  const BettingProbReport rep = renyi_prob_via_betting(p, 2.0, 1.0);
  // Collision probability of (1/4, 3/4) is 5/8.
  CHECK(rep.scaled_prob == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(rep.closed_max == doctest::Approx(0.625).epsilon(1e-10));
  CHECK(rep.agree);
}

TEST_CASE("negative-order aggregate probability as a betting value") {
  const Pmf p = make_pmf({0.25, 0.75});
  const BettingProbReport rep = renyi_prob_via_betting(p, -1.0, 1.0);
  // Order -1 aggregate of (1/4, 3/4) is sqrt(3/16); the game value carries
  // the negative orientation of the odds.
  CHECK(rep.scaled_prob ==
        doctest::Approx(-std::sqrt(3.0 / 16.0)).epsilon(1e-12));
  CHECK(rep.agree);
}

TEST_CASE("conditional aggregate probability as a betting value") {
  const Joint2 j = make_joint2(2, 2, {0.1, 0.2, 0.3, 0.4});
  for (double q : {0.5, 2.0}) {
    const BettingProbReport rep = arimoto_prob_via_betting(j, q, 1.0);
    CHECK(rep.scaled_prob ==
          doctest::Approx(renyi_cond_probability(j, q)).epsilon(1e-12));
    CHECK(rep.agree);
  }
}

TEST_CASE("scale parameter multiplies the game value") {
  const Pmf p = make_pmf({0.25, 0.75});
  const BettingProbReport one = renyi_prob_via_betting(p, 2.0, 1.0);
  const BettingProbReport ten = renyi_prob_via_betting(p, 2.0, 10.0);
  CHECK(ten.scaled_prob == doctest::Approx(10.0 * one.scaled_prob));
  CHECK(ten.closed_max ==
        doctest::Approx(10.0 * one.closed_max).epsilon(1e-10));
}

TEST_CASE("strategy comparison reports the directional wealth ratio") {
  const BettingGame game =
      make_game_none(make_pmf({0.5, 0.5}), make_odds({2.0, 2.0}));
  const Strategy skew = strategy_from_pmf(make_pmf({0.9, 0.1}));
  const Strategy even = strategy_from_pmf(make_pmf({0.5, 0.5}));
  // Log-optimal play: even bet yields 1, skewed bet yields sqrt(0.36) = 0.6.
  const AdvantageReport rep = advantage_strategies(game, skew, even, 1.0);
  CHECK(rep.numerator == 2);
  CHECK(rep.ratio == doctest::Approx(1.0 / 0.6).epsilon(1e-12));
  const AdvantageReport flip = advantage_strategies(game, even, skew, 1.0);
  CHECK(flip.numerator == 1);
  CHECK(flip.ratio == doctest::Approx(1.0 / 0.6).epsilon(1e-12));
}

TEST_CASE("side information never hurts with matched-sign odds") {
  const Joint2 dep = make_joint2(2, 2, {0.4, 0.1, 0.1, 0.4});
  const Joint2 ind = make_joint2(2, 2, {0.25, 0.25, 0.25, 0.25});
  // Both games quote the same unconditional odds on the outcome.
  const OddsTable odds = make_odds({2.0, 2.0});
  for (double R : {0.5, 1.0, 2.0}) {
    CHECK(advantage_side_information(odds, dep, R) >= 1.0 - 1e-10);
    CHECK(advantage_side_information(odds, ind, R) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("generic outer valuation of the wealth ratio") {
  const BettingGame game =
      make_game_none(make_pmf({0.25, 0.75}), make_odds({3.0, 1.5}));
  const Strategy b1 = strategy_from_pmf(make_pmf({0.4, 0.6}));
  const Strategy b2 = strategy_from_pmf(make_pmf({0.5, 0.5}));
  const double direct = ice(game, b1, 2.0) / ice(game, b2, 2.0);
  const double via =
      wealth_ratio_value(game, b1, b2, 2.0, [](double x) { return x; });
  CHECK(via == doctest::Approx(direct).epsilon(1e-12));
  CHECK_THROWS_AS(
      wealth_ratio_value(game, b1,
                         strategy_from_pmf(make_pmf({1.0, 0.0})), 2.0,
                         [](double x) { return x; }),
      std::domain_error);
}

TEST_CASE("two-parameter mutual information as a wealth-ratio utility") {
  const Joint2 j = make_joint2(2, 2, {0.4, 0.1, 0.1, 0.4});
  // Order (1, 1) is Shannon mutual information of the joint.
  const IdMiOperationalReport rep = id_mi_operational(j, {1.0, 1.0}, 1.0);
  CHECK(rep.agree);
  CHECK(rep.lhs_id_mi == doctest::Approx(id_mutual_information(j, {1.0, 1.0}))
                             .epsilon(1e-12));
  CHECK(rep.rhs_utility_of_ratio ==
        doctest::Approx(rep.log_ratio).epsilon(1e-12));

  // The stake scale cancels in the ratio.
  const IdMiOperationalReport low = id_mi_operational(j, {2.0, 0.5}, 0.5);
  const IdMiOperationalReport high = id_mi_operational(j, {2.0, 0.5}, 10.0);
  CHECK(low.rhs_utility_of_ratio ==
        doctest::Approx(high.rhs_utility_of_ratio).epsilon(1e-10));
  CHECK(low.agree);
  CHECK(high.agree);
}

TEST_CASE("zero-equivalent reference strategy is rejected") {
  const BettingGame game =
      make_game_none(make_pmf({0.5, 0.5}), make_odds({2.0, 2.0}));
  const Strategy dead = strategy_from_pmf(make_pmf({1.0, 0.0}));
  const Strategy even = strategy_from_pmf(make_pmf({0.5, 0.5}));
  // At log utility the all-in bet hits a zero-wealth branch.
  CHECK_THROWS_AS(advantage_strategies(game, even, dead, 1.0),
                  std::domain_error);
}
