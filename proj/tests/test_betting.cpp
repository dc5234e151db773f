#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "betinfo/betting.hpp"
#include "betinfo/prob.hpp"

using namespace betinfo;

TEST_CASE("isoelastic utility basics") {
  for (double R : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    CHECK(isoelastic_utility(1.0, R) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(isoelastic_utility(2.0, R) > isoelastic_utility(1.5, R));
  }
  CHECK(isoelastic_utility(std::exp(1.0), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Measured relative risk aversion matches the parameter.
  for (double R : {0.3, 0.7, 2.0}) {
    auto u = [R](double w) { return isoelastic_utility(w, R); };
    CHECK(rra(u, 1.7) == doctest::Approx(R).epsilon(1e-4));
  }
}

TEST_CASE("certainty equivalent of a constant-wealth game") {
  // Fair double-or-nothing: every outcome pays the stake back exactly.
  const BettingGame game =
      make_game_none(make_pmf({0.5, 0.5}), make_odds({2.0, 2.0}));
  const Strategy b = strategy_from_pmf(make_pmf({0.5, 0.5}));
  for (double R : {-1.0, 0.0, 0.5, 1.0, 2.0, 10.0}) {
    CHECK(ice(game, b, R) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("log certainty equivalent is consistent with the level") {
  const BettingGame game =
      make_game_none(make_pmf({0.25, 0.75}), make_odds({3.0, 1.5}));
  const Strategy b = strategy_from_pmf(make_pmf({0.4, 0.6}));
  for (double R : {0.0, 0.5, 2.0}) {
    CHECK(std::exp(log_ice(game, b, R)) ==
          doctest::Approx(ice(game, b, R)).epsilon(1e-12));
  }
}

TEST_CASE("fairness classification") {
  CHECK(fairness(make_odds({2.0, 2.0})).cls == Fairness::fair);
  CHECK(fairness(make_odds({2.0, 2.0})).c[0] == doctest::Approx(1.0));
  CHECK(fairness(make_odds({4.0, 4.0})).cls == Fairness::superfair);
  CHECK(fairness(make_odds({4.0, 4.0})).c[0] == doctest::Approx(2.0));
  CHECK(fairness(make_odds({1.0, 1.0})).cls == Fairness::subfair);
  // Per-column scales that differ produce a mixed classification
  // (layout is values[x * ny + y], so each column y is {values[y],
  // values[ny + y]}).
  CHECK(fairness(make_odds(2, 2, {2.0, 4.0, 2.0, 4.0})).cls ==
        Fairness::mixed);
  // Negative odds classify by |values|.
  CHECK(fairness(make_odds({-2.0, -2.0})).cls == Fairness::fair);
}

TEST_CASE("bookmaker decomposition identity") {
  const Joint2 jxy = make_joint2(2, 2, {0.1, 0.2, 0.3, 0.4});
  // Fair per column: reciprocals of {2.5, 5/3} and {1.6, 8/3} sum to one.
  const OddsTable odds = make_odds(2, 2, {2.5, 1.6, 5.0 / 3.0, 8.0 / 3.0});
  const BettingGame game = make_game_bookmaker(jxy, odds);
  // The bettor does not see the bookmaker's information: one bet column.
  const Strategy b = strategy_from_pmf(make_pmf({0.3, 0.7}));
  for (double R : {0.5, 2.0}) {
    const DecompositionReport rep = decompose_bookmaker(game, b, R);
    CHECK(rep.log_ice ==
          doctest::Approx(rep.div_term - rep.penalty_term).epsilon(1e-12));
    CHECK(rep.log_ice == doctest::Approx(log_ice(game, b, R)).epsilon(1e-12));
  }
}

TEST_CASE("double game decomposition identity") {
  const Joint3 j =
      make_joint3(2, 2, 2, {0.05, 0.1, 0.05, 0.1, 0.2, 0.1, 0.25, 0.15});
  const OddsTable odds = make_odds(2, 2, {2.5, 1.6, 5.0 / 3.0, 8.0 / 3.0});
  const BettingGame game = make_game_double(j, odds);
  const Strategy b =
      strategy_from_table(make_cond_table(2, 2, {0.3, 0.6, 0.7, 0.4}));
  const DecompositionReport rep = decompose_double(game, b, 2.0);
  CHECK(rep.log_ice ==
        doctest::Approx(rep.div_term - rep.penalty_term).epsilon(1e-12));
}

TEST_CASE("certified optimum for fair bookmaker odds") {
  const Joint2 jxy = make_joint2(2, 2, {0.1, 0.2, 0.3, 0.4});
  // Fair per-column odds: reciprocals sum to one in each column.
  const OddsTable odds = make_odds(2, 2, {2.0, 4.0, 2.0, 4.0 / 3.0});
  const BettingGame game = make_game_bookmaker(jxy, odds);
  const double R = 2.0;
  const Strategy best = optimal_bet_bookmaker(game, R);
  REQUIRE(best.bet.ncols() == 1);
  const double top = log_ice(game, best, R);
  // No perturbed strategy does better.
  for (double eps : {-0.1, -0.02, 0.02, 0.1}) {
    const std::vector<double> vals = {best.bet.at(0, 0) + eps,
                                      best.bet.at(1, 0) - eps};
    bool valid = true;
    for (double v : vals) valid = valid && v >= 0.0 && v <= 1.0;
    if (!valid) continue;
    const Strategy perturbed = strategy_from_pmf(make_pmf(vals));
    CHECK(log_ice(game, perturbed, R) <= top + 1e-12);
  }
}

TEST_CASE("game ratio lower bound for strong side information") {
  const Joint2 jxg = make_joint2(2, 2, {0.45, 0.05, 0.05, 0.45});
  const OddsTable odds = make_odds(2, 2, {2.0, 2.0, 2.0, 2.0});
  for (double R : {0.5, 1.0, 2.0}) {
    const RatioReport rep = ratio_bookmaker_vs_gambler(odds, jxg, R);
    CHECK(rep.holds_nonneg);
    CHECK(rep.log_ratio >= -1e-10);
    CHECK(rep.rhs == doctest::Approx(rep.exact_rhs).epsilon(1e-12));
  }
}
