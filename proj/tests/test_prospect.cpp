#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "betinfo/betting.hpp"
#include "betinfo/prob.hpp"
#include "betinfo/prospect.hpp"

using namespace betinfo;

TEST_CASE("power probability weighting") {
  CHECK(weight_power(0.25, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(weight_power(0.7, 1.0) == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(weight_power(0.0, 0.5) == doctest::Approx(0.0));
  CHECK(weight_power(1.0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("unit sensitivity recovers the expected-utility equivalent") {
  const Pmf p = make_pmf({0.25, 0.75});
  const OddsTable odds = make_odds({3.0, 1.5});
  const Strategy b = strategy_from_pmf(make_pmf({0.4, 0.6}));
  for (double R : {-1.0, 0.0, 0.5, 2.0}) {
    const BettingGame game = make_game_none(p, odds);
    CHECK(pt_ce(p, odds, b, {R, 1.0}) ==
          doctest::Approx(ice(game, b, R)).epsilon(1e-10));
  }
}

TEST_CASE("distorted equivalent is finite at unit risk aversion") {
  const Pmf p = make_pmf({0.25, 0.75});
  const OddsTable odds = make_odds({3.0, 1.5});
  const Pmf bet = make_pmf({0.4, 0.6});
  const Strategy b = strategy_from_pmf(bet);
  // At unit risk aversion with distortion, the one-sided values diverge in
  // opposite directions; the filled-in value is their symmetric average on
  // the log scale.
  const double ce = pt_ce(p, odds, b, {1.0, 0.5});
  CHECK(std::isfinite(ce));
  CHECK(ce > 0.0);
  const double lo = decompose_pt_nosi(p, odds, bet, {1.0 - 1e-4, 0.5}).lhs;
  const double hi = decompose_pt_nosi(p, odds, bet, {1.0 + 1e-4, 0.5}).lhs;
  const double mid = decompose_pt_nosi(p, odds, bet, {1.0, 0.5}).lhs;
  CHECK(std::abs(mid - 0.5 * (lo + hi)) <= 1e-5);
  CHECK(ce == doctest::Approx(std::exp(mid)).epsilon(1e-10));
}

TEST_CASE("decomposition identity without side information") {
  const Pmf p = make_pmf({0.25, 0.75});
  const Strategy b = strategy_from_pmf(make_pmf({0.4, 0.6}));
  for (const OddsTable& odds :
       {make_odds({3.0, 1.5}), make_odds({-3.0, -1.5})}) {
    for (double R : {0.5, 2.0}) {
      for (double S : {0.5, 1.0, 1.4}) {
        const PtDecomposition rep =
            decompose_pt_nosi(p, odds, b.bet.column(0), {R, S});
        const double recon = rep.entropy_term + rep.fairness_term +
                             rep.div_term - rep.penalty_term;
        CHECK(rep.lhs == doctest::Approx(recon).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("decomposition identity with side information") {
  const Joint2 j = make_joint2(2, 2, {0.1, 0.2, 0.3, 0.4});
  // The informed game quotes unconditional odds on the outcome.
  const OddsTable odds = make_odds({2.5, 5.0 / 3.0});
  const CondTable b = make_cond_table(2, 2, {0.3, 0.6, 0.7, 0.4});
  for (double R : {0.5, 2.0}) {
    for (double S : {0.5, 1.0}) {
      const PtDecomposition rep = decompose_pt_gambler(j, odds, b, {R, S});
      const double recon = rep.entropy_term + rep.fairness_term +
                           rep.div_term - rep.penalty_term;
      CHECK(rep.lhs == doctest::Approx(recon).epsilon(1e-10));
    }
  }
}

TEST_CASE("optimal distorted bets beat nearby alternatives") {
  const Pmf p = make_pmf({0.25, 0.75});
  const OddsTable odds = make_odds({3.0, 1.5});
  const PtAgent agent{2.0, 0.7};
  const Pmf best = pt_optimal_bet_nosi(p, odds, agent);
  const double top = pt_ce(p, odds, strategy_from_pmf(best), agent);
  for (double eps : {0.02, 0.05}) {
    std::vector<double> w = {best.w[0] + eps, best.w[1] - eps};
    if (w[0] < 0 || w[0] > 1 || w[1] < 0 || w[1] > 1) continue;
    CHECK(pt_ce(p, odds, strategy_from_pmf(make_pmf(w)), agent) <=
          top + 1e-9);
  }
}

TEST_CASE("side-information advantage at unit sensitivity") {
  const Joint2 j = make_joint2(2, 2, {0.4, 0.1, 0.1, 0.4});
  const PtAgent agent{2.0, 1.0};
  const PtAdvantageReport rep = pt_advantage(j, 1.0, agent);
  // With no probability distortion the advantage is the order-R Arimoto
  // mutual information, and the closed prediction matches the exact ratio.
  CHECK(rep.h2_term == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.log_ratio == doctest::Approx(rep.arimoto_mi).epsilon(1e-12));
  CHECK(rep.exact_log_ratio == doctest::Approx(rep.log_ratio).epsilon(1e-9));
  CHECK(rep.arimoto_mi > 0.0);
}
