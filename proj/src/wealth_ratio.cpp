#include "betinfo/wealth_ratio.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

// Reciprocal order with the conventional extensions: 1/0+ = +inf, 1/0- = -inf,
// 1/(+-inf) = 0.
double reciprocal_order(double q) {
  if (std::isinf(q)) return 0.0;
  if (std::abs(q) < kOrderBranchTol) return q < 0.0 ? kNegInf : kPosInf;
  return 1.0 / q;
}

// Constant odds sgn(q)*C over an alphabet of size nx (single outcome column).
OddsTable constant_odds(std::size_t nx, double q, double C) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw std::invalid_argument("constant odds scale must be finite and > 0");
  }
  const double value = sgn(q) * C;
  return make_odds(std::vector<double>(nx, value));
}

}  // namespace

AdvantageReport advantage_strategies(const BettingGame& game, const Strategy& b1,
                                     const Strategy& b2, double R) {
  const double w2 = ice(game, b2, R);
  if (w2 == 0.0) {
    throw std::domain_error(
        "advantage_strategies: reference strategy has zero certainty "
        "equivalent");
  }
  // log_ice is the utility-ordered log measure (sign-adjusted log magnitude),
  // so the strategy with the larger log_ice is the better one and the
  // utility-oriented multiplicative advantage is exp of the difference.
  const double l1 = log_ice(game, b1, R);
  const double l2 = log_ice(game, b2, R);
  AdvantageReport rep{};
  if (l1 >= l2) {
    rep.numerator = 1;
    rep.ratio = std::exp(l1 - l2);
  } else {
    rep.numerator = 2;
    rep.ratio = std::exp(l2 - l1);
  }
  return rep;
}

double advantage_side_information(const OddsTable& odds, const Joint2& jxg,
                                  double R, const SimplexSearchConfig& cfg) {
  const Pmf px = marginalize(jxg, 0);
  const int r_sign = R < 0.0 ? -1 : 1;
  if (odds.sign == r_sign) {
    // Certified closed-form maxima.
    const double l_si = log_max_magnitude_gambler(jxg, odds, R);
    const double l_no = log_max_magnitude_none(px, odds, R);
    return std::exp(l_si - l_no);
  }
  // Sign-mismatched regime: fall back to the numeric oracle on both sides.
  const BettingGame game_no = make_game_none(px, odds);
  const BettingGame game_si = make_game_gambler(jxg, odds);
  const auto best_no = maximize_over_pmf(
      [&](const Pmf& b) { return ice(game_no, strategy_from_pmf(b), R); },
      px.w.size(), cfg);
  const auto best_si = maximize_over_condtable(
      [&](const CondTable& b) {
        return ice(game_si, strategy_from_table(b), R);
      },
      jxg.nx(), jxg.ng(), cfg);
  if (best_no.value == 0.0) {
    throw std::domain_error(
        "advantage_side_information: unconditioned game has zero maximal "
        "certainty equivalent");
  }
  return best_si.value / best_no.value;
}

BettingProbReport renyi_prob_via_betting(const Pmf& p, double q, double C,
                                         const SimplexSearchConfig& cfg) {
  const double R = reciprocal_order(q);
  const OddsTable odds = constant_odds(p.w.size(), q, C);
  const BettingGame game = make_game_none(p, odds);

  BettingProbReport rep{};
  rep.scaled_prob = sgn(q) * C * renyi_probability(p, q);
  rep.closed_max = ice(game, strategy_from_pmf(escort(p, q)), R);
  rep.oracle_max =
      maximize_over_pmf(
          [&](const Pmf& b) { return ice(game, strategy_from_pmf(b), R); },
          p.w.size(), cfg)
          .value;
  rep.agree = std::abs(rep.scaled_prob - rep.closed_max) <= 1e-8 &&
              std::abs(rep.scaled_prob - rep.oracle_max) <= 1e-6;
  return rep;
}

BettingProbReport arimoto_prob_via_betting(const Joint2& jxg, double q, double C,
                                           const SimplexSearchConfig& cfg) {
  const double R = reciprocal_order(q);
  const OddsTable odds = constant_odds(jxg.nx(), q, C);
  const BettingGame game = make_game_gambler(jxg, odds);

  // Closed-form optimum: per-group escort of the posterior column.
  const CondTable cond = condition(jxg, 0);
  CondTable bet = cond;
  for (std::size_t g = 0; g < cond.ncols(); ++g) {
    if (!cond.col_defined(g)) {
      for (std::size_t x = 0; x < cond.nrows(); ++x) {
        bet.at(x, g) = 1.0 / static_cast<double>(cond.nrows());
      }
      continue;
    }
    const Pmf esc = escort(cond.column(g), q);
    for (std::size_t x = 0; x < cond.nrows(); ++x) bet.at(x, g) = esc.w[x];
  }
  bet.undefined_col.clear();

  BettingProbReport rep{};
  rep.scaled_prob = sgn(q) * C * renyi_cond_probability(jxg, q);
  rep.closed_max = ice(game, strategy_from_table(bet), R);
  rep.oracle_max =
      maximize_over_condtable(
          [&](const CondTable& b) {
            return ice(game, strategy_from_table(b), R);
          },
          jxg.nx(), jxg.ng(), cfg)
          .value;
  rep.agree = std::abs(rep.scaled_prob - rep.closed_max) <= 1e-8 &&
              std::abs(rep.scaled_prob - rep.oracle_max) <= 1e-6;
  return rep;
}

IdMiOperationalReport id_mi_operational(const Joint2& jxg, const OrderPair& o,
                                        double C) {
  const double R = reciprocal_order(o.q);
  const OddsTable odds = constant_odds(jxg.nx(), o.q, C);
  const Pmf px = marginalize(jxg, 0);

  IdMiOperationalReport rep{};
  rep.lhs_id_mi = id_mutual_information(jxg, o);
  rep.log_ratio = log_max_magnitude_gambler(jxg, odds, R) -
                  log_max_magnitude_none(px, odds, R);
  rep.rhs_utility_of_ratio = sgn(o.q) * eta_r(rep.log_ratio, o.r);
  rep.agree = std::abs(rep.lhs_id_mi - rep.rhs_utility_of_ratio) <= 1e-8;
  return rep;
}

double wealth_ratio_value(const BettingGame& game, const Strategy& b1,
                          const Strategy& b2, double R_inner,
                          const std::function<double(double)>& v_outer) {
  const double w2 = ice(game, b2, R_inner);
  if (w2 == 0.0) {
    throw std::domain_error(
        "wealth_ratio_value: reference strategy has zero certainty equivalent");
  }
  return v_outer(ice(game, b1, R_inner) / w2);
}

}  // namespace betinfo
