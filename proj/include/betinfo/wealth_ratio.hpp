#pragma once

#include <functional>

#include "betinfo/betting.hpp"
#include "betinfo/entropies.hpp"
#include "betinfo/optimizer.hpp"

/// Wealth-ratio utilities: advantage functionals comparing strategies and
/// information structures, the betting characterizations of the order-q
/// probability aggregates, and the operational identity expressing the
/// deformed mutual information as a utility of a maximal-wealth ratio.
namespace betinfo {

/// Ratio of the two certainty equivalents, oriented so the better strategy
/// (by utility) is the numerator; >= 1 up to rounding. numerator is 1 or 2.
struct AdvantageReport {
  double ratio;
  int numerator;
};
AdvantageReport advantage_strategies(const BettingGame& game, const Strategy& b1,
                                     const Strategy& b2, double R);

/// Ratio of the maximized certainty equivalent with gambler side information
/// over the maximized one without. Closed forms are used when
/// sgn(odds) = sgn(R) (where they are the certified optima); otherwise both
/// maximizations fall back to the numeric oracle.
double advantage_side_information(const OddsTable& odds, const Joint2& jxg,
                                  double R, const SimplexSearchConfig& cfg = {});

/// Betting characterization of an order-q probability aggregate
/// (unconditional or with side information): scaled_prob is sgn(q)·C·p_q,
/// closed_max the certainty equivalent achieved by the closed-form optimal
/// bet at R = 1/q under constant odds sgn(q)·C, oracle_max the numeric
/// oracle's maximum. agree requires |scaled_prob - closed_max| <= 1e-8 and
/// |scaled_prob - oracle_max| <= 1e-6.
struct BettingProbReport {
  double scaled_prob;
  double closed_max;
  double oracle_max;
  bool agree;
};
BettingProbReport renyi_prob_via_betting(const Pmf& p, double q, double C,
                                         const SimplexSearchConfig& cfg = {});
BettingProbReport arimoto_prob_via_betting(const Joint2& jxg, double q, double C,
                                           const SimplexSearchConfig& cfg = {});

/// Operational identity for the two-parameter mutual information:
/// lhs_id_mi from the entropy layer; rhs = sgn(q)·ln_r of the ratio of
/// maximized certainty equivalents (with vs. without side information) for
/// an agent with R = 1/q under constant odds sgn(q)·C. agree at 1e-8.
struct IdMiOperationalReport {
  double lhs_id_mi;
  double rhs_utility_of_ratio;
  double log_ratio;
  bool agree;
};
IdMiOperationalReport id_mi_operational(const Joint2& jxg, const OrderPair& o,
                                        double C);

/// General two-utility wealth-ratio value: the outer utility applied to the
/// ratio of inner certainty equivalents of two strategies (smoke-level
/// support for non-isoelastic outer utilities).
double wealth_ratio_value(const BettingGame& game, const Strategy& b1,
                          const Strategy& b2, double R_inner,
                          const std::function<double(double)>& v_outer);

}  // namespace betinfo
