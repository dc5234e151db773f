#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "betinfo/divergences.hpp"
#include "betinfo/prob.hpp"

/// Isoelastic-utility betting: certainty equivalents for the four
/// side-information configurations, odds fairness, closed-form optimal
/// strategies, and the divergence decompositions of the achievable
/// log-certainty-equivalent.
namespace betinfo {

/// sgn(w)·ln_R(|w|): constant-relative-risk-aversion utility extended to
/// negative wealth by odd reflection. Throws std::domain_error at w = 0 for
/// R >= 1 (log-type divergence).
double isoelastic_utility(double w, double R);

/// Relative risk aversion -w·u''(w)/u'(w) by central finite differences with
/// step h = max(1e-5, 1e-5·|w|). Throws std::domain_error when u'(w) ~ 0.
double rra(const std::function<double(double)>& u, double w);

/// Which variables the bettor and the odds see:
///  - none:      p_X, unconditional odds, bet b_X;
///  - gambler:   p_XG, unconditional odds, bet b_{X|G};
///  - bookmaker: p_XY, odds o_{X|Y}, bet b_X;
///  - double_si: p_XGY, odds o_{X|Y}, bet b_{X|G}.
enum class GameConfig { none, gambler, bookmaker, double_si };

struct BettingGame {
  GameConfig config;
  OddsTable odds;
  std::variant<Pmf, Joint2, Joint3> joint;

  const Pmf& pmf() const { return std::get<Pmf>(joint); }
  const Joint2& joint2() const { return std::get<Joint2>(joint); }
  const Joint3& joint3() const { return std::get<Joint3>(joint); }
};

BettingGame make_game_none(Pmf px, OddsTable odds);
BettingGame make_game_gambler(Joint2 jxg, OddsTable odds);
BettingGame make_game_bookmaker(Joint2 jxy, OddsTable odds);
BettingGame make_game_double(Joint3 jxgy, OddsTable odds);

/// Column-stochastic bet; a single column encodes an unconditional b_X.
struct Strategy {
  CondTable bet;
};
Strategy strategy_from_pmf(const Pmf& b);
Strategy strategy_from_table(const CondTable& b);

/// Isoelastic certainty equivalent of the wealth lottery w = b·o:
/// sign(o) · [Σ p (b|o|)^{1-R}]^{1/(1-R)}, with the geometric mean at R = 1
/// and the min/max of wealth over the support at R = ±inf. A zero bet on a
/// positive-mass outcome gives 0 for R >= 1 (valid degenerate value).
double ice(const BettingGame& game, const Strategy& s, double R);

/// sign(o) · ln(certainty-equivalent magnitude); the quantity every
/// decomposition identity is stated for. -inf at zero magnitude.
double log_ice(const BettingGame& game, const Strategy& s, double R);

enum class Fairness { fair, superfair, subfair, mixed };

/// Per-column bookmaker margin c(y) = (Σ_x |o(x|y)|^{-1})^{-1}; fair if every
/// c(y) = 1 (tol 1e-9), superfair/subfair if all columns sit on one side,
/// mixed otherwise.
struct FairnessReport {
  Fairness cls;
  std::vector<double> c;
};
FairnessReport fairness(const OddsTable& odds);

/// r(x|y) = c(y)/|o(x|y)|: the column-stochastic reference distribution the
/// odds imply; equals 1/|o| when the odds are fair.
CondTable odds_reference_table(const OddsTable& odds);

bool odds_are_fair(const OddsTable& odds, double tol = 1e-9);

/// Closed-form optimal bet for the bookmaker configuration:
/// h(x) ∝ exp( lse_y(ln p(x,y) + (1-R) ln|o(x|y)|) / R ), the marginal p_X at
/// R = 1, and the argmax of expected wealth at R = 0. Requires fair odds.
/// Optimality holds when sgn(odds) = sgn(R); the formula is returned as-is
/// otherwise (callers wanting certified optima use the oracle).
Strategy optimal_bet_bookmaker(const BettingGame& game, double R);

/// Closed-form optimum for the double configuration: the per-group bet
/// h(x|g) plus the auxiliary group weighting h_G entering the penalty term.
struct DoubleOptimum {
  CondTable bet;
  Pmf h_g;
};
DoubleOptimum optimal_bet_double(const BettingGame& game, double R);

/// Both sides of the log-certainty-equivalent decomposition
///   log_ice = div_term - penalty_term,
/// div_term = sgn(o)sgn(R)·n1_crd(p_{X|Y}, r^{(o)}, p_Y, 1/R) and
/// penalty_term = sgn(o)sgn(R)·D_R(h || b). Fair odds required.
struct DecompositionReport {
  double log_ice;
  double div_term;
  double penalty_term;
};
DecompositionReport decompose_bookmaker(const BettingGame& game,
                                        const Strategy& s, double R);

/// Double-side-information analogue: div_term uses n2_crd and the penalty is
/// D_R(h_{X|G}·h_G || b_{X|G}·h_G) over the product alphabet.
DecompositionReport decompose_double(const BettingGame& game, const Strategy& s,
                                     double R);

/// log_ratio and the divergence-difference expression it is compared against;
/// holds_nonneg records log_ratio >= -1e-10. exact_rhs carries a diagnostic
/// closed form that reproduces log_ratio to machine precision (see each
/// function's notes); rhs is the headline expression under test.
struct RatioReport {
  double log_ratio;
  double rhs;
  bool holds_nonneg;
  double exact_rhs;
};

/// Maximized-certainty-equivalent gap between betting with bookmaker odds
/// o_{X|Y} and betting the averaged unconditional odds o(x) = Σ_y o(x|y)p(y).
/// rhs is n1_crd(p_{X|Y}, r_avg, p_Y, 1/R) - D_{1/R}(p_X || r_avg) with
/// r_avg(x) = Σ_y r(x|y) p(y); exact_rhs replaces r_avg by the normalized
/// reciprocal of the averaged odds plus its log-margin, which is the exact
/// value of the gap. Intended domain R ∈ [1, +inf), positive fair odds.
RatioReport ratio_bookmaker_vs_none(const OddsTable& o_cond, const Joint2& jxy,
                                    double R);

/// Gap between a gambler who observes the odds-conditioning variable G
/// directly (adapting the bet per column) and a bookmaker-side bettor on the
/// same table: log_ratio = sgn(R)·(L_gambler - L_bookmaker) equals
/// blp_crd - n1_crd at order 1/R; exact_rhs = rhs.
RatioReport ratio_bookmaker_vs_gambler(const OddsTable& o_cond,
                                       const Joint2& jxg, double R);

/// Maximized log wealth magnitudes (no odds sign applied); the building
/// blocks of the ratio corollaries and the wealth-ratio layer.
double log_max_magnitude_none(const Pmf& px, const OddsTable& odds, double R);
double log_max_magnitude_gambler(const Joint2& jxg, const OddsTable& odds,
                                 double R);
double log_max_magnitude_bookmaker(const Joint2& jxy, const OddsTable& odds,
                                   double R);

}  // namespace betinfo
