#pragma once

#include "betinfo/betting.hpp"
#include "betinfo/entropies.hpp"
#include "betinfo/prob.hpp"

/// Prospect-theory layer: power probability weighting π(p) = p^S composed
/// with the isoelastic utility, the prospect certainty equivalent, its
/// entropy/fairness/divergence decompositions for the no-side-information
/// and gambler-side-information configurations, and the constant-odds
/// advantage report.
namespace betinfo {

/// (R, S): relative risk aversion and probability-sensitivity exponent.
struct PtAgent {
  double R;
  double S;
};

/// p^S with 0^S = 0 for S > 0; domain error at p = 0 with S <= 0.
double weight_power(double p, double S);

/// Literal prospect value Σ π(p)·u_R(w) over the lottery outcomes
/// (w = b·o, sign shared with the odds). Zero-wealth outcomes with R >= 1
/// contribute the appropriate infinite utility rather than throwing.
double pt_value(const Pmf& px, const OddsTable& odds, const Strategy& b,
                const PtAgent& agent);
double pt_value(const Joint2& jxg, const OddsTable& odds, const Strategy& b,
                const PtAgent& agent);

/// Prospect certainty equivalent in wealth units:
///   sign(o) · [Σ p^S (b|o|)^{1-R}]^{1/(1-R)}.
/// Because Σ π(p) need not be 1, the R = 1 case with S ≠ 1 has no direct
/// limit; it is evaluated as the symmetric average of R = 1 ± 1e-7
/// (analytically the Σπ-weighted geometric mean). At S = 1 this is exactly
/// ice().
double pt_ce(const Pmf& px, const OddsTable& odds, const Strategy& b,
             const PtAgent& agent);
double pt_ce(const Joint2& jxg, const OddsTable& odds, const Strategy& b,
             const PtAgent& agent);

/// Closed-form prospect-optimal bet: softmax over x (per column) of
/// (S ln p + (1-R) ln|o|)/R; the escort of step S at R = 1 and the
/// expected-score argmax at R = 0.
Pmf pt_optimal_bet_nosi(const Pmf& px, const OddsTable& odds,
                        const PtAgent& agent);
struct PtDoubleOptimum {
  CondTable bet;
  Pmf h_g;
};
PtDoubleOptimum pt_optimal_bet_gambler(const Joint2& jxg, const OddsTable& odds,
                                       const PtAgent& agent);

/// Four-term decomposition of the log prospect certainty equivalent:
///   lhs = entropy_term + fairness_term + div_term - penalty_term
/// with lhs = sign(o)·ln|pt_ce|,
///      entropy_term  = sign(o)·sgn(S)·((1-S)/(1-R))·H^R_S,
///      fairness_term = sign(o)·ln c^{(o)},
///      div_term      = sign(o)·sgn(R)·(divergence at order 1/R),
///      penalty_term  = sign(o)·sgn(R)·D_R(h ‖ b).
/// epsilon_limit marks reports averaged across R = 1 ± 1e-7 (R = 1, S ≠ 1).
struct PtDecomposition {
  double lhs;
  double entropy_term;
  double fairness_term;
  double div_term;
  double penalty_term;
  bool epsilon_limit;
};

PtDecomposition decompose_pt_nosi(const Pmf& px, const OddsTable& odds,
                                  const Pmf& b, const PtAgent& agent);

/// Gambler-side-information analogue: the entropy term uses the joint
/// alphabet, the divergence is the root-inside-the-mixture conditional form
/// whose group weights are the marginal of the order-S escort of the joint,
/// and the penalty couples h_{X|G} with the auxiliary h_G.
PtDecomposition decompose_pt_gambler(const Joint2& jxg, const OddsTable& odds,
                                     const CondTable& b, const PtAgent& agent);

/// Constant-odds advantage of observing G before betting, o(x) = sgn(R)·C:
///   log_ratio  = ln( CE*_with-G / CE*_without ),
///   arimoto_mi = H^R_{1/R}(X) - H^A_{1/R}(X|G) on the order-S escort of the
///                joint (the mutual-information form the headline comparison
///                uses),
///   h2_term    = sgn(RS)·((1-S)/(1-R))·[H^R_S(XG) - H^R_S(X)].
/// exact_log_ratio is the diagnostic closed form that reproduces log_ratio to
/// machine precision:
///   sgn(S)((1-S)/(1-R))[H^R_S(XG)-H^R_S(X)]
///   + sgn(R)[H^R_{1/R}(escort_S(p_X)) - H^A_{1/R}(escort_S(p_XG))].
struct PtAdvantageReport {
  double log_ratio;
  double arimoto_mi;
  double h2_term;
  double exact_log_ratio;
  bool epsilon_limit;
};
PtAdvantageReport pt_advantage(const Joint2& jxg, double C,
                               const PtAgent& agent);

}  // namespace betinfo
