#include "betinfo/prospect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "betinfo/divergences.hpp"
#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

bool near(double a, double b) { return std::abs(a - b) < kOrderBranchTol; }

// Symmetric step for the R = 1, S != 1 removable singularity. The step is a
// power of two so that 1 - kREps and 1 + kREps are both exactly
// representable and dividing by the step is exact; any ulp-sized mismatch
// between the two one-sided steps would be amplified by the 1/(1 - R) pole
// into an error of order eps_machine / kREps^2. The magnitude balances that
// pole-cancellation noise (~eps_machine / kREps) against the quadratic
// truncation of the symmetric average (~kREps^2), which meet near 1e-5.
constexpr double kREps = 7.62939453125e-06;  // 2^-17
inline double r_below_one() { return 1.0 - kREps; }
inline double r_above_one() { return 1.0 + kREps; }

double inv_order(double R) {
  if (std::isinf(R)) return 0.0;
  if (near(R, 0.0)) return R >= 0.0 ? kPosInf : kNegInf;
  return 1.0 / R;
}

double effective_order(double R) {
  return std::isinf(R) ? sgn(R) * 16384.0 : R;
}

/// (1-S)/(1-R) with the S = 1 case pinned to 0 so that R = 1 stays finite.
double sensitivity_prefactor(double R, double S) {
  if (near(S, 1.0)) return 0.0;
  return (1.0 - S) / (1.0 - R);
}

double utility_at(double w, double R, double approach_sign) {
  if (w != 0.0) return sgn(w) * ln_r(std::abs(w), R);
  if (R >= 1.0) return approach_sign > 0 ? kNegInf : kPosInf;
  return approach_sign >= 0 ? -1.0 / (1.0 - R) : 1.0 / (1.0 - R);
}

struct PtOutcomeLogs {
  std::vector<double> lp;
  std::vector<double> lw;
};

PtOutcomeLogs collect_nosi(const Pmf& px, const OddsTable& odds,
                           const Strategy& b) {
  if (odds.ny != 1 || odds.nx != px.size() || b.bet.nrows() != px.size() ||
      b.bet.ncols() != 1) {
    throw std::invalid_argument("prospect lottery: shape mismatch");
  }
  PtOutcomeLogs out;
  for (std::size_t x = 0; x < px.size(); ++x) {
    if (px.w[x] <= 0.0) continue;
    out.lp.push_back(std::log(px.w[x]));
    out.lw.push_back(safe_log(b.bet.at(x, 0)) + std::log(odds.at(x)));
  }
  return out;
}

PtOutcomeLogs collect_gambler(const Joint2& jxg, const OddsTable& odds,
                              const Strategy& b) {
  if (odds.ny != 1 || odds.nx != jxg.nx() || b.bet.nrows() != jxg.nx() ||
      b.bet.ncols() != jxg.ng()) {
    throw std::invalid_argument("prospect lottery: shape mismatch");
  }
  PtOutcomeLogs out;
  for (std::size_t x = 0; x < jxg.nx(); ++x) {
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      if (jxg.at(x, g) <= 0.0) continue;
      out.lp.push_back(std::log(jxg.at(x, g)));
      out.lw.push_back(safe_log(b.bet.at(x, g)) + std::log(odds.at(x)));
    }
  }
  return out;
}

double log_pt_ce_magnitude(const PtOutcomeLogs& out, double R, double S) {
  if (std::isinf(R)) {
    double best = R > 0 ? kPosInf : kNegInf;
    for (const double lw : out.lw) {
      best = R > 0 ? std::min(best, lw) : std::max(best, lw);
    }
    return best;
  }
  if (near(R, 1.0)) {
    if (near(S, 1.0)) {
      double acc = 0.0;
      for (std::size_t i = 0; i < out.lp.size(); ++i) {
        if (std::isinf(out.lw[i])) return kNegInf;
        acc += std::exp(out.lp[i]) * out.lw[i];
      }
      return acc;
    }
    const double u = 1.0 - r_below_one();  // exact step, mirrored below
    const auto eval_u = [&](double step) {
      std::vector<double> t(out.lp.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = S * out.lp[i] + step * out.lw[i];
      }
      return log_sum_exp(t) / step;
    };
    return 0.5 * (eval_u(u) + eval_u(-u));
  }
  std::vector<double> t(out.lp.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = S * out.lp[i] + (1.0 - R) * out.lw[i];
  }
  return log_sum_exp(t) / (1.0 - R);
}

}  // namespace

double weight_power(double p, double S) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("weight_power: p must lie in [0,1]");
  }
  if (p == 0.0) {
    if (S > 0.0) return 0.0;
    throw std::domain_error("weight_power: p = 0 requires S > 0");
  }
  return std::pow(p, S);
}

double pt_value(const Pmf& px, const OddsTable& odds, const Strategy& b,
                const PtAgent& agent) {
  if (odds.ny != 1 || odds.nx != px.size() || b.bet.nrows() != px.size() ||
      b.bet.ncols() != 1) {
    throw std::invalid_argument("pt_value: shape mismatch");
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < px.size(); ++x) {
    const double p = px.w[x];
    if (p <= 0.0 && agent.S > 0.0) continue;
    const double w = odds.sign * b.bet.at(x, 0) * odds.at(x);
    acc += weight_power(p, agent.S) * utility_at(w, agent.R, odds.sign);
  }
  return acc;
}

double pt_value(const Joint2& jxg, const OddsTable& odds, const Strategy& b,
                const PtAgent& agent) {
  if (odds.ny != 1 || odds.nx != jxg.nx() || b.bet.nrows() != jxg.nx() ||
      b.bet.ncols() != jxg.ng()) {
    throw std::invalid_argument("pt_value: shape mismatch");
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < jxg.nx(); ++x) {
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      const double p = jxg.at(x, g);
      if (p <= 0.0 && agent.S > 0.0) continue;
      const double w =
          odds.sign * b.bet.at(x, g) * odds.at(x);
      acc += weight_power(p, agent.S) * utility_at(w, agent.R, odds.sign);
    }
  }
  return acc;
}

double pt_ce(const Pmf& px, const OddsTable& odds, const Strategy& b,
             const PtAgent& agent) {
  return odds.sign *
         std::exp(log_pt_ce_magnitude(collect_nosi(px, odds, b), agent.R,
                                      agent.S));
}

double pt_ce(const Joint2& jxg, const OddsTable& odds, const Strategy& b,
             const PtAgent& agent) {
  return odds.sign *
         std::exp(log_pt_ce_magnitude(collect_gambler(jxg, odds, b), agent.R,
                                      agent.S));
}

Pmf pt_optimal_bet_nosi(const Pmf& px, const OddsTable& odds,
                        const PtAgent& agent) {
  if (odds.ny != 1 || odds.nx != px.size()) {
    throw std::invalid_argument("pt_optimal_bet_nosi: shape mismatch");
  }
  if (agent.S < 0.0) {
    for (const double v : px.w) {
      if (v <= 0.0) {
        throw degenerate_order_error(
            "pt_optimal_bet_nosi: S < 0 requires full support");
      }
    }
  }
  const double R = effective_order(agent.R);
  Pmf h = px;
  std::vector<double> score(px.size());
  for (std::size_t x = 0; x < px.size(); ++x) {
    const double c = near(R, 0.0) ? 1.0 : (1.0 - R);
    score[x] = agent.S * safe_log(px.w[x]) + c * std::log(odds.at(x));
  }
  if (near(R, 0.0)) {
    const auto it = std::max_element(score.begin(), score.end());
    std::fill(h.w.begin(), h.w.end(), 0.0);
    h.w[static_cast<std::size_t>(it - score.begin())] = 1.0;
    return h;
  }
  for (double& v : score) v /= R;
  softmax_inplace(score);
  h.w = std::move(score);
  return h;
}

PtDoubleOptimum pt_optimal_bet_gambler(const Joint2& jxg, const OddsTable& odds,
                                       const PtAgent& agent) {
  if (odds.ny != 1 || odds.nx != jxg.nx()) {
    throw std::invalid_argument("pt_optimal_bet_gambler: shape mismatch");
  }
  const double R = effective_order(agent.R);
  const std::vector<double> qs = escort_weights(jxg.w, agent.S);
  Joint2 qsj{jxg.ax, jxg.ag, qs};
  const CondTable qcols = condition(qsj, 0);
  const Pmf qg = marginalize(qsj, 1);

  PtDoubleOptimum opt;
  opt.bet.rows = jxg.ax;
  opt.bet.cols = jxg.ag;
  opt.bet.w.assign(jxg.nx() * jxg.ng(), 0.0);
  opt.h_g = qg;
  std::vector<double> lhg(jxg.ng(), kNegInf);
  std::vector<double> lh(jxg.nx());
  for (std::size_t g = 0; g < jxg.ng(); ++g) {
    if (qg.w[g] <= 0.0) {
      for (std::size_t x = 0; x < jxg.nx(); ++x) {
        opt.bet.at(x, g) = 1.0 / static_cast<double>(jxg.nx());
      }
      continue;
    }
    const double c = near(R, 0.0) ? 1.0 : (1.0 - R);
    for (std::size_t x = 0; x < jxg.nx(); ++x) {
      lh[x] = safe_log(qcols.at(x, g)) + c * std::log(odds.at(x));
    }
    if (near(R, 0.0)) {
      const auto it = std::max_element(lh.begin(), lh.end());
      opt.bet.at(static_cast<std::size_t>(it - lh.begin()), g) = 1.0;
      lhg[g] = std::log(qg.w[g]) + *it;
      continue;
    }
    for (double& v : lh) v /= R;
    lhg[g] = std::log(qg.w[g]) + R * log_sum_exp(lh);
    softmax_inplace(lh);
    for (std::size_t x = 0; x < jxg.nx(); ++x) opt.bet.at(x, g) = lh[x];
  }
  softmax_inplace(lhg);
  opt.h_g.w = std::move(lhg);
  return opt;
}

namespace {

double single_fairness_log(const OddsTable& odds) {
  double inv = 0.0;
  for (std::size_t x = 0; x < odds.nx; ++x) inv += 1.0 / odds.at(x);
  return -std::log(inv);
}

}  // namespace

PtDecomposition decompose_pt_nosi(const Pmf& px, const OddsTable& odds,
                                  const Pmf& b, const PtAgent& agent) {
  if (near(agent.R, 1.0) && !near(agent.S, 1.0)) {
    const PtDecomposition lo =
        decompose_pt_nosi(px, odds, b, PtAgent{r_below_one(), agent.S});
    const PtDecomposition hi =
        decompose_pt_nosi(px, odds, b, PtAgent{r_above_one(), agent.S});
    return PtDecomposition{0.5 * (lo.lhs + hi.lhs),
                           0.5 * (lo.entropy_term + hi.entropy_term),
                           0.5 * (lo.fairness_term + hi.fairness_term),
                           0.5 * (lo.div_term + hi.div_term),
                           0.5 * (lo.penalty_term + hi.penalty_term), true};
  }
  const double so = odds.sign;
  const double R = agent.R, S = agent.S;
  PtDecomposition rep;
  rep.epsilon_limit = false;
  rep.lhs = so * log_pt_ce_magnitude(collect_nosi(px, odds, strategy_from_pmf(b)),
                                     R, S);
  rep.entropy_term =
      so * sgn(S) * sensitivity_prefactor(R, S) * renyi_entropy(px, S);
  const double lnc = single_fairness_log(odds);
  rep.fairness_term = so * lnc;
  const Pmf qs = escort(px, S);
  std::vector<double> ro(px.size());
  for (std::size_t x = 0; x < px.size(); ++x) {
    ro[x] = std::exp(lnc) / odds.at(x);
  }
  rep.div_term =
      so * sgn(R) * renyi_divergence_weights(qs.w, ro, inv_order(R));
  const Pmf h = pt_optimal_bet_nosi(px, odds, agent);
  rep.penalty_term = so * sgn(R) * renyi_divergence_weights(h.w, b.w, R);
  return rep;
}

PtDecomposition decompose_pt_gambler(const Joint2& jxg, const OddsTable& odds,
                                     const CondTable& b, const PtAgent& agent) {
  if (near(agent.R, 1.0) && !near(agent.S, 1.0)) {
    const PtDecomposition lo =
        decompose_pt_gambler(jxg, odds, b, PtAgent{r_below_one(), agent.S});
    const PtDecomposition hi =
        decompose_pt_gambler(jxg, odds, b, PtAgent{r_above_one(), agent.S});
    return PtDecomposition{0.5 * (lo.lhs + hi.lhs),
                           0.5 * (lo.entropy_term + hi.entropy_term),
                           0.5 * (lo.fairness_term + hi.fairness_term),
                           0.5 * (lo.div_term + hi.div_term),
                           0.5 * (lo.penalty_term + hi.penalty_term), true};
  }
  const double so = odds.sign;
  const double R = agent.R, S = agent.S;
  PtDecomposition rep;
  rep.epsilon_limit = false;
  rep.lhs = so * log_pt_ce_magnitude(
                     collect_gambler(jxg, odds, strategy_from_table(b)), R, S);
  const Pmf flat{default_alphabet("xg", jxg.w.size()), jxg.w};
  rep.entropy_term =
      so * sgn(S) * sensitivity_prefactor(R, S) * renyi_entropy(flat, S);
  const double lnc = single_fairness_log(odds);
  rep.fairness_term = so * lnc;

  const std::vector<double> qsw = escort_weights(jxg.w, S);
  Joint2 qsj{jxg.ax, jxg.ag, qsw};
  const CondTable qcols = condition(qsj, 0);
  const Pmf qg = marginalize(qsj, 1);
  CondTable r_rep;
  r_rep.rows = jxg.ax;
  r_rep.cols = jxg.ag;
  r_rep.w.resize(jxg.nx() * jxg.ng());
  for (std::size_t x = 0; x < jxg.nx(); ++x) {
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      r_rep.at(x, g) = std::exp(lnc) / odds.at(x);
    }
  }
  rep.div_term = so * sgn(R) * blp_crd(qcols, r_rep, qg, inv_order(R));

  const PtDoubleOptimum opt = pt_optimal_bet_gambler(jxg, odds, agent);
  std::vector<double> hw(jxg.nx() * jxg.ng()), bw(jxg.nx() * jxg.ng());
  for (std::size_t x = 0; x < jxg.nx(); ++x) {
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      hw[x * jxg.ng() + g] = opt.bet.at(x, g) * opt.h_g.w[g];
      bw[x * jxg.ng() + g] = b.at(x, g) * opt.h_g.w[g];
    }
  }
  rep.penalty_term = so * sgn(R) * renyi_divergence_weights(hw, bw, R);
  return rep;
}

PtAdvantageReport pt_advantage(const Joint2& jxg, double C,
                               const PtAgent& agent) {
  if (!(C > 0.0)) {
    throw std::invalid_argument("pt_advantage: C must be positive");
  }
  const double S = agent.S;
  const Pmf px = marginalize(jxg, 0);
  const Pmf flat{default_alphabet("xg", jxg.w.size()), jxg.w};
  const Pmf qsx = escort(px, S);
  const std::vector<double> qsw = escort_weights(jxg.w, S);
  Joint2 qsj{jxg.ax, jxg.ag, qsw};
  const CondTable qcols = condition(qsj, 0);
  const Pmf qg = marginalize(qsj, 1);
  const std::size_t nx = jxg.nx();
  const double lnc = std::log(C) - std::log(static_cast<double>(nx));
  const Pmf ux = uniform_pmf(nx);
  CondTable u_rep;
  u_rep.rows = jxg.ax;
  u_rep.cols = jxg.ag;
  u_rep.w.assign(nx * jxg.ng(), 1.0 / static_cast<double>(nx));

  const auto maxima_at = [&](double R) {
    const double pref = sensitivity_prefactor(R, S);
    const double a = inv_order(R);
    const double lno = sgn(S) * pref * renyi_entropy(px, S) + lnc +
                       sgn(R) * renyi_divergence(qsx, ux, a);
    const double lsi = sgn(S) * pref * renyi_entropy(flat, S) + lnc +
                       sgn(R) * blp_crd(qcols, u_rep, qg, a);
    return std::pair<double, double>{lno, lsi};
  };

  PtAdvantageReport rep;
  rep.epsilon_limit = near(agent.R, 1.0) && !near(S, 1.0);
  double lno, lsi, pref, a;
  if (rep.epsilon_limit) {
    const auto lo = maxima_at(r_below_one());
    const auto hi = maxima_at(r_above_one());
    lno = 0.5 * (lo.first + hi.first);
    lsi = 0.5 * (lo.second + hi.second);
    pref = 0.0;  // the divergent prefactor cancels in the symmetric average
    a = 1.0;
  } else {
    const auto m = maxima_at(agent.R);
    lno = m.first;
    lsi = m.second;
    pref = sensitivity_prefactor(agent.R, S);
    a = inv_order(agent.R);
  }
  rep.log_ratio = lsi - lno;

  const Pmf qsx_marg = marginalize(qsj, 0);
  rep.arimoto_mi =
      renyi_entropy(qsx_marg, a) - arimoto_cond_entropy(qsj, a);
  const double h2 = renyi_entropy(flat, S) - renyi_entropy(px, S);
  rep.h2_term = sgn(agent.R) * sgn(S) * pref * h2;
  rep.exact_log_ratio =
      sgn(S) * pref * h2 +
      sgn(agent.R) * (renyi_entropy(qsx, a) - arimoto_cond_entropy(qsj, a));
  return rep;
}

}  // namespace betinfo
