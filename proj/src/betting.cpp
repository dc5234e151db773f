#include "betinfo/betting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

bool near(double a, double b) { return std::abs(a - b) < kOrderBranchTol; }

constexpr double kFairTol = 1e-9;
constexpr double kSaturationOrder = 16384.0;  // stand-in for R = ±inf formulas

double inv_order(double R) {
  if (std::isinf(R)) return 0.0;
  if (near(R, 0.0)) return R >= 0.0 ? kPosInf : kNegInf;
  return 1.0 / R;
}

}  // namespace

double isoelastic_utility(double w, double R) {
  if (std::isnan(R)) throw std::invalid_argument("isoelastic_utility: R is NaN");
  if (std::isinf(R)) {
    throw std::invalid_argument("isoelastic_utility: R must be finite");
  }
  if (w == 0.0 && R >= 1.0) {
    throw std::domain_error("isoelastic_utility: diverges at w = 0 for R >= 1");
  }
  if (w == 0.0) return -1.0 / (1.0 - R);  // ln_R(0) finite for R < 1
  return sgn(w) * ln_r(std::abs(w), R);
}

double rra(const std::function<double(double)>& u, double w) {
  const double h = std::max(1e-5, 1e-5 * std::abs(w));
  const double up = u(w + h);
  const double um = u(w - h);
  const double u0 = u(w);
  const double d1 = (up - um) / (2.0 * h);
  const double d2 = (up - 2.0 * u0 + um) / (h * h);
  if (std::abs(d1) < 1e-12) {
    throw std::domain_error("rra: first derivative vanishes at w");
  }
  return -w * d2 / d1;
}

BettingGame make_game_none(Pmf px, OddsTable odds) {
  if (odds.ny != 1 || odds.nx != px.size()) {
    throw std::invalid_argument("make_game_none: odds must be o_X matching p_X");
  }
  return BettingGame{GameConfig::none, std::move(odds), std::move(px)};
}

BettingGame make_game_gambler(Joint2 jxg, OddsTable odds) {
  if (odds.ny != 1 || odds.nx != jxg.nx()) {
    throw std::invalid_argument(
        "make_game_gambler: odds must be unconditional o_X");
  }
  return BettingGame{GameConfig::gambler, std::move(odds), std::move(jxg)};
}

BettingGame make_game_bookmaker(Joint2 jxy, OddsTable odds) {
  if (odds.nx != jxy.nx() || odds.ny != jxy.ng()) {
    throw std::invalid_argument(
        "make_game_bookmaker: odds shape must match (X, Y)");
  }
  return BettingGame{GameConfig::bookmaker, std::move(odds), std::move(jxy)};
}

BettingGame make_game_double(Joint3 jxgy, OddsTable odds) {
  if (odds.nx != jxgy.nx() || odds.ny != jxgy.ny()) {
    throw std::invalid_argument("make_game_double: odds shape must match (X, Y)");
  }
  return BettingGame{GameConfig::double_si, std::move(odds), std::move(jxgy)};
}

Strategy strategy_from_pmf(const Pmf& b) {
  CondTable t;
  t.rows = b.alphabet;
  t.cols = default_alphabet("c", 1);
  t.w = b.w;
  return Strategy{std::move(t)};
}

Strategy strategy_from_table(const CondTable& b) {
  if (!b.undefined_col.empty()) {
    throw std::invalid_argument("strategy_from_table: undefined bet column");
  }
  return Strategy{b};
}

namespace {

/// Support outcomes of a game under a strategy: (ln p, ln |wealth|) pairs.
struct OutcomeLogs {
  std::vector<double> lp;
  std::vector<double> lw;
};

void check_strategy_shape(const BettingGame& game, const Strategy& s) {
  const std::size_t nx = game.odds.nx;
  const bool conditional = game.config == GameConfig::gambler ||
                           game.config == GameConfig::double_si;
  std::size_t want_cols = 1;
  if (conditional) {
    want_cols = game.config == GameConfig::gambler ? game.joint2().ng()
                                                   : game.joint3().ng();
  }
  if (s.bet.nrows() != nx || s.bet.ncols() != want_cols) {
    throw std::invalid_argument("strategy shape does not match the game");
  }
}

OutcomeLogs collect_outcomes(const BettingGame& game, const Strategy& s) {
  check_strategy_shape(game, s);
  OutcomeLogs out;
  const OddsTable& o = game.odds;
  switch (game.config) {
    case GameConfig::none: {
      const Pmf& p = game.pmf();
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (p.w[x] <= 0.0) continue;
        out.lp.push_back(std::log(p.w[x]));
        out.lw.push_back(safe_log(s.bet.at(x, 0)) + std::log(o.at(x)));
      }
      break;
    }
    case GameConfig::gambler: {
      const Joint2& j = game.joint2();
      for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t g = 0; g < j.ng(); ++g) {
          if (j.at(x, g) <= 0.0) continue;
          out.lp.push_back(std::log(j.at(x, g)));
          out.lw.push_back(safe_log(s.bet.at(x, g)) + std::log(o.at(x)));
        }
      }
      break;
    }
    case GameConfig::bookmaker: {
      const Joint2& j = game.joint2();
      for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t y = 0; y < j.ng(); ++y) {
          if (j.at(x, y) <= 0.0) continue;
          out.lp.push_back(std::log(j.at(x, y)));
          out.lw.push_back(safe_log(s.bet.at(x, 0)) + std::log(o.at(x, y)));
        }
      }
      break;
    }
    case GameConfig::double_si: {
      const Joint3& j = game.joint3();
      for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t g = 0; g < j.ng(); ++g) {
          for (std::size_t y = 0; y < j.ny(); ++y) {
            if (j.at(x, g, y) <= 0.0) continue;
            out.lp.push_back(std::log(j.at(x, g, y)));
            out.lw.push_back(safe_log(s.bet.at(x, g)) + std::log(o.at(x, y)));
          }
        }
      }
      break;
    }
  }
  return out;
}

double log_ice_magnitude(const OutcomeLogs& out, double R) {
  if (std::isinf(R)) {
    double best = R > 0 ? kPosInf : kNegInf;
    for (const double lw : out.lw) {
      best = R > 0 ? std::min(best, lw) : std::max(best, lw);
    }
    return best;
  }
  if (near(R, 1.0)) {
    double acc = 0.0;
    for (std::size_t i = 0; i < out.lp.size(); ++i) {
      if (std::isinf(out.lw[i])) return kNegInf;  // zero wealth with mass
      acc += std::exp(out.lp[i]) * out.lw[i];
    }
    return acc;
  }
  std::vector<double> terms(out.lp.size());
  for (std::size_t i = 0; i < out.lp.size(); ++i) {
    terms[i] = out.lp[i] + (1.0 - R) * out.lw[i];
  }
  return log_sum_exp(terms) / (1.0 - R);
}

}  // namespace

double log_ice(const BettingGame& game, const Strategy& s, double R) {
  const OutcomeLogs out = collect_outcomes(game, s);
  return game.odds.sign * log_ice_magnitude(out, R);
}

double ice(const BettingGame& game, const Strategy& s, double R) {
  const OutcomeLogs out = collect_outcomes(game, s);
  return game.odds.sign * std::exp(log_ice_magnitude(out, R));
}

FairnessReport fairness(const OddsTable& odds) {
  FairnessReport rep;
  rep.c.resize(odds.ny);
  bool all_fair = true, all_super = true, all_sub = true;
  for (std::size_t y = 0; y < odds.ny; ++y) {
    double inv = 0.0;
    for (std::size_t x = 0; x < odds.nx; ++x) inv += 1.0 / odds.at(x, y);
    const double c = 1.0 / inv;
    rep.c[y] = c;
    const bool fair = std::abs(c - 1.0) <= kFairTol;
    all_fair &= fair;
    all_super &= !fair && c > 1.0;
    all_sub &= !fair && c < 1.0;
  }
  rep.cls = all_fair    ? Fairness::fair
            : all_super ? Fairness::superfair
            : all_sub   ? Fairness::subfair
                        : Fairness::mixed;
  return rep;
}

bool odds_are_fair(const OddsTable& odds, double tol) {
  for (std::size_t y = 0; y < odds.ny; ++y) {
    double inv = 0.0;
    for (std::size_t x = 0; x < odds.nx; ++x) inv += 1.0 / odds.at(x, y);
    if (std::abs(inv - 1.0) > tol) return false;
  }
  return true;
}

CondTable odds_reference_table(const OddsTable& odds) {
  const FairnessReport rep = fairness(odds);
  CondTable r;
  r.rows = default_alphabet("x", odds.nx);
  r.cols = default_alphabet("y", odds.ny);
  r.w.resize(odds.nx * odds.ny);
  for (std::size_t x = 0; x < odds.nx; ++x) {
    for (std::size_t y = 0; y < odds.ny; ++y) {
      r.w[x * odds.ny + y] = rep.c[y] / odds.at(x, y);
    }
  }
  return r;
}

namespace {

void require_fair(const OddsTable& odds, const char* who) {
  if (!odds_are_fair(odds)) {
    throw std::invalid_argument(std::string(who) +
                                ": odds must be fair per column");
  }
}

double effective_order(double R) {
  return std::isinf(R) ? sgn(R) * kSaturationOrder : R;
}

}  // namespace

Strategy optimal_bet_bookmaker(const BettingGame& game, double R) {
  if (game.config != GameConfig::bookmaker) {
    throw std::invalid_argument("optimal_bet_bookmaker: wrong configuration");
  }
  require_fair(game.odds, "optimal_bet_bookmaker");
  const Joint2& j = game.joint2();
  const OddsTable& o = game.odds;
  if (near(R, 1.0)) {
    return strategy_from_pmf(marginalize(j, 0));
  }
  std::vector<double> score(j.nx());
  std::vector<double> ly(j.ng());
  const double Re = effective_order(R);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ng(); ++y) {
      const double c = near(R, 0.0) ? 1.0 : (1.0 - Re);
      ly[y] = safe_log(j.at(x, y)) + c * std::log(o.at(x, y));
    }
    score[x] = log_sum_exp(ly);
  }
  Pmf h = marginalize(j, 0);  // reuse alphabet
  if (near(R, 0.0)) {
    const auto it = std::max_element(score.begin(), score.end());
    std::fill(h.w.begin(), h.w.end(), 0.0);
    h.w[static_cast<std::size_t>(it - score.begin())] = 1.0;
    return strategy_from_pmf(h);
  }
  for (std::size_t x = 0; x < j.nx(); ++x) score[x] /= Re;
  softmax_inplace(score);
  h.w = std::move(score);
  return strategy_from_pmf(h);
}

DoubleOptimum optimal_bet_double(const BettingGame& game, double R) {
  if (game.config != GameConfig::double_si) {
    throw std::invalid_argument("optimal_bet_double: wrong configuration");
  }
  require_fair(game.odds, "optimal_bet_double");
  const Joint3& j = game.joint3();
  const OddsTable& o = game.odds;
  const Pmf pg = marginalize(marginalize(j, 2), 1);

  DoubleOptimum opt;
  opt.bet.rows = j.ax;
  opt.bet.cols = j.ag;
  opt.bet.w.assign(j.nx() * j.ng(), 0.0);
  opt.h_g = pg;

  if (near(R, 1.0)) {
    for (std::size_t g = 0; g < j.ng(); ++g) {
      if (pg.w[g] <= 0.0) {
        for (std::size_t x = 0; x < j.nx(); ++x) {
          opt.bet.at(x, g) = 1.0 / static_cast<double>(j.nx());
        }
        continue;
      }
      for (std::size_t x = 0; x < j.nx(); ++x) {
        double m = 0.0;
        for (std::size_t y = 0; y < j.ny(); ++y) m += j.at(x, g, y);
        opt.bet.at(x, g) = m / pg.w[g];
      }
    }
    return opt;
  }

  const double Re = effective_order(R);
  const bool risk_neutral = near(R, 0.0);
  std::vector<double> lhg(j.ng(), kNegInf);
  std::vector<double> linner(j.nx());
  std::vector<double> ly(j.ny());
  for (std::size_t g = 0; g < j.ng(); ++g) {
    if (pg.w[g] <= 0.0) {
      for (std::size_t x = 0; x < j.nx(); ++x) {
        opt.bet.at(x, g) = 1.0 / static_cast<double>(j.nx());
      }
      continue;
    }
    const double lpg = std::log(pg.w[g]);
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        const double c = risk_neutral ? 1.0 : (1.0 - Re);
        ly[y] = safe_log(j.at(x, g, y)) - lpg + c * std::log(o.at(x, y));
      }
      linner[x] = log_sum_exp(ly);
    }
    if (risk_neutral) {
      const auto it = std::max_element(linner.begin(), linner.end());
      opt.bet.at(static_cast<std::size_t>(it - linner.begin()), g) = 1.0;
      lhg[g] = lpg + *it;
      continue;
    }
    for (std::size_t x = 0; x < j.nx(); ++x) linner[x] /= Re;
    lhg[g] = lpg + Re * log_sum_exp(linner);
    softmax_inplace(linner);
    for (std::size_t x = 0; x < j.nx(); ++x) opt.bet.at(x, g) = linner[x];
  }
  softmax_inplace(lhg);
  opt.h_g.w = std::move(lhg);
  return opt;
}

DecompositionReport decompose_bookmaker(const BettingGame& game,
                                        const Strategy& s, double R) {
  if (game.config != GameConfig::bookmaker) {
    throw std::invalid_argument("decompose_bookmaker: wrong configuration");
  }
  require_fair(game.odds, "decompose_bookmaker");
  const Joint2& j = game.joint2();
  const CondTable pcond = condition(j, 0);
  const Pmf py = marginalize(j, 1);
  const CondTable r = odds_reference_table(game.odds);
  const double f = game.odds.sign * sgn(R);

  DecompositionReport rep;
  rep.log_ice = log_ice(game, s, R);
  rep.div_term = f * n1_crd(pcond, r, py, inv_order(R));
  const Strategy h = optimal_bet_bookmaker(game, R);
  std::vector<double> hw(h.bet.w), bw(s.bet.w);
  rep.penalty_term = f * renyi_divergence_weights(hw, bw, R);
  return rep;
}

DecompositionReport decompose_double(const BettingGame& game, const Strategy& s,
                                     double R) {
  if (game.config != GameConfig::double_si) {
    throw std::invalid_argument("decompose_double: wrong configuration");
  }
  require_fair(game.odds, "decompose_double");
  const Joint3& j = game.joint3();
  const CondTable3 pcx = condition_x_given_gy(j);
  const CondTable pyg = condition_y_given_g(j);
  const Pmf pg = marginalize(marginalize(j, 2), 1);
  const CondTable r2 = odds_reference_table(game.odds);
  CondTable3 r3;
  r3.rows = j.ax;
  r3.g = j.ag;
  r3.y = j.ay;
  r3.w.resize(j.nx() * j.ng() * j.ny());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t g = 0; g < j.ng(); ++g) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        r3.at(x, g, y) = r2.at(x, y);
      }
    }
  }
  const double f = game.odds.sign * sgn(R);

  DecompositionReport rep;
  rep.log_ice = log_ice(game, s, R);
  rep.div_term = f * n2_crd(pcx, r3, pg, pyg, inv_order(R));
  const DoubleOptimum opt = optimal_bet_double(game, R);
  std::vector<double> hw(j.nx() * j.ng()), bw(j.nx() * j.ng());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t g = 0; g < j.ng(); ++g) {
      hw[x * j.ng() + g] = opt.bet.at(x, g) * opt.h_g.w[g];
      bw[x * j.ng() + g] = s.bet.at(x, g) * opt.h_g.w[g];
    }
  }
  rep.penalty_term = f * renyi_divergence_weights(hw, bw, R);
  return rep;
}

double log_max_magnitude_none(const Pmf& px, const OddsTable& odds, double R) {
  if (odds.ny != 1 || odds.nx != px.size()) {
    throw std::invalid_argument("log_max_magnitude_none: shape mismatch");
  }
  const double Re = effective_order(R);
  if (near(Re, 1.0)) {
    double acc = 0.0;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px.w[x] <= 0.0) continue;
      acc += px.w[x] * (std::log(px.w[x]) + std::log(odds.at(x)));
    }
    return acc;
  }
  if (near(Re, 0.0)) {
    double best = kNegInf;
    for (std::size_t x = 0; x < px.size(); ++x) {
      if (px.w[x] <= 0.0) continue;
      best = std::max(best, std::log(px.w[x]) + std::log(odds.at(x)));
    }
    return best;
  }
  std::vector<double> inner;
  inner.reserve(px.size());
  for (std::size_t x = 0; x < px.size(); ++x) {
    if (px.w[x] <= 0.0) continue;
    inner.push_back(
        (std::log(px.w[x]) + (1.0 - Re) * std::log(odds.at(x))) / Re);
  }
  return Re / (1.0 - Re) * log_sum_exp(inner);
}

double log_max_magnitude_bookmaker(const Joint2& jxy, const OddsTable& odds,
                                   double R) {
  if (odds.nx != jxy.nx() || odds.ny != jxy.ng()) {
    throw std::invalid_argument("log_max_magnitude_bookmaker: shape mismatch");
  }
  const double Re = effective_order(R);
  if (near(Re, 1.0)) {
    const Pmf px = marginalize(jxy, 0);
    double acc = 0.0;
    for (std::size_t x = 0; x < jxy.nx(); ++x) {
      for (std::size_t y = 0; y < jxy.ng(); ++y) {
        if (jxy.at(x, y) <= 0.0) continue;
        acc += jxy.at(x, y) * (std::log(px.w[x]) + std::log(odds.at(x, y)));
      }
    }
    return acc;
  }
  std::vector<double> inner(jxy.nx());
  std::vector<double> ly(jxy.ng());
  for (std::size_t x = 0; x < jxy.nx(); ++x) {
    const double c = near(Re, 0.0) ? 1.0 : (1.0 - Re);
    for (std::size_t y = 0; y < jxy.ng(); ++y) {
      ly[y] = safe_log(jxy.at(x, y)) + c * std::log(odds.at(x, y));
    }
    inner[x] = log_sum_exp(ly);
  }
  if (near(Re, 0.0)) {
    return vec_max(inner);
  }
  for (double& v : inner) v /= Re;
  return Re / (1.0 - Re) * log_sum_exp(inner);
}

double log_max_magnitude_gambler(const Joint2& jxg, const OddsTable& odds,
                                 double R) {
  if (odds.ny != 1 || odds.nx != jxg.nx()) {
    throw std::invalid_argument("log_max_magnitude_gambler: shape mismatch");
  }
  const double Re = effective_order(R);
  const Pmf pg = marginalize(jxg, 1);
  const CondTable pcond = condition(jxg, 0);
  std::vector<double> percol(jxg.ng(), kNegInf);
  for (std::size_t g = 0; g < jxg.ng(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    Pmf col = pcond.column(g);
    percol[g] = log_max_magnitude_none(col, odds, Re);
  }
  if (near(Re, 1.0)) {
    double acc = 0.0;
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      if (pg.w[g] > 0.0) acc += pg.w[g] * percol[g];
    }
    return acc;
  }
  std::vector<double> terms;
  terms.reserve(jxg.ng());
  for (std::size_t g = 0; g < jxg.ng(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    terms.push_back(std::log(pg.w[g]) + (1.0 - Re) * percol[g]);
  }
  return log_sum_exp(terms) / (1.0 - Re);
}

RatioReport ratio_bookmaker_vs_none(const OddsTable& o_cond, const Joint2& jxy,
                                    double R) {
  require_fair(o_cond, "ratio_bookmaker_vs_none");
  const Pmf py = marginalize(jxy, 1);
  const Pmf px = marginalize(jxy, 0);

  // Averaged unconditional odds o(x) = Σ_y o(x|y) p(y) (same sign throughout).
  std::vector<double> avg(jxy.nx(), 0.0);
  for (std::size_t x = 0; x < jxy.nx(); ++x) {
    for (std::size_t y = 0; y < jxy.ng(); ++y) {
      avg[x] += o_cond.at(x, y) * py.w[y];
    }
  }
  std::vector<double> avg_signed(avg);
  for (double& v : avg_signed) v *= o_cond.sign;
  OddsTable o_avg = make_odds(avg_signed);

  const double lb = log_max_magnitude_bookmaker(jxy, o_cond, R);
  const double ln = log_max_magnitude_none(px, o_avg, R);

  const CondTable pcond = condition(jxy, 0);
  const CondTable r = odds_reference_table(o_cond);
  const double a = inv_order(R);
  const double n1 = n1_crd(pcond, r, py, a);

  // Headline comparison: reference = the probability-averaged columns of r.
  std::vector<double> r_avg(jxy.nx(), 0.0);
  for (std::size_t x = 0; x < jxy.nx(); ++x) {
    for (std::size_t y = 0; y < jxy.ng(); ++y) {
      r_avg[x] += r.at(x, y) * py.w[y];
    }
  }
  // Exact closed form: normalized reciprocal of the averaged odds, plus the
  // log of their margin constant.
  double inv_sum = 0.0;
  for (std::size_t x = 0; x < jxy.nx(); ++x) inv_sum += 1.0 / avg[x];
  const double c_avg = 1.0 / inv_sum;
  std::vector<double> rec(jxy.nx());
  for (std::size_t x = 0; x < jxy.nx(); ++x) rec[x] = c_avg / avg[x];

  RatioReport rep;
  rep.log_ratio = lb - ln;
  rep.rhs = n1 - renyi_divergence_weights(px.w, r_avg, a);
  rep.exact_rhs =
      n1 - std::log(c_avg) - renyi_divergence_weights(px.w, rec, a);
  rep.holds_nonneg = rep.log_ratio >= -1e-10;
  return rep;
}

RatioReport ratio_bookmaker_vs_gambler(const OddsTable& o_cond,
                                       const Joint2& jxg, double R) {
  require_fair(o_cond, "ratio_bookmaker_vs_gambler");
  if (o_cond.nx != jxg.nx() || o_cond.ny != jxg.ng()) {
    throw std::invalid_argument("ratio_bookmaker_vs_gambler: shape mismatch");
  }
  const double Re = effective_order(R);
  const Pmf pg = marginalize(jxg, 1);
  const CondTable pcond = condition(jxg, 0);

  // Numerator: the gambler observes g and bets the column game whose odds are
  // the matching odds column.
  std::vector<double> percol(jxg.ng(), kNegInf);
  for (std::size_t g = 0; g < jxg.ng(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    std::vector<double> col(jxg.nx());
    for (std::size_t x = 0; x < jxg.nx(); ++x) {
      col[x] = o_cond.sign * o_cond.at(x, g);
    }
    OddsTable oc = make_odds(col);
    Pmf pc = pcond.column(g);
    percol[g] = log_max_magnitude_none(pc, oc, Re);
  }
  double lnum;
  if (near(Re, 1.0)) {
    lnum = 0.0;
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      if (pg.w[g] > 0.0) lnum += pg.w[g] * percol[g];
    }
  } else {
    std::vector<double> terms;
    terms.reserve(jxg.ng());
    for (std::size_t g = 0; g < jxg.ng(); ++g) {
      if (pg.w[g] <= 0.0) continue;
      terms.push_back(std::log(pg.w[g]) + (1.0 - Re) * percol[g]);
    }
    lnum = log_sum_exp(terms) / (1.0 - Re);
  }
  const double lden = log_max_magnitude_bookmaker(jxg, o_cond, Re);

  const CondTable r = odds_reference_table(o_cond);
  const double a = inv_order(R);

  RatioReport rep;
  rep.log_ratio = sgn(R) * (lnum - lden);
  rep.rhs = blp_crd(pcond, r, pg, a) - n1_crd(pcond, r, pg, a);
  rep.exact_rhs = rep.rhs;
  rep.holds_nonneg = rep.log_ratio >= -1e-10;
  return rep;
}

}  // namespace betinfo
