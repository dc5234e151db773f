#include "betinfo/entropies.hpp"

#include <cmath>

namespace betinfo {

namespace {

void require_support(std::span<const double> w, double order, const char* who) {
  if (order < 0.0) {
    for (double v : w) {
      if (v <= 0.0) {
        throw std::domain_error(std::string(who) +
                                ": negative order requires full support");
      }
    }
  }
}

bool near(double a, double b) { return std::abs(a - b) < kOrderBranchTol; }

}  // namespace

double log_renyi_probability(const Pmf& p, double q) {
  if (std::isnan(q)) throw std::domain_error("order is NaN");
  require_support(p.w, q, "renyi_probability");
  std::vector<double> lp;
  lp.reserve(p.size());
  for (double v : p.w) {
    if (v > 0.0) lp.push_back(std::log(v));
  }
  if (lp.empty()) throw std::domain_error("renyi_probability: empty support");
  if (q == kPosInf) return vec_max(lp);
  if (q == kNegInf) return vec_min(lp);
  if (near(q, 1.0)) {
    double s = 0.0;
    for (double l : lp) s += std::exp(l) * l;
    return s;
  }
  std::vector<double> t(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) t[i] = q * lp[i];
  return log_sum_exp(t) / (q - 1.0);
}

double log_renyi_cond_probability(const Joint2& j, double q) {
  if (std::isnan(q)) throw std::domain_error("order is NaN");
  require_support(j.w, q, "renyi_cond_probability");
  const std::size_t nx = j.nx(), ng = j.ng();
  if (q == kPosInf || q == kNegInf) {
    // (Σ_x j^q)^{1/q} tends to the max (resp. min) of the column; the outer
    // exponent q/(q-1) tends to 1.
    double s = 0.0;
    for (std::size_t g = 0; g < ng; ++g) {
      double best = q == kPosInf ? 0.0 : kPosInf;
      for (std::size_t x = 0; x < nx; ++x) {
        const double v = j.at(x, g);
        best = q == kPosInf ? std::max(best, v) : std::min(best, v);
      }
      s += best;
    }
    return std::log(s);
  }
  if (near(q, 1.0)) {
    double s = 0.0;
    for (std::size_t g = 0; g < ng; ++g) {
      double m = 0.0;
      for (std::size_t x = 0; x < nx; ++x) m += j.at(x, g);
      if (m <= 0.0) continue;
      for (std::size_t x = 0; x < nx; ++x) {
        const double v = j.at(x, g);
        if (v > 0.0) s += v * std::log(v / m);
      }
    }
    return s;
  }
  if (near(q, 0.0)) {
    // Right-limit q -> 0+: dominated by the column with the largest support.
    std::size_t best = 0;
    for (std::size_t g = 0; g < ng; ++g) {
      std::size_t cnt = 0;
      for (std::size_t x = 0; x < nx; ++x) cnt += j.at(x, g) > 0.0 ? 1 : 0;
      best = std::max(best, cnt);
    }
    if (best == 0) throw std::domain_error("renyi_cond_probability: empty support");
    return -std::log(static_cast<double>(best));
  }
  std::vector<double> inner(ng, kNegInf);
  std::vector<double> t;
  for (std::size_t g = 0; g < ng; ++g) {
    t.clear();
    for (std::size_t x = 0; x < nx; ++x) {
      const double v = j.at(x, g);
      if (v > 0.0) t.push_back(q * std::log(v));
    }
    if (!t.empty()) inner[g] = log_sum_exp(t) / q;
  }
  return log_sum_exp(inner) * q / (q - 1.0);
}

double renyi_probability(const Pmf& p, double q) {
  return std::exp(log_renyi_probability(p, q));
}

double renyi_cond_probability(const Joint2& j, double q) {
  return std::exp(log_renyi_cond_probability(j, q));
}

double renyi_entropy(const Pmf& p, double q) {
  return -sgn(q) * log_renyi_probability(p, q);
}

double shannon_entropy(const Pmf& p) { return renyi_entropy(p, 1.0); }

double tsallis_entropy(const Pmf& p, double q) {
  return sharma_mittal_entropy(p, OrderPair{q, q});
}

double sharma_mittal_entropy(const Pmf& p, OrderPair o) {
  if (!std::isfinite(o.r)) throw std::domain_error("sharma_mittal: r must be finite");
  const double s = sgn(o.q);
  return s * eta_r(s * renyi_entropy(p, o.q), o.r);
}

double arimoto_cond_entropy(const Joint2& j, double q) {
  return -sgn(q) * log_renyi_cond_probability(j, q);
}

double cond_entropy_h1(const Joint2& j, double alpha) {
  const Pmf pg = marginalize(j, 1);
  const CondTable pxg = condition(j, 0);
  double s = 0.0;
  for (std::size_t g = 0; g < j.ng(); ++g) {
    if (pg.w[g] <= 0.0 || !pxg.col_defined(g)) continue;
    s += pg.w[g] * renyi_entropy(pxg.column(g), alpha);
  }
  return s;
}

double cond_entropy_h2(const Joint2& j, double alpha) {
  const Pmf joint_flat = Pmf{default_alphabet("xg", j.w.size()), j.w};
  const Pmf pg = marginalize(j, 1);
  return renyi_entropy(joint_flat, alpha) - renyi_entropy(pg, alpha);
}

double cond_entropy_h4(const Joint2& j, double alpha) {
  if (std::isnan(alpha)) throw std::domain_error("order is NaN");
  const Pmf pg = marginalize(j, 1);
  const CondTable pxg = condition(j, 0);
  require_support(j.w, alpha, "cond_entropy_h4");
  if (near(alpha, 1.0)) {
    // Shannon conditional entropy.
    return arimoto_cond_entropy(j, 1.0);
  }
  if (alpha == kPosInf || alpha == kNegInf) {
    double best = alpha == kPosInf ? 0.0 : kPosInf;
    for (std::size_t g = 0; g < j.ng(); ++g) {
      if (pg.w[g] <= 0.0) continue;
      for (std::size_t x = 0; x < j.nx(); ++x) {
        const double v = pxg.at(x, g);
        if (alpha == kPosInf) {
          best = std::max(best, v);
        } else if (v > 0.0) {
          best = std::min(best, v);
        }
      }
    }
    return alpha == kPosInf ? -std::log(best) : std::log(best);
  }
  std::vector<double> t;
  for (std::size_t g = 0; g < j.ng(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    const double lpg = std::log(pg.w[g]);
    for (std::size_t x = 0; x < j.nx(); ++x) {
      const double v = pxg.at(x, g);
      if (v > 0.0) t.push_back(lpg + alpha * std::log(v));
    }
  }
  return sgn(alpha) / (1.0 - alpha) * log_sum_exp(t);
}

double id_cond_entropy(const Joint2& j, OrderPair o) {
  if (!std::isfinite(o.r)) throw std::domain_error("id_cond_entropy: r must be finite");
  const double s = sgn(o.q);
  return s * eta_r(s * arimoto_cond_entropy(j, o.q), o.r);
}

double id_mutual_information(const Joint2& j, OrderPair o) {
  const Pmf px = marginalize(j, 0);
  return pseudo_sub(sharma_mittal_entropy(px, o), id_cond_entropy(j, o), o.r);
}

ChainRuleReport check_chain_rule(const Joint2& j, OrderPair o) {
  const double s = sgn(o.q);
  const double K = static_cast<double>(j.ng());
  const Pmf joint_flat = Pmf{default_alphabet("xg", j.w.size()), j.w};
  const double lhs = s * id_cond_entropy(j, o);
  const double rhs =
      s * pseudo_sub(sharma_mittal_entropy(joint_flat, o), ln_r(K, o.r), o.r);
  return ChainRuleReport{lhs, rhs, lhs >= rhs - 1e-10};
}

}  // namespace betinfo
