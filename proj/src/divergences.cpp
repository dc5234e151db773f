#include "betinfo/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

bool near(double a, double b) { return std::abs(a - b) < kOrderBranchTol; }

/// Evaluate f at sign·2^k for growing k until the value stabilizes; numerical
/// extension used for ±inf orders of the conditional divergences.
template <typename F>
double saturate_order(F&& f, double sign) {
  double prev = f(sign * 64.0);
  for (int k = 7; k <= 14; ++k) {
    const double cur = f(sign * std::ldexp(1.0, k));
    if (std::isinf(prev) && std::isinf(cur) && prev == cur) return cur;
    if (std::abs(cur - prev) < 1e-9) return cur;
    prev = cur;
  }
  return prev;
}

void check_same_shape(const CondTable& a, const CondTable& b) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw std::invalid_argument("conditional divergence: table shapes differ");
  }
}

void check_same_shape(const CondTable3& a, const CondTable3& b) {
  if (a.nx() != b.nx() || a.ng() != b.ng() || a.ny() != b.ny()) {
    throw std::invalid_argument("conditional divergence: table shapes differ");
  }
}

/// Negative orders need strictly positive tables wherever the weight is
/// positive; otherwise power terms like 0^{negative} are undefined.
void require_full_support_cols(const CondTable& pc, const CondTable& qc,
                               const Pmf& w) {
  for (std::size_t c = 0; c < pc.ncols(); ++c) {
    if (w.w[c] <= 0.0) continue;
    for (std::size_t r = 0; r < pc.nrows(); ++r) {
      if (pc.at(r, c) <= 0.0 || qc.at(r, c) <= 0.0) {
        throw degenerate_order_error(
            "negative order requires full support on every weighted column");
      }
    }
  }
}

void require_full_support_cols(const CondTable3& pc, const CondTable3& qc,
                               const Pmf& pg, const CondTable& pyg) {
  for (std::size_t g = 0; g < pc.ng(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    for (std::size_t y = 0; y < pc.ny(); ++y) {
      if (pyg.at(y, g) <= 0.0) continue;
      for (std::size_t x = 0; x < pc.nx(); ++x) {
        if (pc.at(x, g, y) <= 0.0 || qc.at(x, g, y) <= 0.0) {
          throw degenerate_order_error(
              "negative order requires full support on every weighted column");
        }
      }
    }
  }
}

double kl_weights(std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kPosInf;
    acc += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return acc;
}

}  // namespace

double renyi_divergence_weights(std::span<const double> p,
                                std::span<const double> q, double alpha) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("renyi_divergence: size mismatch");
  }
  if (near(alpha, 1.0)) return kl_weights(p, q);
  if (std::isinf(alpha)) {
    // alpha = +inf: ln max p/q on supp(p); alpha = -inf: ln max q/p on supp(q).
    double best = kNegInf;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double num = alpha > 0 ? p[i] : q[i];
      const double den = alpha > 0 ? q[i] : p[i];
      if (num <= 0.0) continue;
      if (den <= 0.0) return kPosInf;
      best = std::max(best, std::log(num) - std::log(den));
    }
    return best;
  }
  if (near(alpha, 0.0)) {
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) mass += q[i];
    }
    return -safe_log(mass);
  }
  if (alpha < 0.0) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0.0 || q[i] <= 0.0) {
        throw degenerate_order_error(
            "negative order requires full support of both distributions");
      }
    }
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;  // 0 * anything finite contributes nothing
    if (q[i] <= 0.0) {
      if (alpha > 1.0) return kPosInf;
      continue;  // alpha in (0,1): q-zero terms vanish
    }
    terms.push_back(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  return sgn(alpha) / (alpha - 1.0) * log_sum_exp(terms);
}

double renyi_divergence(const Pmf& p, const Pmf& q, double alpha) {
  return renyi_divergence_weights(p.w, q.w, alpha);
}

namespace {

/// ln Σ_a pc(a|c)^α qc(a|c)^{1-α} for one column, with the support rules of
/// the unconditional divergence. +inf marks an α>1 support violation.
double column_power_sum_log(const CondTable& pc, const CondTable& qc,
                            std::size_t c, double alpha) {
  std::vector<double> terms;
  terms.reserve(pc.nrows());
  for (std::size_t r = 0; r < pc.nrows(); ++r) {
    const double pv = pc.at(r, c);
    const double qv = qc.at(r, c);
    if (pv <= 0.0 && alpha > 0.0) continue;
    if (qv <= 0.0) {
      if (alpha > 1.0 && pv > 0.0) return kPosInf;
      continue;
    }
    if (pv <= 0.0) continue;  // negative alpha reaches here only on full support
    terms.push_back(alpha * std::log(pv) + (1.0 - alpha) * std::log(qv));
  }
  return log_sum_exp(terms);
}

double sibson_finite(const CondTable& pc, const CondTable& qc, const Pmf& pb,
                     double alpha) {
  std::vector<double> terms;
  terms.reserve(pb.size());
  for (std::size_t b = 0; b < pb.size(); ++b) {
    if (pb.w[b] <= 0.0) continue;
    const double m = column_power_sum_log(pc, qc, b, alpha);
    if (m == kPosInf) return kPosInf;
    terms.push_back(std::log(pb.w[b]) + m);
  }
  return sgn(alpha) / (alpha - 1.0) * log_sum_exp(terms);
}

double blp_finite(const CondTable& pc, const CondTable& qc, const Pmf& pg,
                  double alpha) {
  std::vector<double> terms;
  terms.reserve(pg.size());
  for (std::size_t g = 0; g < pg.size(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    const double m = column_power_sum_log(pc, qc, g, alpha);
    if (m == kPosInf) return kPosInf;
    terms.push_back(std::log(pg.w[g]) + m / alpha);
  }
  return std::abs(alpha) / (alpha - 1.0) * log_sum_exp(terms);
}

double n1_finite(const CondTable& pc, const CondTable& qc, const Pmf& py,
                 double alpha) {
  const double c = (1.0 - alpha) / alpha;
  std::vector<double> outer;
  outer.reserve(pc.nrows());
  std::vector<double> inner_terms;
  for (std::size_t x = 0; x < pc.nrows(); ++x) {
    inner_terms.clear();
    for (std::size_t y = 0; y < pc.ncols(); ++y) {
      if (py.w[y] <= 0.0) continue;
      const double pv = pc.at(x, y);
      if (pv <= 0.0) continue;
      const double qv = qc.at(x, y);
      if (qv <= 0.0) {
        if (c > 0.0) continue;  // q^c -> 0: term vanishes
        return kPosInf;          // q^c -> inf under positive weight (alpha > 1)
      }
      inner_terms.push_back(std::log(py.w[y]) + std::log(pv) +
                            c * std::log(qv));
    }
    const double inner = log_sum_exp(inner_terms);
    outer.push_back(alpha * inner);
  }
  return sgn(alpha) / (alpha - 1.0) * log_sum_exp(outer);
}

double n1_alpha1(const CondTable& pc, const CondTable& qc, const Pmf& py) {
  // Marginal self-information minus the cross term against the reference.
  std::vector<double> px(pc.nrows(), 0.0);
  for (std::size_t x = 0; x < pc.nrows(); ++x) {
    for (std::size_t y = 0; y < pc.ncols(); ++y) {
      px[x] += pc.at(x, y) * py.w[y];
    }
  }
  double a = 0.0;
  for (const double v : px) {
    if (v > 0.0) a += v * std::log(v);
  }
  double b = 0.0;
  for (std::size_t x = 0; x < pc.nrows(); ++x) {
    for (std::size_t y = 0; y < pc.ncols(); ++y) {
      const double w = py.w[y] * pc.at(x, y);
      if (w <= 0.0) continue;
      const double qv = qc.at(x, y);
      if (qv <= 0.0) return kPosInf;
      b += w * std::log(qv);
    }
  }
  return a - b;
}

double n2_finite(const CondTable3& pc, const CondTable3& qc, const Pmf& pg,
                 const CondTable& pyg, double alpha) {
  const double c = (1.0 - alpha) / alpha;
  std::vector<double> group_terms;
  group_terms.reserve(pg.size());
  std::vector<double> mid_terms;
  std::vector<double> inner_terms;
  for (std::size_t g = 0; g < pg.size(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    mid_terms.clear();
    bool group_inf = false;
    for (std::size_t x = 0; x < pc.nx(); ++x) {
      inner_terms.clear();
      for (std::size_t y = 0; y < pc.ny(); ++y) {
        const double wy = pyg.at(y, g);
        if (wy <= 0.0) continue;
        const double pv = pc.at(x, g, y);
        if (pv <= 0.0) continue;
        const double qv = qc.at(x, g, y);
        if (qv <= 0.0) {
          if (c > 0.0) continue;
          group_inf = true;
          break;
        }
        inner_terms.push_back(std::log(wy) + std::log(pv) + c * std::log(qv));
      }
      if (group_inf) break;
      mid_terms.push_back(alpha * log_sum_exp(inner_terms));
    }
    if (group_inf) {
      if (alpha > 0.0) return kPosInf;
      continue;  // unreachable for alpha<0 (full support enforced)
    }
    group_terms.push_back(std::log(pg.w[g]) + log_sum_exp(mid_terms) / alpha);
  }
  return std::abs(alpha) / (alpha - 1.0) * log_sum_exp(group_terms);
}

double n2_alpha1(const CondTable3& pc, const CondTable3& qc, const Pmf& pg,
                 const CondTable& pyg) {
  double total = 0.0;
  for (std::size_t g = 0; g < pg.size(); ++g) {
    if (pg.w[g] <= 0.0) continue;
    std::vector<double> pxg(pc.nx(), 0.0);
    for (std::size_t x = 0; x < pc.nx(); ++x) {
      for (std::size_t y = 0; y < pc.ny(); ++y) {
        pxg[x] += pyg.at(y, g) * pc.at(x, g, y);
      }
    }
    double a = 0.0;
    for (const double v : pxg) {
      if (v > 0.0) a += v * std::log(v);
    }
    double b = 0.0;
    for (std::size_t x = 0; x < pc.nx(); ++x) {
      for (std::size_t y = 0; y < pc.ny(); ++y) {
        const double w = pyg.at(y, g) * pc.at(x, g, y);
        if (w <= 0.0) continue;
        const double qv = qc.at(x, g, y);
        if (qv <= 0.0) return kPosInf;
        b += w * std::log(qv);
      }
    }
    total += pg.w[g] * (a - b);
  }
  return total;
}

}  // namespace

double sibson_crd(const CondTable& pc, const CondTable& qc, const Pmf& pb,
                  double alpha) {
  check_same_shape(pc, qc);
  if (pc.ncols() != pb.size()) {
    throw std::invalid_argument("sibson_crd: weight size mismatch");
  }
  if (std::isinf(alpha)) {
    return saturate_order(
        [&](double a) { return sibson_finite(pc, qc, pb, a); }, sgn(alpha));
  }
  if (near(alpha, 1.0)) return csiszar_crd(pc, qc, pb, 1.0);
  if (near(alpha, 0.0)) return sibson_finite(pc, qc, pb, 1e-6);
  if (alpha < 0.0) require_full_support_cols(pc, qc, pb);
  return sibson_finite(pc, qc, pb, alpha);
}

double csiszar_crd(const CondTable& pc, const CondTable& qc, const Pmf& pb,
                   double alpha) {
  check_same_shape(pc, qc);
  if (pc.ncols() != pb.size()) {
    throw std::invalid_argument("csiszar_crd: weight size mismatch");
  }
  double acc = 0.0;
  for (std::size_t b = 0; b < pb.size(); ++b) {
    if (pb.w[b] <= 0.0) continue;
    std::vector<double> pcol(pc.nrows()), qcol(pc.nrows());
    for (std::size_t r = 0; r < pc.nrows(); ++r) {
      pcol[r] = pc.at(r, b);
      qcol[r] = qc.at(r, b);
    }
    const double d = renyi_divergence_weights(pcol, qcol, alpha);
    if (d == kPosInf) return kPosInf;
    acc += pb.w[b] * d;
  }
  return acc;
}

double blp_crd(const CondTable& pc, const CondTable& qc, const Pmf& pg,
               double alpha) {
  check_same_shape(pc, qc);
  if (pc.ncols() != pg.size()) {
    throw std::invalid_argument("blp_crd: weight size mismatch");
  }
  if (std::isinf(alpha)) {
    return saturate_order([&](double a) { return blp_finite(pc, qc, pg, a); },
                          sgn(alpha));
  }
  if (near(alpha, 1.0)) return csiszar_crd(pc, qc, pg, 1.0);
  if (near(alpha, 0.0)) return blp_finite(pc, qc, pg, 1e-6);
  if (alpha < 0.0) require_full_support_cols(pc, qc, pg);
  return blp_finite(pc, qc, pg, alpha);
}

double n1_crd(const CondTable& pc, const CondTable& qc, const Pmf& py,
              double alpha) {
  check_same_shape(pc, qc);
  if (pc.ncols() != py.size()) {
    throw std::invalid_argument("n1_crd: weight size mismatch");
  }
  if (std::isinf(alpha)) {
    return saturate_order([&](double a) { return n1_crd(pc, qc, py, a); },
                          sgn(alpha));
  }
  if (near(alpha, 1.0)) return n1_alpha1(pc, qc, py);
  if (near(alpha, 0.0)) return n1_finite(pc, qc, py, 1e-6);
  if (alpha < 0.0) require_full_support_cols(pc, qc, py);
  return n1_finite(pc, qc, py, alpha);
}

double n2_crd(const CondTable3& pc, const CondTable3& qc, const Pmf& pg,
              const CondTable& pyg, double alpha) {
  check_same_shape(pc, qc);
  if (pc.ng() != pg.size() || pyg.ncols() != pc.ng() || pyg.nrows() != pc.ny()) {
    throw std::invalid_argument("n2_crd: weight shape mismatch");
  }
  if (std::isinf(alpha)) {
    return saturate_order([&](double a) { return n2_crd(pc, qc, pg, pyg, a); },
                          sgn(alpha));
  }
  if (near(alpha, 1.0)) return n2_alpha1(pc, qc, pg, pyg);
  if (near(alpha, 0.0)) return n2_finite(pc, qc, pg, pyg, 1e-6);
  if (alpha < 0.0) require_full_support_cols(pc, qc, pg, pyg);
  return n2_finite(pc, qc, pg, pyg, alpha);
}

double n1_crd_eps_limit(const CondTable& pc, const CondTable& qc, const Pmf& py,
                        double eps) {
  return 0.5 * (n1_crd(pc, qc, py, 1.0 - eps) + n1_crd(pc, qc, py, 1.0 + eps));
}

double n2_crd_eps_limit(const CondTable3& pc, const CondTable3& qc,
                        const Pmf& pg, const CondTable& pyg, double eps) {
  return 0.5 * (n2_crd(pc, qc, pg, pyg, 1.0 - eps) +
                n2_crd(pc, qc, pg, pyg, 1.0 + eps));
}

InequalityReport check_dpi_n1(const CondTable& pc, const CondTable& qc,
                              const Pmf& py, double alpha) {
  std::vector<double> px(pc.nrows(), 0.0), qx(pc.nrows(), 0.0);
  for (std::size_t x = 0; x < pc.nrows(); ++x) {
    for (std::size_t y = 0; y < pc.ncols(); ++y) {
      px[x] += pc.at(x, y) * py.w[y];
      qx[x] += qc.at(x, y) * py.w[y];
    }
  }
  InequalityReport rep;
  rep.lhs = renyi_divergence_weights(px, qx, alpha);
  rep.rhs = n1_crd(pc, qc, py, alpha);
  rep.holds = rep.lhs <= rep.rhs + 1e-10;
  return rep;
}

InequalityReport check_n1_le_blp(const CondTable& pc, const CondTable& qc,
                                 const Pmf& pw, double alpha) {
  InequalityReport rep;
  rep.lhs = n1_crd(pc, qc, pw, alpha);
  rep.rhs = blp_crd(pc, qc, pw, alpha);
  rep.holds = rep.lhs <= rep.rhs + 1e-10;
  return rep;
}

CrdIdentityReport crd_entropy_identities(const Joint2& j, double alpha) {
  const CondTable pc = condition(j, 0);
  const Pmf pg = marginalize(j, 1);
  const Pmf px = marginalize(j, 0);
  const std::size_t k = j.nx();
  CondTable uc = pc;
  std::fill(uc.w.begin(), uc.w.end(), 1.0 / static_cast<double>(k));
  uc.undefined_col.clear();
  Pmf ux = px;
  std::fill(ux.w.begin(), ux.w.end(), 1.0 / static_cast<double>(k));

  // Columns with zero conditioning mass never enter the divergences (their
  // weight is zero), but give them a valid uniform fill so table checks pass.
  CondTable pc_filled = pc;
  if (!pc_filled.undefined_col.empty()) {
    for (std::size_t c = 0; c < pc_filled.ncols(); ++c) {
      if (!pc_filled.undefined_col[c]) continue;
      for (std::size_t r = 0; r < pc_filled.nrows(); ++r) {
        pc_filled.at(r, c) = 1.0 / static_cast<double>(k);
      }
    }
    pc_filled.undefined_col.clear();
  }

  const double base = sgn(alpha) * std::log(static_cast<double>(k));
  CrdIdentityReport rep;
  rep.sibson_residual = std::abs(sibson_crd(pc_filled, uc, pg, alpha) -
                                 (base - cond_entropy_h4(j, alpha)));
  rep.csiszar_residual = std::abs(csiszar_crd(pc_filled, uc, pg, alpha) -
                                  (base - cond_entropy_h1(j, alpha)));
  rep.blp_residual = std::abs(blp_crd(pc_filled, uc, pg, alpha) -
                              (base - arimoto_cond_entropy(j, alpha)));
  rep.renyi_residual = std::abs(renyi_divergence(px, ux, alpha) -
                                (base - renyi_entropy(px, alpha)));
  rep.pass = rep.sibson_residual < 1e-10 && rep.csiszar_residual < 1e-10 &&
             rep.blp_residual < 1e-10 && rep.renyi_residual < 1e-10;
  return rep;
}

}  // namespace betinfo
