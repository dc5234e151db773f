#include "betinfo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

constexpr double kBoundaryMix = 1e-9;  // keeps log-type objectives finite
constexpr double kFdStep = 1e-6;

double safe_eval(const std::function<double(const Pmf&)>& objective,
                 const std::vector<double>& w) {
  try {
    const double v = objective(make_pmf(w));
    return std::isnan(v) ? kNegInf : v;
  } catch (const std::exception&) {
    return kNegInf;
  }
}

void mix_with_uniform(std::vector<double>& w, double eps) {
  const double u = eps / static_cast<double>(w.size());
  for (double& v : w) v = (1.0 - eps) * v + u;
}

/// Enumerate all ways to split `resolution` grid units across k coordinates.
template <typename Visit>
void visit_compositions(std::size_t k, std::size_t resolution, Visit&& visit) {
  std::vector<std::size_t> parts(k, 0);
  const std::function<void(std::size_t, std::size_t)> rec =
      [&](std::size_t idx, std::size_t remaining) {
        if (idx + 1 == k) {
          parts[idx] = remaining;
          visit(parts);
          return;
        }
        for (std::size_t n = 0; n <= remaining; ++n) {
          parts[idx] = n;
          rec(idx + 1, remaining - n);
        }
      };
  rec(0, resolution);
}

/// One projected-gradient ascent run from `start` (assumed on the simplex).
double ascend(const std::function<double(const Pmf&)>& objective,
              std::vector<double>& start, const SimplexSearchConfig& cfg) {
  const std::size_t k = start.size();
  std::vector<double> cur = start;
  double cur_val = safe_eval(objective, cur);
  std::vector<double> grad(k), trial(k), probe(k);
  for (std::size_t it = 0; it < cfg.ascent_iters; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      probe = cur;
      probe[i] += kFdStep;
      probe = project_to_simplex(probe);
      const double up = safe_eval(objective, probe);
      probe = cur;
      probe[i] -= kFdStep;
      probe = project_to_simplex(probe);
      const double dn = safe_eval(objective, probe);
      grad[i] = (std::isinf(up) || std::isinf(dn))
                    ? 0.0
                    : (up - dn) / (2.0 * kFdStep);
    }
    // Remove the component normal to the simplex so steps stay meaningful.
    double mean = 0.0;
    for (const double g : grad) mean += g;
    mean /= static_cast<double>(k);
    double norm = 0.0;
    for (double& g : grad) {
      g -= mean;
      norm += g * g;
    }
    if (norm < 1e-24) break;

    double step = 1.0;
    bool improved = false;
    for (int half = 0; half < 40; ++half) {
      for (std::size_t i = 0; i < k; ++i) trial[i] = cur[i] + step * grad[i];
      trial = project_to_simplex(trial);
      mix_with_uniform(trial, kBoundaryMix);
      const double v = safe_eval(objective, trial);
      if (v > cur_val) {
        cur = trial;
        cur_val = v;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
    if (improved && std::abs(step) < 1e-18) break;
  }
  start = cur;
  return cur_val;
}

}  // namespace

PmfSearchResult maximize_over_pmf(
    const std::function<double(const Pmf&)>& objective, std::size_t k,
    const SimplexSearchConfig& cfg) {
  if (k == 0) throw std::invalid_argument("maximize_over_pmf: k must be >= 1");
  if (cfg.grid_resolution < 2) {
    throw std::invalid_argument("maximize_over_pmf: resolution must be >= 2");
  }
  if (k == 1) {
    Pmf point = make_pmf({1.0});
    return PmfSearchResult{point, safe_eval(objective, point.w)};
  }

  std::vector<double> best_w(k, 1.0 / static_cast<double>(k));
  mix_with_uniform(best_w, kBoundaryMix);
  double best_val = safe_eval(objective, best_w);

  // (a) global grid sweep.
  std::vector<double> w(k);
  visit_compositions(k, cfg.grid_resolution, [&](const std::vector<std::size_t>& parts) {
    for (std::size_t i = 0; i < k; ++i) {
      w[i] = static_cast<double>(parts[i]) /
             static_cast<double>(cfg.grid_resolution);
    }
    mix_with_uniform(w, kBoundaryMix);
    const double v = safe_eval(objective, w);
    if (v > best_val) {
      best_val = v;
      best_w = w;
    }
  });

  // (b) ascent from the best grid point and from seeded Dirichlet starts.
  std::vector<double> start = best_w;
  double v = ascend(objective, start, cfg);
  if (v > best_val) {
    best_val = v;
    best_w = start;
  }
  Rng rng(cfg.seed);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    start = rng.dirichlet(k);
    mix_with_uniform(start, kBoundaryMix);
    v = ascend(objective, start, cfg);
    if (v > best_val) {
      best_val = v;
      best_w = start;
    }
  }
  return PmfSearchResult{make_pmf(best_w), best_val};
}

CondTableSearchResult maximize_over_condtable(
    const std::function<double(const CondTable&)>& objective,
    std::size_t nrows, std::size_t ncols, const SimplexSearchConfig& cfg) {
  if (nrows == 0 || ncols == 0) {
    throw std::invalid_argument("maximize_over_condtable: empty shape");
  }
  CondTable cur = make_cond_table(
      nrows, ncols,
      std::vector<double>(nrows * ncols, 1.0 / static_cast<double>(nrows)));

  const auto eval_table = [&](const CondTable& t) {
    try {
      const double v = objective(t);
      return std::isnan(v) ? kNegInf : v;
    } catch (const std::exception&) {
      return kNegInf;
    }
  };
  double cur_val = eval_table(cur);

  // Coordinate-ascent sweeps: optimize one column with the rest frozen.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (std::size_t c = 0; c < ncols; ++c) {
      SimplexSearchConfig col_cfg = cfg;
      col_cfg.seed = cfg.seed + 0x9e3779b97f4a7c15ULL * (sweep * ncols + c + 1);
      const auto col_objective = [&](const Pmf& colp) {
        CondTable t = cur;
        for (std::size_t r = 0; r < nrows; ++r) t.at(r, c) = colp.w[r];
        return objective(t);
      };
      const PmfSearchResult res =
          maximize_over_pmf(col_objective, nrows, col_cfg);
      if (res.value > cur_val) {
        cur_val = res.value;
        for (std::size_t r = 0; r < nrows; ++r) cur.at(r, c) = res.argmax.w[r];
      }
    }
  }

  // Joint polish: projected-gradient steps on all columns at once.
  std::vector<double> grad(nrows * ncols);
  CondTable probe = cur, trial = cur;
  for (std::size_t it = 0; it < cfg.ascent_iters; ++it) {
    for (std::size_t i = 0; i < grad.size(); ++i) {
      probe.w = cur.w;
      probe.w[i] += kFdStep;
      for (std::size_t c = 0; c < ncols; ++c) {
        std::vector<double> col(nrows);
        for (std::size_t r = 0; r < nrows; ++r) col[r] = probe.at(r, c);
        col = project_to_simplex(col);
        for (std::size_t r = 0; r < nrows; ++r) probe.at(r, c) = col[r];
      }
      const double up = eval_table(probe);
      probe.w = cur.w;
      probe.w[i] -= kFdStep;
      for (std::size_t c = 0; c < ncols; ++c) {
        std::vector<double> col(nrows);
        for (std::size_t r = 0; r < nrows; ++r) col[r] = probe.at(r, c);
        col = project_to_simplex(col);
        for (std::size_t r = 0; r < nrows; ++r) probe.at(r, c) = col[r];
      }
      const double dn = eval_table(probe);
      grad[i] = (std::isinf(up) || std::isinf(dn))
                    ? 0.0
                    : (up - dn) / (2.0 * kFdStep);
    }
    // Per-column tangent projection of the gradient.
    double norm = 0.0;
    for (std::size_t c = 0; c < ncols; ++c) {
      double mean = 0.0;
      for (std::size_t r = 0; r < nrows; ++r) mean += grad[r * ncols + c];
      mean /= static_cast<double>(nrows);
      for (std::size_t r = 0; r < nrows; ++r) {
        grad[r * ncols + c] -= mean;
        norm += grad[r * ncols + c] * grad[r * ncols + c];
      }
    }
    if (norm < 1e-24) break;
    double step = 1.0;
    bool improved = false;
    for (int half = 0; half < 40; ++half) {
      trial.w = cur.w;
      for (std::size_t i = 0; i < grad.size(); ++i) {
        trial.w[i] += step * grad[i];
      }
      for (std::size_t c = 0; c < ncols; ++c) {
        std::vector<double> col(nrows);
        for (std::size_t r = 0; r < nrows; ++r) col[r] = trial.at(r, c);
        col = project_to_simplex(col);
        const double u = kBoundaryMix / static_cast<double>(nrows);
        for (std::size_t r = 0; r < nrows; ++r) {
          trial.at(r, c) = (1.0 - kBoundaryMix) * col[r] + u;
        }
      }
      const double v = eval_table(trial);
      if (v > cur_val) {
        cur.w = trial.w;
        cur_val = v;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return CondTableSearchResult{cur, cur_val};
}

}  // namespace betinfo
