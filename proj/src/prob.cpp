#include "betinfo/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace betinfo {

// ---------------------------------------------------------------------------
// numeric.hpp implementations
// ---------------------------------------------------------------------------

double sgn(double a) {
  if (std::isnan(a)) throw std::domain_error("sgn: NaN input");
  return a < 0.0 ? -1.0 : 1.0;
}

double safe_log(double x) {
  if (x < 0.0) throw std::domain_error("safe_log: negative input");
  return x == 0.0 ? kNegInf : std::log(x);
}

double log_sum_exp(std::span<const double> a) {
  double m = kNegInf;
  for (double v : a) {
    if (v == kPosInf) return kPosInf;
    m = std::max(m, v);
  }
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double v : a) s += std::exp(v - m);
  return m + std::log(s);
}

double vec_max(std::span<const double> a) {
  double m = kNegInf;
  for (double v : a) m = std::max(m, v);
  return m;
}

double vec_min(std::span<const double> a) {
  double m = kPosInf;
  for (double v : a) m = std::min(m, v);
  return m;
}

void softmax_inplace(std::vector<double>& logw) {
  const double lz = log_sum_exp(logw);
  for (double& v : logw) v = std::exp(v - lz);
}

std::vector<double> project_to_simplex(std::span<const double> v) {
  // Sort-based Euclidean projection onto {w : w_i >= 0, sum w_i = 1}.
  const std::size_t n = v.size();
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    css += u[i];
    const double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max(0.0, v[i] - theta);
  return out;
}

std::uint64_t Rng::next_u64() {
  // SplitMix64 step.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
  double u = uniform();
  while (u == 0.0) u = uniform();
  return u;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 6.283185307179586476925286766559 * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

std::vector<double> Rng::dirichlet(std::size_t k) {
  // For unit concentration, normalized exponentials are exact.
  std::vector<double> w(k);
  double s = 0.0;
  for (double& v : w) {
    v = -std::log(uniform_pos());
    s += v;
  }
  for (double& v : w) v /= s;
  return w;
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

Alphabet default_alphabet(const std::string& prefix, std::size_t k) {
  if (k < 1) throw std::invalid_argument("alphabet: size must be >= 1");
  Alphabet a;
  a.labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) a.labels.push_back(prefix + std::to_string(i));
  return a;
}

namespace {

void check_alphabet(const Alphabet& a) {
  if (a.size() < 1) throw std::invalid_argument("alphabet: size must be >= 1");
  std::unordered_set<std::string> seen;
  for (const auto& s : a.labels) {
    if (!seen.insert(s).second) {
      throw std::invalid_argument("alphabet: duplicate label '" + s + "'");
    }
  }
}

void normalize_mass(std::vector<double>& w, const char* what) {
  double s = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument(std::string(what) + ": negative or NaN weight");
    }
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + ": total mass " +
                                std::to_string(s) + " is not 1 within 1e-9");
  }
  for (double& v : w) v /= s;
}

}  // namespace

Pmf make_pmf(Alphabet a, std::vector<double> w) {
  check_alphabet(a);
  if (a.size() != w.size()) throw std::invalid_argument("pmf: label/weight size mismatch");
  normalize_mass(w, "pmf");
  return Pmf{std::move(a), std::move(w)};
}

Pmf make_pmf(std::vector<double> w) {
  const std::size_t k = w.size();  // read before the move is sequenced
  return make_pmf(default_alphabet("x", k), std::move(w));
}

Pmf uniform_pmf(std::size_t k) {
  return make_pmf(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Joint2 make_joint2(Alphabet ax, Alphabet ag, std::vector<double> w) {
  check_alphabet(ax);
  check_alphabet(ag);
  if (w.size() != ax.size() * ag.size()) {
    throw std::invalid_argument("joint2: weight tensor shape mismatch");
  }
  normalize_mass(w, "joint2");
  return Joint2{std::move(ax), std::move(ag), std::move(w)};
}

Joint2 make_joint2(std::size_t nx, std::size_t ng, std::vector<double> w) {
  return make_joint2(default_alphabet("x", nx), default_alphabet("g", ng),
                     std::move(w));
}

Joint3 make_joint3(Alphabet ax, Alphabet ag, Alphabet ay, std::vector<double> w) {
  check_alphabet(ax);
  check_alphabet(ag);
  check_alphabet(ay);
  if (w.size() != ax.size() * ag.size() * ay.size()) {
    throw std::invalid_argument("joint3: weight tensor shape mismatch");
  }
  normalize_mass(w, "joint3");
  return Joint3{std::move(ax), std::move(ag), std::move(ay), std::move(w)};
}

Joint3 make_joint3(std::size_t nx, std::size_t ng, std::size_t ny,
                   std::vector<double> w) {
  return make_joint3(default_alphabet("x", nx), default_alphabet("g", ng),
                     default_alphabet("y", ny), std::move(w));
}

Pmf CondTable::column(std::size_t c) const {
  std::vector<double> w(nrows());
  for (std::size_t r = 0; r < nrows(); ++r) w[r] = at(r, c);
  return make_pmf(rows, std::move(w));
}

CondTable make_cond_table(Alphabet rows, Alphabet cols, std::vector<double> w) {
  check_alphabet(rows);
  check_alphabet(cols);
  const std::size_t nr = rows.size(), nc = cols.size();
  if (w.size() != nr * nc) {
    throw std::invalid_argument("cond_table: shape mismatch");
  }
  for (std::size_t c = 0; c < nc; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < nr; ++r) {
      const double v = w[r * nc + c];
      if (!(v >= 0.0)) throw std::invalid_argument("cond_table: negative weight");
      s += v;
    }
    if (std::abs(s - 1.0) > 1e-9) {
      throw std::invalid_argument("cond_table: column " + std::to_string(c) +
                                  " mass is not 1 within 1e-9");
    }
    for (std::size_t r = 0; r < nr; ++r) w[r * nc + c] /= s;
  }
  return CondTable{std::move(rows), std::move(cols), std::move(w), {}};
}

CondTable make_cond_table(std::size_t nrows, std::size_t ncols,
                          std::vector<double> w) {
  return make_cond_table(default_alphabet("r", nrows),
                         default_alphabet("c", ncols), std::move(w));
}

CondTable3 make_cond_table3(std::size_t nx, std::size_t ng, std::size_t ny,
                            std::vector<double> w) {
  if (w.size() != nx * ng * ny || nx < 1 || ng < 1 || ny < 1) {
    throw std::invalid_argument("cond_table3: shape mismatch");
  }
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t y = 0; y < ny; ++y) {
      double s = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        const double v = w[(x * ng + g) * ny + y];
        if (!(v >= 0.0)) throw std::invalid_argument("cond_table3: negative weight");
        s += v;
      }
      if (std::abs(s - 1.0) > 1e-9) {
        throw std::invalid_argument("cond_table3: a column mass is not 1 within 1e-9");
      }
      for (std::size_t x = 0; x < nx; ++x) w[(x * ng + g) * ny + y] /= s;
    }
  }
  CondTable3 t;
  t.rows = default_alphabet("x", nx);
  t.g = default_alphabet("g", ng);
  t.y = default_alphabet("y", ny);
  t.w = std::move(w);
  return t;
}

OddsTable make_odds(std::vector<double> values) {
  const std::size_t n = values.size();  // read before the move is sequenced
  return make_odds(n, 1, std::move(values));
}

OddsTable make_odds(std::size_t nx, std::size_t ny, std::vector<double> values) {
  if (values.empty() || values.size() != nx * ny) {
    throw std::invalid_argument("odds: shape mismatch");
  }
  const double s = sgn(values.front());
  OddsTable o;
  o.sign = s;
  o.nx = nx;
  o.ny = ny;
  o.mag.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (v == 0.0 || std::isnan(v)) {
      throw std::invalid_argument("odds: entries must be nonzero");
    }
    if (sgn(v) != s) {
      throw std::invalid_argument("odds: entries must share one sign");
    }
    o.mag[i] = std::abs(v);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Deformed-logarithm algebra
// ---------------------------------------------------------------------------

double ln_r(double x, double r) {
  if (!(x > 0.0)) throw std::domain_error("ln_r: requires x > 0");
  if (std::abs(r - 1.0) < kOrderBranchTol) return std::log(x);
  return std::expm1((1.0 - r) * std::log(x)) / (1.0 - r);
}

double exp_q(double x, double q) {
  if (std::abs(q - 1.0) < kOrderBranchTol) return std::exp(x);
  const double base = 1.0 + (1.0 - q) * x;
  if (base < 0.0) throw std::domain_error("exp_q: outside domain");
  return std::pow(base, 1.0 / (1.0 - q));
}

double eta_r(double x, double r) {
  if (std::abs(r - 1.0) < kOrderBranchTol) return x;
  if (x == kPosInf) return (1.0 - r) > 0 ? kPosInf : 1.0 / (r - 1.0);
  if (x == kNegInf) return (1.0 - r) > 0 ? -1.0 / (1.0 - r) : kPosInf;
  return std::expm1((1.0 - r) * x) / (1.0 - r);
}

double eta_r_inv(double y, double r) {
  if (std::abs(r - 1.0) < kOrderBranchTol) return y;
  const double base = 1.0 + (1.0 - r) * y;
  if (!(base > 0.0)) throw std::domain_error("eta_r_inv: outside range");
  return std::log(base) / (1.0 - r);
}

double pseudo_add(double x, double y, double r) {
  return x + y + (1.0 - r) * x * y;
}

double pseudo_sub(double x, double y, double r) {
  const double den = 1.0 + (1.0 - r) * y;
  if (den == 0.0) {
    throw degenerate_order_error("pseudo_sub: denominator 1+(1-r)y vanishes");
  }
  return (x - y) / den;
}

std::vector<double> escort_weights(std::span<const double> w, double s) {
  std::vector<double> out(w.size(), 0.0);
  if (s < 0.0) {
    for (double v : w) {
      if (v <= 0.0) {
        throw std::domain_error("escort: negative exponent requires full support");
      }
    }
  }
  // Work in logs for robustness on skewed inputs.
  std::vector<double> lw;
  lw.reserve(w.size());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) {
      lw.push_back(s * std::log(w[i]));
      idx.push_back(i);
    }
  }
  if (idx.empty()) throw std::domain_error("escort: empty support");
  const double lz = log_sum_exp(lw);
  for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = std::exp(lw[k] - lz);
  return out;
}

Pmf escort(const Pmf& p, double s) {
  return Pmf{p.alphabet, escort_weights(p.w, s)};
}

// ---------------------------------------------------------------------------
// Table plumbing
// ---------------------------------------------------------------------------

Pmf marginalize(const Joint2& j, std::size_t keep_axis) {
  if (keep_axis > 1) throw std::invalid_argument("marginalize: axis out of range");
  const std::size_t n = keep_axis == 0 ? j.nx() : j.ng();
  std::vector<double> w(n, 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t g = 0; g < j.ng(); ++g) {
      w[keep_axis == 0 ? x : g] += j.at(x, g);
    }
  }
  return Pmf{keep_axis == 0 ? j.ax : j.ag, std::move(w)};
}

Joint2 marginalize(const Joint3& j, std::size_t drop_axis) {
  if (drop_axis > 2) throw std::invalid_argument("marginalize: axis out of range");
  Alphabet a = drop_axis == 0 ? j.ag : j.ax;
  Alphabet b = drop_axis == 2 ? j.ag : j.ay;
  const std::size_t na = a.size(), nb = b.size();
  std::vector<double> w(na * nb, 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t g = 0; g < j.ng(); ++g) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        std::size_t i, k;
        if (drop_axis == 0) {
          i = g;
          k = y;
        } else if (drop_axis == 1) {
          i = x;
          k = y;
        } else {
          i = x;
          k = g;
        }
        w[i * nb + k] += j.at(x, g, y);
      }
    }
  }
  return Joint2{std::move(a), std::move(b), std::move(w)};
}

CondTable condition(const Joint2& j, std::size_t target_axis) {
  if (target_axis > 1) throw std::invalid_argument("condition: axis out of range");
  const Pmf cond_marg = marginalize(j, 1 - target_axis);
  const std::size_t nr = target_axis == 0 ? j.nx() : j.ng();
  const std::size_t nc = cond_marg.size();
  CondTable t;
  t.rows = target_axis == 0 ? j.ax : j.ag;
  t.cols = cond_marg.alphabet;
  t.w.assign(nr * nc, 0.0);
  t.undefined_col.assign(nc, false);
  for (std::size_t c = 0; c < nc; ++c) {
    const double m = cond_marg.w[c];
    if (m <= 0.0) {
      t.undefined_col[c] = true;
      continue;
    }
    for (std::size_t r = 0; r < nr; ++r) {
      const double jw = target_axis == 0 ? j.at(r, c) : j.at(c, r);
      t.w[r * nc + c] = jw / m;
    }
  }
  if (std::none_of(t.undefined_col.begin(), t.undefined_col.end(),
                   [](bool b) { return b; })) {
    t.undefined_col.clear();
  }
  return t;
}

CondTable3 condition_x_given_gy(const Joint3& j) {
  CondTable3 t;
  t.rows = j.ax;
  t.g = j.ag;
  t.y = j.ay;
  t.w.assign(j.w.size(), 0.0);
  for (std::size_t g = 0; g < j.ng(); ++g) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      double m = 0.0;
      for (std::size_t x = 0; x < j.nx(); ++x) m += j.at(x, g, y);
      if (m <= 0.0) continue;  // column stays zero: zero-mass conditioning cell
      for (std::size_t x = 0; x < j.nx(); ++x) t.at(x, g, y) = j.at(x, g, y) / m;
    }
  }
  return t;
}

CondTable condition_y_given_g(const Joint3& j) {
  const Joint2 jgy = marginalize(j, 0);  // (G, Y)
  return condition(jgy, 1);              // rows = Y, cols = G
}

Joint2 compose(const CondTable& c, const Pmf& p) {
  if (c.ncols() != p.size()) {
    throw std::invalid_argument("compose: conditioning size mismatch");
  }
  Joint2 j;
  j.ax = c.rows;
  j.ag = c.cols;
  j.w.assign(c.nrows() * c.ncols(), 0.0);
  for (std::size_t r = 0; r < c.nrows(); ++r) {
    for (std::size_t cc = 0; cc < c.ncols(); ++cc) {
      j.at(r, cc) = (c.col_defined(cc) ? c.at(r, cc) : 0.0) * p.w[cc];
    }
  }
  return j;
}

}  // namespace betinfo
