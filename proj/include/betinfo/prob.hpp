#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "betinfo/numeric.hpp"

/// Finite-alphabet probability objects (PMFs, joints, conditional tables,
/// odds tables), extended-real orders, and the deformed-logarithm algebra
/// (r-logarithm, q-exponential, eta map, pseudo-addition/subtraction,
/// escort transforms) that the entropy and betting layers are built on.
namespace betinfo {

/// Raised when a deformed-order computation hits the pole of the
/// pseudo-subtraction parametrization (1 + (1-r)y = 0); callers that surface
/// structured reports catch it separately from plain domain errors.
class degenerate_order_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Ordered list of distinct symbol names.
struct Alphabet {
  std::vector<std::string> labels;
  std::size_t size() const { return labels.size(); }
  bool operator==(const Alphabet&) const = default;
};

/// Alphabet with labels "<prefix>0".."<prefix>{k-1}".
Alphabet default_alphabet(const std::string& prefix, std::size_t k);

/// Probability mass function over an alphabet. Construct via make_pmf, which
/// validates nonnegativity and renormalizes when |sum - 1| <= 1e-9.
struct Pmf {
  Alphabet alphabet;
  std::vector<double> w;
  std::size_t size() const { return w.size(); }
};

Pmf make_pmf(Alphabet a, std::vector<double> w);
Pmf make_pmf(std::vector<double> w);  // default labels
Pmf uniform_pmf(std::size_t k);

/// Joint PMF over (X, G); weights row-major: w[x * ng + g].
struct Joint2 {
  Alphabet ax, ag;
  std::vector<double> w;
  std::size_t nx() const { return ax.size(); }
  std::size_t ng() const { return ag.size(); }
  double at(std::size_t x, std::size_t g) const { return w[x * ng() + g]; }
  double& at(std::size_t x, std::size_t g) { return w[x * ng() + g]; }
};

Joint2 make_joint2(Alphabet ax, Alphabet ag, std::vector<double> w);
Joint2 make_joint2(std::size_t nx, std::size_t ng, std::vector<double> w);

/// Joint PMF over (X, G, Y); weights w[(x * ng + g) * ny + y].
struct Joint3 {
  Alphabet ax, ag, ay;
  std::vector<double> w;
  std::size_t nx() const { return ax.size(); }
  std::size_t ng() const { return ag.size(); }
  std::size_t ny() const { return ay.size(); }
  double at(std::size_t x, std::size_t g, std::size_t y) const {
    return w[(x * ng() + g) * ny() + y];
  }
  double& at(std::size_t x, std::size_t g, std::size_t y) {
    return w[(x * ng() + g) * ny() + y];
  }
};

Joint3 make_joint3(Alphabet ax, Alphabet ag, Alphabet ay, std::vector<double> w);
Joint3 make_joint3(std::size_t nx, std::size_t ng, std::size_t ny,
                   std::vector<double> w);

/// Column-stochastic conditional table p(row | col); w[row * ncols + col].
/// Columns flagged `undefined` (zero conditioning mass upstream) are allowed
/// only through condition(); make_cond_table requires every column to be a PMF.
struct CondTable {
  Alphabet rows, cols;
  std::vector<double> w;
  std::vector<bool> undefined_col;  // empty means "all defined"
  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return cols.size(); }
  double at(std::size_t r, std::size_t c) const { return w[r * ncols() + c]; }
  double& at(std::size_t r, std::size_t c) { return w[r * ncols() + c]; }
  bool col_defined(std::size_t c) const {
    return undefined_col.empty() || !undefined_col[c];
  }
  Pmf column(std::size_t c) const;
};

CondTable make_cond_table(Alphabet rows, Alphabet cols, std::vector<double> w);
CondTable make_cond_table(std::size_t nrows, std::size_t ncols,
                          std::vector<double> w);

/// Conditional table p(x | g, y); w[(x * ng + g) * ny + y], column-stochastic
/// over x for every (g, y).
struct CondTable3 {
  Alphabet rows, g, y;
  std::vector<double> w;
  std::size_t nx() const { return rows.size(); }
  std::size_t ng() const { return g.size(); }
  std::size_t ny() const { return y.size(); }
  double at(std::size_t x, std::size_t gg, std::size_t yy) const {
    return w[(x * ng() + gg) * ny() + yy];
  }
  double& at(std::size_t x, std::size_t gg, std::size_t yy) {
    return w[(x * ng() + gg) * ny() + yy];
  }
};

CondTable3 make_cond_table3(std::size_t nx, std::size_t ng, std::size_t ny,
                            std::vector<double> w);

/// Payout table o(x) or o(x|y): nonzero reals sharing one sign. Stored as
/// magnitudes plus the scalar sign; ny == 1 encodes unconditional odds.
struct OddsTable {
  std::vector<double> mag;  // |o|, strictly positive; mag[x * ny + y]
  double sign = 1.0;        // +1 or -1
  std::size_t nx = 0, ny = 1;
  double at(std::size_t x, std::size_t y = 0) const {
    return mag[x * ny + y];
  }
};

OddsTable make_odds(std::vector<double> values);  // 1-D, infers shared sign
OddsTable make_odds(std::size_t nx, std::size_t ny, std::vector<double> values);

// ---------------------------------------------------------------------------
// Deformed-logarithm algebra
// ---------------------------------------------------------------------------

/// Orders within this distance of a removable special point (r = 1, q = 1,
/// alpha in {0, 1}) dispatch to the closed limit branch.
inline constexpr double kOrderBranchTol = 1e-10;

/// r-logarithm: ln x at r = 1, else (x^{1-r} - 1)/(1-r). Requires x > 0.
double ln_r(double x, double r);

/// q-exponential, the inverse of ln_q: e^x at q = 1, else
/// (1 + (1-q)x)^{1/(1-q)}; requires 1 + (1-q)x >= 0.
double exp_q(double x, double q);

/// eta map: x at r = 1, else (e^{(1-r)x} - 1)/(1-r). Satisfies
/// eta_r(ln x) = ln_r(x), which is how ln_r of an exponentially large or
/// tiny argument is evaluated stably from its logarithm.
double eta_r(double x, double r);

/// Inverse of eta_r; requires 1 + (1-r)y > 0 when r != 1.
double eta_r_inv(double y, double r);

/// x (+)_r y = x + y + (1-r)xy.
double pseudo_add(double x, double y, double r);

/// x (-)_r y = (x - y) / (1 + (1-r)y); throws degenerate_order_error when the
/// denominator vanishes.
double pseudo_sub(double x, double y, double r);

/// Escort transform: p(x)^s renormalized over the support of p. s = 1 is the
/// identity; s < 0 requires full support.
Pmf escort(const Pmf& p, double s);

/// Escort transform of raw weights (need not be normalized on input).
std::vector<double> escort_weights(std::span<const double> w, double s);

// ---------------------------------------------------------------------------
// Table plumbing
// ---------------------------------------------------------------------------

/// p(x) from a Joint2 over (X, G): axis 0 keeps X, axis 1 keeps G.
Pmf marginalize(const Joint2& j, std::size_t keep_axis);

/// Marginalize one axis away from a Joint3 (0 = X, 1 = G, 2 = Y), returning
/// the joint over the remaining two axes in their original order.
Joint2 marginalize(const Joint3& j, std::size_t drop_axis);

/// Conditional table of axis `target` given the other axis of a Joint2.
/// Columns with zero conditioning mass are flagged undefined.
CondTable condition(const Joint2& j, std::size_t target_axis);

/// p(x | g, y) from a Joint3.
CondTable3 condition_x_given_gy(const Joint3& j);

/// p(y | g) from a Joint3.
CondTable condition_y_given_g(const Joint3& j);

/// Chain-rule composition: joint(row, col) = c(row|col) * p(col).
Joint2 compose(const CondTable& c, const Pmf& p);

}  // namespace betinfo
