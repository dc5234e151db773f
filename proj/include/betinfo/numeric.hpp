#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

/// Low-level numeric helpers shared by every module: stable log-sum-exp,
/// guarded logarithms, simplex utilities, and a deterministic RNG whose
/// output does not depend on the standard library's distribution
/// implementations.
namespace betinfo {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

/// Sign convention used throughout: +1 for a >= 0 (including 0), -1 for a < 0.
double sgn(double a);

/// log(x) extended with log(0) = -inf; throws std::domain_error for x < 0.
double safe_log(double x);

/// Numerically stable log(sum(exp(a_i))). Empty input or all -inf gives -inf;
/// any +inf entry gives +inf.
double log_sum_exp(std::span<const double> a);

/// max / min over entries (empty input: -inf / +inf).
double vec_max(std::span<const double> a);
double vec_min(std::span<const double> a);

/// In-place x_i <- exp(x_i - log_sum_exp(x)); turns log-weights into a PMF.
void softmax_inplace(std::vector<double>& logw);

/// Euclidean projection of an arbitrary vector onto the probability simplex.
std::vector<double> project_to_simplex(std::span<const double> v);

/// Deterministic 64-bit generator (SplitMix64). Identical seeds produce
/// identical streams on every platform, independent of <random> internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform double in (0, 1]; never returns 0 (safe for log()).
  double uniform_pos();
  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Flat Dirichlet draw (all concentration parameters equal to 1) on the
  /// k-simplex, generated from exponential spacings.
  std::vector<double> dirichlet(std::size_t k);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace betinfo
