#pragma once

#include <cstdint>
#include <functional>

#include "betinfo/prob.hpp"

/// Brute-force/numeric oracle for maximizing objectives over probability
/// simplexes and column-stochastic tables. Used to certify every closed-form
/// optimum independently of the formulas under test: simplex grid enumeration
/// provides global coverage, projected-gradient ascent from seeded Dirichlet
/// starts provides local refinement. Deterministic for a fixed seed.
namespace betinfo {

struct SimplexSearchConfig {
  std::size_t grid_resolution = 12;  // grid points per simplex edge (>= 2)
  std::size_t ascent_iters = 200;
  std::size_t restarts = 8;
  std::uint64_t seed = 1;
  double tol = 1e-10;
};

struct PmfSearchResult {
  Pmf argmax;
  double value;
};

/// Best of (a) enumeration of all resolution-N compositions (mixed with the
/// uniform PMF at weight 1e-9 so log-type objectives stay finite) and
/// (b) projected-gradient ascent with central finite-difference gradients
/// (step 1e-6) from `restarts` Dirichlet starts plus the best grid point.
/// Objective evaluations that throw or return NaN count as -inf.
PmfSearchResult maximize_over_pmf(
    const std::function<double(const Pmf&)>& objective, std::size_t k,
    const SimplexSearchConfig& cfg);

struct CondTableSearchResult {
  CondTable argmax;
  double value;
};

/// Column-wise coordinate-ascent sweeps (each column optimized by
/// maximize_over_pmf with the others held fixed) followed by a joint
/// projected-gradient polish across all columns. Exact in one sweep for
/// column-separable objectives; local refinement otherwise.
CondTableSearchResult maximize_over_condtable(
    const std::function<double(const CondTable&)>& objective,
    std::size_t nrows, std::size_t ncols, const SimplexSearchConfig& cfg);

}  // namespace betinfo
