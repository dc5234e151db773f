#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "betinfo/divergences.hpp"
#include "betinfo/prob.hpp"

using namespace betinfo;

namespace {
// Column-constant tables: the conditioned value carries no information, so
// every conditional divergence collapses to the plain divergence of a column.
const CondTable kP = make_cond_table(2, 2, {0.3, 0.3, 0.7, 0.7});
const CondTable kQ = make_cond_table(2, 2, {0.6, 0.6, 0.4, 0.4});
const Pmf kHalf = make_pmf({0.5, 0.5});
}  // namespace

TEST_CASE("Renyi divergence closed values") {
  const Pmf p = make_pmf({0.5, 0.5});
  const Pmf q = make_pmf({0.25, 0.75});
  // Order 2: ln sum p^2/q = ln(4/3).
  CHECK(renyi_divergence(p, q, 2.0) ==
        doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
  CHECK(renyi_divergence(p, p, 2.0) == doctest::Approx(0.0));
  // Order 1 is Kullback-Leibler.
  const double kl = 0.5 * std::log(0.5 / 0.25) + 0.5 * std::log(0.5 / 0.75);
  CHECK(renyi_divergence(p, q, 1.0) == doctest::Approx(kl).epsilon(1e-12));
  // Nonnegative at orders > 0.
  for (double a : {0.3, 0.7, 2.0, 5.0}) {
    CHECK(renyi_divergence(p, q, a) >= -1e-12);
  }
}

TEST_CASE("conditional divergences collapse when columns are constant") {
  const Pmf pcol = make_pmf({0.3, 0.7});
  const Pmf qcol = make_pmf({0.6, 0.4});
  for (double a : {-2.0, 0.3, 0.7, 2.0, 5.0}) {
    const double d = renyi_divergence(pcol, qcol, a);
    CHECK(sibson_crd(kP, kQ, kHalf, a) == doctest::Approx(d).epsilon(1e-12));
    CHECK(csiszar_crd(kP, kQ, kHalf, a) == doctest::Approx(d).epsilon(1e-12));
    CHECK(blp_crd(kP, kQ, kHalf, a) == doctest::Approx(d).epsilon(1e-12));
    CHECK(n1_crd(kP, kQ, kHalf, a) == doctest::Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("three-variable form collapses to two-variable forms") {
  // |Y| = 1 reduces the three-variable divergence to the two-variable one
  // with aggregation over G.
  const CondTable3 p3 = make_cond_table3(2, 2, 1, {0.3, 0.3, 0.7, 0.7});
  const CondTable3 q3 = make_cond_table3(2, 2, 1, {0.6, 0.6, 0.4, 0.4});
  const CondTable pyg = make_cond_table(1, 2, {1.0, 1.0});
  const Pmf pg = make_pmf({0.5, 0.5});
  for (double a : {0.3, 2.0}) {
    CHECK(n2_crd(p3, q3, pg, pyg, a) ==
          doctest::Approx(blp_crd(kP, kQ, kHalf, a)).epsilon(1e-12));
  }
}

TEST_CASE("ordering between the two new conditional divergences") {
  const CondTable pc = make_cond_table(2, 2, {0.0, 1.0, 1.0, 0.0});
  const CondTable qc = make_cond_table(2, 2, {0.25, 0.75, 0.75, 0.25});
  for (double a : {0.3, 0.7, 2.0}) {
    const InequalityReport rep = check_n1_le_blp(pc, qc, kHalf, a);
    CHECK(rep.holds);
  }
}

TEST_CASE("marginal data-processing comparison can fail") {
  // Mixing the permutation columns of pc gives the same marginal as mixing
  // the symmetric qc columns, so the processed divergence is zero while the
  // conditional divergence is negative at order 1/2.
  const CondTable pc = make_cond_table(2, 2, {0.0, 1.0, 1.0, 0.0});
  const CondTable qc = make_cond_table(2, 2, {0.25, 0.75, 0.75, 0.25});
  const InequalityReport rep = check_dpi_n1(pc, qc, kHalf, 0.5);
  CHECK(rep.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-9));
  CHECK_FALSE(rep.holds);
}

TEST_CASE("epsilon limits agree with closed forms at order one") {
  const Pmf pcol = make_pmf({0.3, 0.7});
  const Pmf qcol = make_pmf({0.6, 0.4});
  const double kl = 0.3 * std::log(0.3 / 0.6) + 0.7 * std::log(0.7 / 0.4);
  CHECK(renyi_divergence(pcol, qcol, 1.0) == doctest::Approx(kl).epsilon(1e-12));
  CHECK(n1_crd_eps_limit(kP, kQ, kHalf, 1e-6) ==
        doctest::Approx(kl).epsilon(1e-5));
}

TEST_CASE("divergence-to-entropy identities against a uniform reference") {
  const Joint2 j = make_joint2(2, 3, {0.1, 0.2, 0.05, 0.3, 0.15, 0.2});
  for (double a : {0.4, 2.0, -1.5}) {
    const CrdIdentityReport rep = crd_entropy_identities(j, a);
    CHECK(rep.pass);
    CHECK(std::abs(rep.sibson_residual) <= 1e-10);
    CHECK(std::abs(rep.csiszar_residual) <= 1e-10);
    CHECK(std::abs(rep.blp_residual) <= 1e-10);
    CHECK(std::abs(rep.renyi_residual) <= 1e-10);
  }
}
