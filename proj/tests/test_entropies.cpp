#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "betinfo/entropies.hpp"
#include "betinfo/prob.hpp"

using namespace betinfo;

namespace {
const Pmf kQuarter = make_pmf({0.25, 0.75});
}

TEST_CASE("Renyi entropy closed values") {
  // Order 2 on (1/4, 3/4): -ln(1/16 + 9/16) = ln(8/5).
  CHECK(renyi_entropy(kQuarter, 2.0) ==
        doctest::Approx(std::log(8.0 / 5.0)).epsilon(1e-14));
  // Order 1 is Shannon.
  CHECK(renyi_entropy(kQuarter, 1.0) ==
        doctest::Approx(shannon_entropy(kQuarter)).epsilon(1e-14));
  // Uniform distribution has entropy ln k at every positive order.
  const Pmf u = uniform_pmf(4);
  for (double q : {0.3, 1.0, 2.0, 10.0}) {
    CHECK(renyi_entropy(u, q) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  }
}

TEST_CASE("aggregated probability values") {
  // Order-2 aggregate of (1/4, 3/4) is the collision probability 5/8.
  CHECK(renyi_probability(kQuarter, 2.0) ==
        doctest::Approx(0.625).epsilon(1e-14));
  // Order 1/2: (sum sqrt(p))^{-2}.
  const double root = std::sqrt(0.25) + std::sqrt(0.75);
  CHECK(renyi_probability(kQuarter, 0.5) ==
        doctest::Approx(1.0 / (root * root)).epsilon(1e-12));
  // Negative order: (sum 1/p)^{-1/2} for order -1.
  CHECK(renyi_probability(kQuarter, -1.0) ==
        doctest::Approx(std::sqrt(3.0 / 16.0)).epsilon(1e-12));
}

TEST_CASE("Tsallis and Sharma-Mittal specializations") {
  CHECK(tsallis_entropy(kQuarter, 2.0) == doctest::Approx(0.375).epsilon(1e-14));
  // r = q recovers Tsallis.
  CHECK(sharma_mittal_entropy(kQuarter, {2.0, 2.0}) ==
        doctest::Approx(tsallis_entropy(kQuarter, 2.0)).epsilon(1e-12));
  // r = 1 recovers Renyi.
  CHECK(sharma_mittal_entropy(kQuarter, {2.0, 1.0}) ==
        doctest::Approx(renyi_entropy(kQuarter, 2.0)).epsilon(1e-12));
  // Uniform-4 at (q, r) = (2, 1/2): expm1(ln(4)/2) / (1/2) = 2.
  CHECK(sharma_mittal_entropy(uniform_pmf(4), {2.0, 0.5}) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // q = r = 1 is Shannon.
  CHECK(sharma_mittal_entropy(kQuarter, {1.0, 1.0}) ==
        doctest::Approx(shannon_entropy(kQuarter)).epsilon(1e-12));
}

TEST_CASE("conditional entropies on an independent joint") {
  // X independent of G: every conditional form equals the marginal entropy.
  const Joint2 j = make_joint2(2, 2, {0.125, 0.125, 0.375, 0.375});
  const double href = renyi_entropy(kQuarter, 2.0);
  CHECK(arimoto_cond_entropy(j, 2.0) == doctest::Approx(href).epsilon(1e-12));
  CHECK(cond_entropy_h1(j, 2.0) == doctest::Approx(href).epsilon(1e-12));
  CHECK(cond_entropy_h2(j, 2.0) == doctest::Approx(href).epsilon(1e-12));
  CHECK(cond_entropy_h4(j, 2.0) == doctest::Approx(href).epsilon(1e-12));
  CHECK(id_cond_entropy(j, {2.0, 0.7}) ==
        doctest::Approx(sharma_mittal_entropy(kQuarter, {2.0, 0.7}))
            .epsilon(1e-12));
  CHECK(id_mutual_information(j, {2.0, 0.7}) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("two-parameter conditional entropy matches Arimoto at r = 1") {
  const Joint2 j = make_joint2(2, 3, {0.1, 0.2, 0.05, 0.3, 0.15, 0.2});
  for (double q : {0.4, 2.0, 5.0}) {
    CHECK(id_cond_entropy(j, {q, 1.0}) ==
          doctest::Approx(arimoto_cond_entropy(j, q)).epsilon(1e-12));
  }
}

TEST_CASE("chain rule report") {
  const Joint2 u22 = make_joint2(2, 2, {0.25, 0.25, 0.25, 0.25});
  // Positive orders hold with equality or slack.
  CHECK(check_chain_rule(u22, {2.0, 1.0}).holds);
  CHECK(check_chain_rule(u22, {0.5, 0.8}).holds);
  // Negative order fails on the uniform 2x2 joint: lhs ln 2 vs rhs ln 8.
  const ChainRuleReport neg = check_chain_rule(u22, {-1.0, 1.0});
  CHECK(neg.lhs == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(neg.rhs == doctest::Approx(std::log(8.0)).epsilon(1e-10));
  CHECK_FALSE(neg.holds);
}
