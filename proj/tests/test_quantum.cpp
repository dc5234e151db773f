#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "betinfo/entropies.hpp"
#include "betinfo/prob.hpp"
#include "betinfo/quantum.hpp"

using namespace betinfo;

namespace {

Cmat ket_density(std::size_t d, std::size_t k) {
  Cmat m = Cmat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
  return m;
}

QuantumEnsemble basis_ensemble() {
  return make_ensemble({make_density(ket_density(2, 0)),
                        make_density(ket_density(2, 1))},
                       make_pmf({0.5, 0.5}));
}

}  // namespace

TEST_CASE("state and measurement validation") {
  Cmat bad = Cmat::Zero(2, 2);
  bad(0, 0) = 2.0;  // trace 2
  CHECK_THROWS_AS(make_density(bad), std::invalid_argument);

  Cmat neg = Cmat::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;  // negative eigenvalue, trace 1
  CHECK_THROWS_AS(make_density(neg), std::invalid_argument);

  // Dimensions above three are rejected.
  CHECK_THROWS_AS(make_density(Cmat::Identity(4, 4) * 0.25),
                  std::invalid_argument);

  // Effects must resolve the identity.
  CHECK_THROWS_AS(make_povm({ket_density(2, 0)}), std::invalid_argument);
  CHECK_NOTHROW(make_povm({ket_density(2, 0), ket_density(2, 1)}));

  // Kraus maps must preserve trace.
  CHECK_THROWS_AS(make_channel({Cmat::Identity(2, 2) * 0.5}),
                  std::invalid_argument);
  CHECK_NOTHROW(make_channel({Cmat::Identity(2, 2)}));
}

TEST_CASE("computational measurement on basis states is noiseless") {
  const CondTable c =
      induced_conditional(basis_ensemble(), computational_povm(2), nullptr);
  CHECK(c.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.at(1, 0) == doctest::Approx(0.0));
  CHECK(c.at(0, 1) == doctest::Approx(0.0));
  CHECK(c.at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("uninformative measurements are detected and inert") {
  const Pmf qg = make_pmf({0.3, 0.7});
  const Povm m = uninformative_povm(qg, 2);
  CHECK(is_uninformative(m));
  CHECK_FALSE(is_uninformative(computational_povm(2)));
  // Outcome distribution is qg regardless of the state.
  const CondTable c = induced_conditional(basis_ensemble(), m, nullptr);
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(c.at(0, x) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(c.at(1, x) == doctest::Approx(0.7).epsilon(1e-12));
  }
}

TEST_CASE("constant channels are detected") {
  const DensityMatrix sigma = make_density(ket_density(2, 0));
  CHECK(is_constant(replace_mixture_channel(1.0, sigma)));
  CHECK_FALSE(is_constant(identity_channel(2)));
  CHECK(is_constant(depolarizing_channel(2, 1.0)));
  CHECK_FALSE(is_constant(depolarizing_channel(2, 0.5)));
  CHECK_FALSE(is_constant(amplitude_damping(0.3)));
  CHECK(is_constant(amplitude_damping(1.0)));
}

TEST_CASE("amplitude damping endpoints") {
  const DensityMatrix one = make_density(ket_density(2, 1));
  const DensityMatrix kept = apply_channel(amplitude_damping(0.0), one);
  CHECK(std::abs(kept.m(1, 1) - 1.0) <= 1e-12);
  const DensityMatrix decayed = apply_channel(amplitude_damping(1.0), one);
  CHECK(std::abs(decayed.m(0, 0) - 1.0) <= 1e-12);
}

TEST_CASE("state-betting identity for the noiseless game") {
  const QsbReport rep =
      qsb_identity(basis_ensemble(), computational_povm(2), {1.0, 1.0}, 1.0);
  CHECK(rep.agree);
  // Perfectly distinguishable states: the information value is ln 2.
  CHECK(rep.id_mi == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("uninformative measurement yields zero information value") {
  const QsbReport rep = qsb_identity(
      basis_ensemble(), uninformative_povm(make_pmf({0.3, 0.7}), 2),
      {2.0, 0.5}, 1.0);
  CHECK(rep.agree);
  CHECK(rep.id_mi == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("channel search endpoints for the damping family") {
  QuantumSearchConfig cfg;
  cfg.sphere_points = 32;
  cfg.random_povms = 8;
  cfg.seed = 5;
  // No damping: the computational measurement (always a candidate) attains
  // ln 2 exactly.
  const NqsbReport clean = nqsb_identity_search(
      basis_ensemble(), identity_channel(2), {1.0, 1.0}, 1.0, cfg);
  CHECK(clean.search_lower_bound);
  CHECK(clean.id_mi == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  // Full damping sends both states to the same point: nothing to win.
  const NqsbReport dead = nqsb_identity_search(
      basis_ensemble(), amplitude_damping(1.0), {1.0, 1.0}, 1.0, cfg);
  CHECK(std::abs(dead.id_mi) <= 1e-9);
}

TEST_CASE("fixed-measurement channel identity") {
  const NqsbReport rep =
      nqsb_identity(basis_ensemble(), computational_povm(2),
                    amplitude_damping(0.25), {1.0, 1.0}, 1.0);
  CHECK(rep.agree);
  CHECK_FALSE(rep.search_lower_bound);
  CHECK(rep.id_mi > 0.0);
  CHECK(rep.id_mi < std::log(2.0));
}
