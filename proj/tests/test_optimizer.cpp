#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "betinfo/optimizer.hpp"

using namespace betinfo;

TEST_CASE("concave quadratic over the simplex") {
  // Maximum of -||p - t||^2 over the simplex is attained at t itself.
  const std::vector<double> t = {0.2, 0.3, 0.5};
  auto f = [&t](const Pmf& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      s -= (p.w[i] - t[i]) * (p.w[i] - t[i]);
    }
    return s;
  };
  SimplexSearchConfig cfg;
  cfg.restarts = 12;
  const auto res = maximize_over_pmf(f, 3, cfg);
  CHECK(res.value == doctest::Approx(0.0).epsilon(1e-8));
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(res.argmax.w[i] == doctest::Approx(t[i]).epsilon(1e-3));
  }
}

TEST_CASE("linear objective lands on a vertex") {
  const std::vector<double> c = {1.0, 2.0, 5.0};
  auto f = [&c](const Pmf& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * p.w[i];
    return s;
  };
  const auto res = maximize_over_pmf(f, 3, {});
  CHECK(res.value == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(res.argmax.w[2] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("column-separable objective over conditional tables") {
  // Sum over columns of a per-column linear score; the optimum picks the
  // best row in each column independently.
  auto f = [](const CondTable& b) {
    return 3.0 * b.at(0, 0) + 1.0 * b.at(1, 0) + 2.0 * b.at(0, 1) +
           7.0 * b.at(1, 1);
  };
  const auto res = maximize_over_condtable(f, 2, 2, {});
  CHECK(res.value == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(res.argmax.at(0, 0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(res.argmax.at(1, 1) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("deterministic for a fixed seed") {
  auto f = [](const Pmf& p) {
    double s = 0.0;
    for (double w : p.w) s += std::sqrt(w);
    return s;
  };
  SimplexSearchConfig cfg;
  cfg.seed = 42;
  const auto a = maximize_over_pmf(f, 4, cfg);
  const auto b = maximize_over_pmf(f, 4, cfg);
  CHECK(a.value == b.value);
  for (std::size_t i = 0; i < 4; ++i) CHECK(a.argmax.w[i] == b.argmax.w[i]);
  // Concave benchmark: maximum of sum sqrt(p) is 2 at the uniform point.
  CHECK(a.value == doctest::Approx(2.0).epsilon(1e-6));
}
