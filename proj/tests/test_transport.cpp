#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cskew/transport.hpp"

using namespace cskew;

TEST_CASE("trivial assignment") {
  CostMatrix m{1, {3.5}};
  CHECK(assignment_cost(m) == 3.5);
  CostMatrix m2{2, {1, 0, 0, 1}};
  std::vector<std::size_t> match;
  CHECK(assignment_cost(m2, &match) == 0.0);
  CHECK(match == std::vector<std::size_t>{1, 0});
}

TEST_CASE("Hungarian agrees with exhaustive search") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 8;
    CostMatrix m{n, std::vector<double>(n * n)};
    for (auto& c : m.c) c = U(rng);
    std::vector<std::size_t> match;
    double h = assignment_cost(m, &match);
    CHECK(h == doctest::Approx(permutation_cost(m)).epsilon(1e-12));
    // the returned matching is a permutation achieving the cost
    std::vector<std::size_t> sorted = match;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    CHECK(sorted == id);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += m(i, match[i]);
    CHECK(sum == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("larger instances with a known optimum") {
  // c(i,j) = |x_i - y_j| on sorted points: the monotone matching is optimal
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (std::size_t n : {20u, 64u, 150u}) {
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = U(rng);
    for (auto& v : y) v = U(rng);
    CostMatrix m{n, std::vector<double>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.c[i * n + j] = std::abs(x[i] - y[j]);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double mono = 0.0;
    for (std::size_t i = 0; i < n; ++i) mono += std::abs(x[i] - y[i]);
    CHECK(assignment_cost(m) == doctest::Approx(mono).epsilon(1e-10));
  }
}
