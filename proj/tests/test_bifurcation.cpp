#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cskew/bifurcation.hpp"
#include "cskew/errors.hpp"
#include "cskew/measures.hpp"
#include "cskew/orbits.hpp"
#include "cskew/symbolic.hpp"

using namespace cskew;

namespace {
const FiberMap f0 = FiberMap::logistic(0.5);
BifFamily case_ii() { return make_family(f0, FiberMap::moebius(2, 1, 0), 2.0); }
BifFamily case_ia() { return make_family(f0, FiberMap::moebius(16, 1, 0), 2.0); }
BifFamily ref_shift() { return make_family(f0, FiberMap::moebius(2, 1, 0.4), 2.0); }
}  // namespace

TEST_CASE("exit cases and distinguished parameters") {
  auto ii = case_ii();
  CHECK(ii.exit_case == ExitCase::II);
  CHECK(ii.a_exit == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-10));
  CHECK(ii.t_h == doctest::Approx(-1.0));
  // f(c) = 2c/(1+c) at c = sqrt2 - 1 gives t_c = c - f(c) = -(sqrt2 - 1)^2
  CHECK(ii.t_c == doctest::Approx(-std::pow(std::sqrt(2.0) - 1, 2)).epsilon(1e-10));

  auto ia = make_family(f0, FiberMap::affine(1.2, 0.0), 2.0);
  CHECK(ia.exit_case == ExitCase::Ia);
  CHECK(ia.a_exit == 1.0);
  CHECK(ia.t_c == doctest::Approx(1.0 - 1.2));
  auto ib = make_family(f0, FiberMap::affine(0.8, 0.0), 2.0);
  CHECK(ib.exit_case == ExitCase::Ib);
  CHECK(ib.a_exit == 0.0);
  CHECK(ib.t_c == doctest::Approx(0.0));

  for (const auto& fam : {ii, ia, ib, case_ia(), ref_shift()}) {
    auto top = pair_at(fam, fam.t_c);
    CHECK(top.f1()(fam.a_exit) == doctest::Approx(fam.a_exit).epsilon(1e-12));
    CHECK(pair_at(fam, fam.t_h).f1()(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("jump constant and entropy bound") {
  CHECK(std::isinf(jump_constant(ref_shift(), 0.0)));
  auto eb = entropy_bound(ref_shift(), 0.0);
  CHECK(eb.p == 0.5);
  CHECK(eb.H == doctest::Approx(std::log(2.0)));
  auto ia = case_ia();
  CHECK(jump_constant(ia, ia.t_c) == doctest::Approx(0.5));
  auto e = entropy_bound(ia, ia.t_c - 0.1);
  CHECK(e.p == doctest::Approx(1.0 / 3));
  CHECK(e.H == doctest::Approx(std::log(3.0) - 2.0 / 3 * std::log(2.0)));
  CHECK(e.H < std::log(2.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("grid spans both ends") {
  auto fam = case_ii();
  auto g = parameter_grid(fam, 4);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == fam.t_h);
  CHECK(g.back() == fam.t_c);
}

TEST_CASE("scan endpoints and monotonicity") {
  for (const auto& fam : {case_ia(), case_ii()}) {
    auto rows = scan(fam, parameter_grid(fam, 10), 10);
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().count_n == 11);
    CHECK(rows.back().count_n == 1024);
    CHECK(rows.back().entropy_upper_n == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].count_n >= rows[i - 1].count_n);
    for (const auto& r : rows) {
      CHECK(r.H_p_t <= std::log(2.0) + 1e-15);
      CHECK(r.p_t > 0.0);
      CHECK(r.p_t <= 0.5);
    }
  }
}

TEST_CASE("languages grow with t") {
  auto fam = case_ii();
  auto g = parameter_grid(fam, 6);
  for (std::size_t i = 1; i < g.size(); ++i) {
    auto lo = pair_at(fam, g[i - 1]), hi = pair_at(fam, g[i]);
    for (const auto& w : list_admissible_up_to(lo, 10)) CHECK(is_forward_admissible(hi, w));
  }
}

TEST_CASE("full cylinder thresholds") {
  auto fam = case_ii();
  double prev = -INFINITY;
  for (int n = 1; n <= 8; ++n) {
    double t = full_cylinder_threshold(fam, n);
    CHECK(t >= prev);
    CHECK(t < fam.t_c);
    CHECK(count_admissible(pair_at(fam, t), n).count == (1ull << n));
    prev = t;
  }
}

TEST_CASE("saddle node of 10 in the reference shift family") {
  auto fam = ref_shift();
  auto sn = find_saddle_node(fam, Word("10"));
  CHECK(sn.t > 0.0);
  CHECK(sn.t < fam.t_c);
  CHECK(sn.orbit.kind == OrbitKind::Parabolic);
  CHECK(sn.orbit.multiplier == doctest::Approx(1.0).epsilon(1e-5));
  // diagonal gap changes sign across t*
  CHECK(fixed_points(pair_at(fam, sn.t - 1e-6), Word("10")).variant == FixedPointVariant::None);
  auto above = fixed_points(pair_at(fam, sn.t + 1e-8), Word("10"));
  REQUIRE(above.variant == FixedPointVariant::Pair);
  CHECK(above.minus->point - above.plus->point < 1e-3);
  CHECK(frequency_bound(pair_at(fam, sn.t), Word("10")).lhs <= 0.0);
  try {
    find_saddle_node(fam, Word("0"));
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
}

TEST_CASE("frequency shadow along a case Ia scan") {
  auto fam = case_ia();
  for (double t : parameter_grid(fam, 4)) {
    if (t == fam.t_c) continue;
    auto p = pair_at(fam, t);
    double C = jump_constant(fam, t);
    for (const auto& w : list_admissible_up_to(p, 12)) {
      if (w.count_zeros() == 0) continue;
      if (static_cast<double>(w.count_ones()) / static_cast<double>(w.count_zeros()) > C + 0.02)
        CHECK(fixed_points(p, w).variant == FixedPointVariant::None);
    }
  }
}
