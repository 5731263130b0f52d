#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cskew/errors.hpp"
#include "cskew/maps.hpp"
#include "cskew/symbolic.hpp"

using namespace cskew;

namespace {
// per-word re-evaluation from 1, no pruning or shared state
bool naive_admissible(const FiberPair& p, const std::string& w) {
  double x = 1.0;
  for (char c : w) {
    if (c == '1') {
      if (x < p.d() - 1e-12) return false;
      x = std::max(p.f1()(std::max(x, p.d())), 0.0);
    } else {
      x = p.f0()(x);
    }
  }
  return true;
}

std::uint64_t naive_count(const FiberPair& p, int n) {
  std::uint64_t c = 0;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    std::string w;
    for (int i = n - 1; i >= 0; --i) w.push_back((m >> i) & 1 ? '1' : '0');
    c += naive_admissible(p, w);
  }
  return c;
}
}  // namespace

TEST_CASE("forward endpoints") {
  auto p = reference_pair();
  CHECK(forward_endpoint(p, Word("0")).a == 0.0);
  CHECK(forward_endpoint(p, Word("1")).a == doctest::Approx(0.4));
  CHECK_THROWS_AS(forward_endpoint(p, Word("1111")), Error);
  try {
    forward_endpoint(p, Word("1111"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInterval);
  }
}

TEST_CASE("endpoint sends to zero") {
  auto p = reference_pair();
  for (const auto& w : list_admissible_up_to(p, 8)) {
    double a = forward_endpoint(p, w).a;
    if (w.count_ones() == 0) continue;
    CHECK(std::abs(eval_word(p, w, a)) <= 1e-9);
  }
}

TEST_CASE("backward endpoint pulls back to one") {
  auto p = reference_pair();
  for (const char* s : {"0", "00", "100", "0100"}) {
    Word w(s);
    double b = backward_endpoint(p, w).b;
    CHECK(b <= 1.0);
    CHECK(invert_word(p, w, b) == doctest::Approx(1.0).epsilon(1e-10));
    if (b < 1.0 - 1e-3) CHECK_THROWS_AS(invert_word(p, w, b + 1e-3), Error);
  }
}

TEST_CASE("admissibility examples") {
  auto p = reference_pair();
  for (int n = 1; n <= 40; ++n) CHECK(is_forward_admissible(p, Word::zeros(n)));
  CHECK(is_forward_admissible(p, Word("111")));
  CHECK_FALSE(is_forward_admissible(p, Word("1111")));
  CHECK_FALSE(admissible_at(p, Word("1"), 0.39));
  CHECK(admissible_at(p, Word("1"), 0.4));
}

TEST_CASE("admissible_at agrees with the endpoint") {
  auto p = reference_pair();
  for (const auto& w : list_admissible(p, 6)) {
    double a = forward_endpoint(p, w).a;
    for (double x : {0.05, 0.3, 0.45, 0.6, 0.85}) {
      if (std::abs(x - a) < 1e-9) continue;
      CHECK(admissible_at(p, w, x) == (x >= a));
    }
  }
}

TEST_CASE("counts at short lengths") {
  auto p = reference_pair();
  CHECK(count_admissible(p, 1).count == 2);
  CHECK(count_admissible(p, 4).count == 15);
  CHECK(max_consecutive_ones(p) == 3);
}

TEST_CASE("tree walk matches brute force") {
  auto p = reference_pair();
  auto counts = language_counts(p, 12);
  REQUIRE(counts.size() == 12);
  for (int n = 1; n <= 12; ++n) CHECK(counts[n - 1].count == naive_count(p, n));
}

TEST_CASE("parallel enumeration equals serial") {
  auto p = reference_pair();
  Budgets serial, par;
  par.workers = 4;
  for (int n : {5, 11, 14}) CHECK(count_admissible(p, n, serial).count == count_admissible(p, n, par).count);
  CHECK(list_admissible(p, 9, serial) == list_admissible(p, 9, par));
}

TEST_CASE("node budget is enforced") {
  Budgets b;
  b.node_cap = 100;
  CHECK_THROWS_AS(count_admissible(reference_pair(), 16, b), Error);
}

TEST_CASE("count growth and entropy monotonicity") {
  auto counts = language_counts(reference_pair(), 14);
  for (std::size_t i = 1; i < counts.size(); ++i) {
    CHECK(counts[i].count >= counts[i - 1].count);
    CHECK(counts[i].count <= 2 * counts[i - 1].count);
    CHECK(counts[i].entropy_upper <= counts[i - 1].entropy_upper + 1e-15);
  }
}

TEST_CASE("nesting, zero append and exchange") {
  auto p = reference_pair();
  for (const auto& w : list_admissible_up_to(p, 9)) {
    double a = forward_endpoint(p, w).a;
    CHECK(is_forward_admissible(p, w.with(0)));
    CHECK(forward_endpoint(p, w.with(0)).a == doctest::Approx(a).epsilon(1e-14));
    if (is_forward_admissible(p, w.with(1))) CHECK(forward_endpoint(p, w.with(1)).a > a);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 1) continue;
      std::string s = w.str();
      s[i] = '0';
      CHECK(is_forward_admissible(p, Word(s)));
      std::string ins = w.str();
      ins.insert(i, "0");
      CHECK(is_forward_admissible(p, Word(ins)));
    }
  }
}

TEST_CASE("heteroclinic candidates") {
  CHECK(het_words(reference_pair(), 8, 1e-9).empty());
  CHECK(het_words(reference_pair(), 0, 1e-9).empty());
  // A(1-d)/(1+B(1-d)) = d: with B=1, d=0.5 this needs A=1.5
  FiberPair tuned(FiberMap::logistic(0.5), FiberMap::moebius(1.5, 1, 0.5), 2.0);
  CHECK(tuned.f1()(1.0) == doctest::Approx(0.5));
  auto h = het_words(tuned, 2, 1e-9);
  bool found = false;
  for (const auto& c : h)
    if (c.word.str() == "11") {
      found = true;
      CHECK(c.residual <= 1e-12);
    }
  CHECK(found);
}

TEST_CASE("one run fills the interval when f1(1) stays at or above d") {
  FiberPair one(FiberMap::logistic(0.5), FiberMap::moebius(1, 1, 0.4), 2.0);
  CHECK(one.f1()(1.0) < one.d());
  CHECK(max_consecutive_ones(one) == 1);
}
