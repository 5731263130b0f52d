#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "cskew/errors.hpp"
#include "cskew/maps.hpp"
#include "cskew/orbits.hpp"
#include "cskew/sft.hpp"
#include "cskew/symbolic.hpp"

using namespace cskew;

namespace {
std::vector<Word> words(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.emplace_back(w);
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

// independent window check: every length-r factor of w is in the class union
bool windows_in(const std::set<std::string>& allowed, int r, const std::string& w) {
  for (std::size_t i = 0; i + r <= w.size(); ++i)
    if (!allowed.count(w.substr(i, r))) return false;
  return true;
}
}  // namespace

TEST_CASE("entropy of small shifts") {
  CHECK(sft_entropy(make_sft(1, words({"0", "1"}), SftMode::Windowed)) == doctest::Approx(std::log(2.0)));
  std::vector<Word> fifteen;
  for (int m = 0; m < 15; ++m) {
    std::string s;
    for (int i = 3; i >= 0; --i) s.push_back((m >> i) & 1 ? '1' : '0');
    fifteen.emplace_back(s);
  }
  CHECK(sft_entropy(make_sft(4, fifteen, SftMode::Blockwise)) == doctest::Approx(std::log(15.0) / 4));
  auto golden = make_sft(2, words({"00", "01", "10"}), SftMode::Windowed);
  CHECK(sft_entropy(golden) == doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2)).epsilon(1e-9));
  // period-3 orbit: spectral radius 1 despite a periodic transition matrix
  CHECK(sft_entropy(orbit_sft(Word("100"))) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("orbit SFT") {
  auto s = orbit_sft(Word("1000"));
  CHECK(sft_allows(s, Word("10001000100")));
  CHECK(sft_allows(s, Word("0010")));
  CHECK_FALSE(sft_allows(s, Word("11")));
  CHECK_FALSE(sft_allows(s, Word("100001")));
  CHECK(sft_words(s, 3).size() == 4);
  CHECK(sft_words(s, 12).size() == 4);
}

TEST_CASE("recurrent core drops dead ends") {
  // 01 leads nowhere: the only point is 0^Z
  auto s = make_sft(2, words({"00", "01"}), SftMode::Windowed);
  auto core = recurrent_core(s);
  REQUIRE(core.allowed.size() == 1);
  CHECK(core.allowed[0].str() == "00");
  CHECK_FALSE(sft_allows(s, Word("001")));
}

TEST_CASE("sampled words stay inside the SFT") {
  auto golden = make_sft(2, words({"00", "01", "10"}), SftMode::Windowed);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    auto w = sample_sft_word(golden, 30, rng);
    CHECK(w.size() == 30);
    CHECK(w.str().find("11") == std::string::npos);
  }
}

TEST_CASE("join rejects overlapping inputs and the zero sequence") {
  auto p = reference_pair();
  auto s = orbit_sft(Word("1000"));
  CHECK(code_of([&] { join_sfts(p, s, s); }) == ErrorCode::NotDisjoint);
  // the same orbit written with a doubled period is still the same set
  CHECK(code_of([&] { join_sfts(p, s, orbit_sft(Word("10001000"))); }) == ErrorCode::NotDisjoint);
  CHECK(code_of([&] { join_sfts(p, s, orbit_sft(Word("0"))); }) == ErrorCode::ContainsZeroSequence);
}

TEST_CASE("join of two periodic orbits") {
  auto p = reference_pair();
  auto s1 = orbit_sft(Word("1000")), s2 = orbit_sft(Word("10000"));
  auto res = join_sfts(p, s1, s2, 99);
  const auto& c = res.cert;
  CHECK(c.N1 > 2 * c.N0);
  CHECK(res.s3.window == 2 * c.N1);

  // certificate inequalities recomputed here
  Word per = Word::zeros(c.N0 - 1).with(1);
  CHECK(is_forward_admissible(p, per));
  auto fp = fixed_points(p, per);
  REQUIRE(fp.variant == FixedPointVariant::Pair);
  CHECK(c.a == fp.plus->point);
  CHECK(c.b == fp.minus->point);
  CHECK(eval_word(p, Word::zeros(c.N1), c.a) > c.b);
  CHECK_FALSE(sft_allows(s1, Word::zeros(c.N0)));
  CHECK_FALSE(sft_allows(s2, Word::zeros(c.N0)));

  CHECK(res.checks.ok());
  CHECK(res.checks.samples_admissible == 200);
  CHECK_FALSE(sft_allows(res.s3, Word::zeros(2 * c.N1)));
  for (const auto* s : {&s1, &s2})
    for (const auto& w : sft_words(*s, 3 * c.N1)) CHECK(sft_allows(res.s3, w));

  std::set<std::string> all;
  for (const auto& cls : c.word_classes)
    for (const auto& w : cls) all.insert(w.str());
  CHECK(all.size() == res.s3.allowed.size());

  // our own bridges, drawn with a different generator
  std::mt19937_64 rng(2024);
  auto core = recurrent_core(res.s3);
  for (int i = 0; i < 30; ++i) {
    auto v = sample_sft_word(core, 50, rng), w = sample_sft_word(core, 50, rng);
    auto b = join_bridge(res, v, w);
    CHECK(windows_in(all, res.s3.window, (v + b.eta() + w).str()));
    CHECK(is_forward_admissible(p, v + b.eta() + w));
  }
}

TEST_CASE("connector cases") {
  JoinCertificate c;
  c.N1 = 11;
  auto c1 = join_connector(c, Word("0001"), Word("1000"));
  CHECK(c1.recipe_case == 1);
  CHECK(c1.eta == Word::zeros(11));
  auto c2 = join_connector(c, Word("0001"), Word("0001"));
  CHECK(c2.recipe_case == 2);
  CHECK(c2.eta == Word::zeros(8));
  auto c2r = join_connector(c, Word("1000"), Word("1"));
  CHECK(c2r.recipe_case == 2);
  CHECK(c2r.eta == Word::zeros(8));
  auto c3 = join_connector(c, Word("100"), Word("0001"));
  CHECK(c3.recipe_case == 3);
  CHECK(c3.eta == Word::zeros(6));
  auto c3e = join_connector(c, Word("1000000"), Word("0000001"));
  CHECK(c3e.recipe_case == 3);
  CHECK(c3e.eta.empty());
  CHECK_THROWS_AS(join_connector(c, Word::zeros(11).with(1).with(0).with(0) + Word::zeros(9), Word("1")), Error);
}

TEST_CASE("crossing words") {
  auto p = reference_pair();
  auto ws = crossing_words(p, 6, 0.45);
  CHECK_FALSE(ws.empty());
  for (const auto& w : list_admissible(p, 6)) {
    bool crosses = admissible_at(p, w, 0.45) && eval_word(p, w, 0.45) > 0.45;
    CHECK(crosses == std::binary_search(ws.begin(), ws.end(), w));
  }
}

TEST_CASE("one-word horseshoe") {
  auto p = reference_pair();
  // a between the two fixed points of 1000, where it crosses
  auto h = build_horseshoe(p, words({"1000"}), 0.1, 0.3, 0.6);
  CHECK(h.entropy == 0.0);
  CHECK(h.contraction_sup < 1.0);
  REQUIRE(h.padded.size() == 1);
  CHECK(h.padded[0] == Word("1000") + Word::zeros(h.s));
}

TEST_CASE("horseshoe from length-6 crossing words") {
  auto p = reference_pair();
  const double a = 0.45, eps = 0.1, L = 0.3;
  auto ws = crossing_words(p, 6, a);
  auto h = build_horseshoe(p, ws, eps, L, a);
  CHECK(h.contraction_sup < 1.0);
  CHECK(h.s == h.ell + h.ell_prime);
  CHECK(h.ell_prime == static_cast<int>(std::ceil(2 * 6 * eps / L - 1e-9)));
  CHECK(h.entropy * (6 + h.s) == doctest::Approx(std::log(static_cast<double>(ws.size()))));
  CHECK(sft_entropy(horseshoe_sft(h)) == doctest::Approx(h.entropy));
  // Z = {f0' <= e^-L}; ell is the first entry time of a into it
  CHECK(p.f0().derivative(h.z_lower) == doctest::Approx(std::exp(-L)));
  CHECK(eval_word(p, Word::zeros(h.ell), a) >= h.z_lower);
  CHECK(eval_word(p, Word::zeros(h.ell - 1), a) < h.z_lower);

  for (const auto& u : h.padded)
    for (const auto& v : h.padded) CHECK(is_forward_admissible(p, u + v));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    Word w;
    for (int j = 0; j < 10; ++j) w = w + h.padded[rng() % h.padded.size()];
    CHECK(is_forward_admissible(p, w));
  }
}

TEST_CASE("horseshoe preconditions") {
  auto p = reference_pair();
  CHECK(code_of([&] { build_horseshoe(p, words({"1"}), 0.1, 0.3, 0.45); }) == ErrorCode::CrossingViolated);
  CHECK(code_of([&] { build_horseshoe(p, words({"1000"}), 0.1, 0.9, 0.45); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("zero gaps mix admissible words") {
  auto p = reference_pair();
  auto ws = list_admissible_up_to(p, 5);
  for (const auto& x : ws)
    for (const auto& y : ws) {
      int k = mixing_gap(p, x, y);
      REQUIRE(k >= 0);
      CHECK(k <= 64);
      CHECK(is_forward_admissible(p, x + Word::zeros(k) + y));
    }
}
