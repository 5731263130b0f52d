#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "cskew/cskew.h"

TEST_CASE("version and status names") {
  CHECK(std::strlen(cskew_version()) > 0);
  CHECK(std::string(cskew_status_name(CSKEW_OK)) == "Ok");
  CHECK(std::string(cskew_status_name(CSKEW_E_EMPTY_INTERVAL)) == "EmptyInterval");
}

TEST_CASE("pair evaluation through handles") {
  cskew_pair* p = nullptr;
  REQUIRE(cskew_pair_create("logistic(c=0.5)", "moebius(A=2, B=1, d=0.4)", 2.0, &p) == CSKEW_OK);
  CHECK(cskew_pair_d(p) == doctest::Approx(0.4));
  double v = 0;
  CHECK(cskew_eval_word(p, "1", 0.4, &v) == CSKEW_OK);
  CHECK(v == doctest::Approx(0.0));
  CHECK(cskew_deriv_word(p, "00", 0.0, &v) == CSKEW_OK);
  CHECK(v == doctest::Approx(2.25));
  CHECK(cskew_invert_word(p, "1", 0.0, &v) == CSKEW_OK);
  CHECK(v == doctest::Approx(0.4));

  CHECK(cskew_eval_word(p, "01", 0.1, &v) == CSKEW_E_DOMAIN_ESCAPE);
  CHECK(cskew_last_error_step() == 1);
  CHECK(std::strlen(cskew_last_error()) > 0);
  CHECK(cskew_forward_endpoint(p, "1111", &v) == CSKEW_E_EMPTY_INTERVAL);
  CHECK(cskew_eval_word(p, "0x", 0.1, &v) == CSKEW_E_INVALID_ARGUMENT);
  CHECK(cskew_eval_word(nullptr, "0", 0.1, &v) == CSKEW_E_INVALID_ARGUMENT);

  uint64_t count = 0;
  double h = 0;
  CHECK(cskew_count_admissible(p, 4, 0, 1, &count, &h) == CSKEW_OK);
  CHECK(count == 15);
  int k0 = 0;
  CHECK(cskew_max_consecutive_ones(p, 0, &k0) == CSKEW_OK);
  CHECK(k0 == 3);

  cskew_hypothesis_report rep;
  CHECK(cskew_check_hypotheses(p, 1000, &rep) == CSKEW_OK);
  CHECK(rep.h2plus_ok);

  cskew_fixed_point_info fp;
  CHECK(cskew_fixed_points(p, "0", &fp) == CSKEW_OK);
  CHECK(fp.variant == CSKEW_FP_PAIR);
  CHECK(fp.mult_plus == doctest::Approx(1.5));
  CHECK(cskew_fixed_points(p, "10", &fp) == CSKEW_OK);
  CHECK(fp.variant == CSKEW_FP_NONE);

  double formula = 0, oracle = 0;
  CHECK(cskew_wasserstein_twins(p, "1000", &formula, &oracle) == CSKEW_OK);
  CHECK(formula == doctest::Approx(oracle).epsilon(1e-9));
  cskew_pair_free(p);
}

TEST_CASE("families through handles") {
  cskew_family* f = nullptr;
  REQUIRE(cskew_family_create("logistic(c=0.5)", "moebius(A=2, B=1, d=0.4)", 2.0, &f) == CSKEW_OK);
  cskew_family_info info;
  CHECK(cskew_family_info_get(f, &info) == CSKEW_OK);
  CHECK(info.exit_case == CSKEW_CASE_II);
  double t = 0, x = 0;
  CHECK(cskew_find_saddle_node(f, "10", &t, &x) == CSKEW_OK);
  CHECK(t == doctest::Approx(0.114935).epsilon(1e-5));
  CHECK(cskew_find_saddle_node(f, "0", &t, &x) == CSKEW_E_NO_SIGN_CHANGE);
  cskew_family_free(f);
}

TEST_CASE("commands through handles") {
  cskew_config* cfg = nullptr;
  REQUIRE(cskew_config_parse("[run]\nseed = 5\n", &cfg) == CSKEW_OK);
  CHECK(cskew_config_seed(cfg) == 5);
  cskew_config* bad = nullptr;
  CHECK(cskew_config_parse("[maps]\nnope = 1\n", &bad) == CSKEW_E_CONFIG);
  CHECK(bad == nullptr);

  bool has_words = false;
  for (size_t i = 0; i < cskew_command_count(); ++i) has_words = has_words || std::string(cskew_command_name(i)) == "words";
  CHECK(has_words);
  CHECK(cskew_command_name(cskew_command_count()) == nullptr);

  cskew_options* o = nullptr;
  REQUIRE(cskew_options_create(&o) == CSKEW_OK);
  cskew_options_set(o, "n", "4");
  cskew_result* r = nullptr;
  REQUIRE(cskew_run("words", cfg, o, &r) == CSKEW_OK);
  CHECK(cskew_result_rows(r) == 15);
  CHECK(std::string(cskew_result_body(r)).rfind("word,admissible,a_endpoint", 0) == 0);
  CHECK_FALSE(cskew_result_failed(r));
  cskew_result_free(r);

  CHECK(cskew_run("nope", cfg, o, &r) == CSKEW_E_INVALID_ARGUMENT);
  cskew_options_free(o);
  cskew_config_free(cfg);
}
