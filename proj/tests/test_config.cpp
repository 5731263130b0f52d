#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "cskew/config.hpp"
#include "cskew/errors.hpp"

using namespace cskew;

namespace {
ErrorCode code_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}
}  // namespace

TEST_CASE("reference config parses") {
  auto cfg = parse_config(R"(
# comment
[maps]
f0 = logistic(c=0.5)
f1 = moebius(A=2, B=1, d=0.4)   ; trailing comment
modulus = 2
[tolerances]
bisect = 1e-12
parab = 1e-9
meas = 1e-9
[budgets]
nodes = 1000000
iterations = 500
workers = 3
[run]
seed = 7
out = result.csv
)");
  CHECK(cfg.pair().d() == doctest::Approx(0.4));
  CHECK(cfg.modulus == 2.0);
  CHECK(cfg.tol.parab == 1e-9);
  CHECK(cfg.budgets.node_cap == 1000000);
  CHECK(cfg.budgets.iteration_cap == 500);
  CHECK(cfg.budgets.workers == 3);
  CHECK(cfg.seed == 7);
  CHECK(cfg.out_path == "result.csv");
}

TEST_CASE("defaults are the reference pair") {
  auto cfg = parse_config("");
  CHECK(cfg.pair().d() == doctest::Approx(0.4));
  CHECK(cfg.tol.bisect == 1e-12);
}

TEST_CASE("bad configs are config errors") {
  CHECK(code_of("[maps]\nf2 = logistic(c=0.5)\n") == ErrorCode::ConfigError);
  CHECK(code_of("[extras]\n") == ErrorCode::ConfigError);
  CHECK(code_of("f0 = logistic(c=0.5)\n") == ErrorCode::ConfigError);
  CHECK(code_of("[tolerances]\nbisect = 0\n") == ErrorCode::ConfigError);
  CHECK(code_of("[tolerances]\nmeas = -1e-9\n") == ErrorCode::ConfigError);
  CHECK(code_of("[budgets]\nworkers = two\n") == ErrorCode::ConfigError);
  CHECK(code_of("[budgets]\nworkers = 0\n") == ErrorCode::ConfigError);
  CHECK(code_of("[maps]\nf1 = moebius(A=2)\n") == ErrorCode::ConfigError);
  CHECK(code_of("[maps\n") == ErrorCode::ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/ref.cfg"), Error);
}

TEST_CASE("hash ignores workers and formatting, not values") {
  auto a = parse_config("[maps]\nf0 = logistic(c=0.5)\n[budgets]\nworkers = 1\n");
  auto b = parse_config("[maps]\nf0=logistic( c = 0.5 )\n\n[budgets]\nworkers = 8\n");
  CHECK(config_hash(a) == config_hash(b));
  auto c = parse_config("[run]\nseed = 1\n");
  CHECK(config_hash(a) != config_hash(c));
  auto d = parse_config("[maps]\nf0 = logistic(c=0.25)\n");
  CHECK(config_hash(a) != config_hash(d));
  CHECK(canonical_config(a) == canonical_config(b));
}

TEST_CASE("worker override from the environment") {
  setenv("CONCAVE_SKEW_WORKERS", "6", 1);
  CHECK(workers_from_env(1) == 6);
  setenv("CONCAVE_SKEW_WORKERS", "zero", 1);
  CHECK(workers_from_env(2) == 2);
  setenv("CONCAVE_SKEW_WORKERS", "-3", 1);
  CHECK(workers_from_env(2) == 2);
  unsetenv("CONCAVE_SKEW_WORKERS");
  CHECK(workers_from_env(4) == 4);
}
