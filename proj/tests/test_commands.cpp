#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cskew/commands.hpp"
#include "cskew/errors.hpp"

using namespace cskew;
using nlohmann::json;

namespace {
std::vector<std::vector<std::string>> csv_rows(const std::string& body) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

CommandResult run(const std::string& cmd, std::initializer_list<std::pair<const char*, const char*>> kv,
                  const RunConfig& cfg = {}) {
  CommandOptions o;
  for (const auto& [k, v] : kv) o.set(k, v);
  return run_command(cmd, cfg, o);
}
}  // namespace

TEST_CASE("all commands are registered") {
  const auto& names = command_names();
  for (const char* n : {"hypotheses", "words", "entropy", "orbit", "twins", "freq", "horseshoe", "join", "bifscan",
                        "saddle-node", "parabolic-approx", "verify"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run("fly", {}), Error);
}

TEST_CASE("words lists the admissible words") {
  auto r = run("words", {{"n", "4"}});
  auto rows = csv_rows(r.body);
  REQUIRE(rows.size() == 16);
  CHECK(rows[0] == std::vector<std::string>{"word", "admissible", "a_endpoint"});
  CHECK(r.rows == 15);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] == "true");
  CHECK(r.body.find("1111") == std::string::npos);
}

TEST_CASE("entropy table") {
  auto rows = csv_rows(run("entropy", {{"n", "12"}}).body);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == std::vector<std::string>{"n", "count", "entropy_upper"});
  double prev = INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double h = std::stod(rows[i][2]);
    CHECK(h <= prev);
    prev = h;
  }
  CHECK(rows[4][1] == "15");
}

TEST_CASE("json switch") {
  auto j = json::parse(run("entropy", {{"n", "5"}, {"format", "json"}}).body);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[3]["count"] == 15);
}

TEST_CASE("floats round trip through CSV") {
  auto rows = csv_rows(run("words", {{"n", "3"}}).body);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double a = std::stod(rows[i][2]);
    std::ostringstream os;
    os.precision(17);
    os << a;
    CHECK(std::stod(os.str()) == a);
  }
}

TEST_CASE("orbit JSON") {
  auto j = json::parse(run("orbit", {{"word", "1000"}}).body);
  CHECK(j["variant"] == "Pair");
  CHECK(j["p_plus"].get<double>() < j["p_minus"].get<double>());
  for (const char* k : {"word", "variant", "p_plus", "p_minus", "mult_plus", "mult_minus", "chi_plus", "chi_minus"})
    CHECK(j.contains(k));
  auto none = json::parse(run("orbit", {{"word", "10"}}).body);
  CHECK(none["variant"] == "None");
}

TEST_CASE("maps failing the hypotheses need force") {
  RunConfig cfg;
  cfg.f1 = FiberMap::affine(1.5, 0.4);
  try {
    run("words", {{"n", "3"}}, cfg);
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
  CHECK_NOTHROW(run("words", {{"n", "3"}, {"force", "true"}}, cfg));
}

TEST_CASE("outputs are deterministic") {
  for (const char* cmd : {"join", "horseshoe", "twins", "bifscan"}) {
    auto a = run(cmd, {}), b = run(cmd, {});
    CHECK(a.body == b.body);
    CHECK(a.aux == b.aux);
  }
}

TEST_CASE("horseshoe and join carry a words file") {
  auto h = run("horseshoe", {});
  auto j = json::parse(h.body);
  std::size_t lines = std::count(h.aux.begin(), h.aux.end(), '\n');
  CHECK(lines == j["word_count"].get<std::size_t>());
  auto jn = run("join", {});
  auto jj = json::parse(jn.body);
  CHECK(std::count(jn.aux.begin(), jn.aux.end(), '\n') == jj["allowed_count"].get<long>());
  CHECK(jj["checks"]["bridges_allowed"] == 50);
}

TEST_CASE("bifscan has the scan columns") {
  RunConfig cfg;
  cfg.f1 = FiberMap::moebius(2, 1, 0);
  auto rows = csv_rows(run("bifscan", {{"t-steps", "4"}, {"n", "6"}}, cfg).body);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] ==
        std::vector<std::string>{"t", "d_t", "C_t", "p_t", "H_p_t", "count_n", "entropy_upper_n", "k0_t"});
  CHECK(rows[1][5] == "7");
  CHECK(rows[5][5] == "64");
}

TEST_CASE("verify subset") {
  auto r = run("verify", {{"only", "3,5"}});
  auto rows = csv_rows(r.body);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "3");
  CHECK(rows[1][2] == "true");
  CHECK_FALSE(r.verification_failed);
}
