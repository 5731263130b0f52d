#include "cskew/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cskew/errors.hpp"
#include "cskew/numfmt.hpp"

namespace cskew {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void config_error(int line, const std::string& msg) {
  throw Error(ErrorCode::ConfigError, "config line " + std::to_string(line) + ": " + msg);
}

double positive(int line, std::string_view key, std::string_view v) {
  auto x = parse_double(v);
  if (!x || !(*x > 0.0)) config_error(line, std::string(key) + " must be a positive number");
  return *x;
}

template <class Int>
Int integer(int line, std::string_view key, std::string_view v) {
  Int x{};
  auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) config_error(line, std::string(key) + " must be an integer");
  return x;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::string section;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto c = line.find_first_of("#;"); c != std::string_view::npos) line = line.substr(0, c);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') config_error(lineno, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "maps" && section != "tolerances" && section != "budgets" && section != "run")
        config_error(lineno, "unknown section [" + section + "]");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) config_error(lineno, "expected key = value");
    if (section.empty()) config_error(lineno, "key outside of any section");
    std::string key(trim(line.substr(0, eq)));
    auto val = trim(line.substr(eq + 1));
    try {
      if (section == "maps") {
        if (key == "f0")
          cfg.f0 = FiberMap::parse(val);
        else if (key == "f1")
          cfg.f1 = FiberMap::parse(val);
        else if (key == "modulus" || key == "M")
          cfg.modulus = positive(lineno, key, val);
        else
          config_error(lineno, "unknown key '" + key + "' in [maps]");
      } else if (section == "tolerances") {
        if (key == "bisect" || key == "tau_bisect")
          cfg.tol.bisect = positive(lineno, key, val);
        else if (key == "parab" || key == "tau_parab")
          cfg.tol.parab = positive(lineno, key, val);
        else if (key == "meas" || key == "tau_meas")
          cfg.tol.meas = positive(lineno, key, val);
        else
          config_error(lineno, "unknown key '" + key + "' in [tolerances]");
      } else if (section == "budgets") {
        if (key == "nodes" || key == "node_cap")
          cfg.budgets.node_cap = integer<std::uint64_t>(lineno, key, val);
        else if (key == "iterations" || key == "iteration_cap")
          cfg.budgets.iteration_cap = integer<int>(lineno, key, val);
        else if (key == "workers")
          cfg.budgets.workers = integer<int>(lineno, key, val);
        else
          config_error(lineno, "unknown key '" + key + "' in [budgets]");
        if (cfg.budgets.workers < 1 || cfg.budgets.iteration_cap < 1 || cfg.budgets.node_cap < 1)
          config_error(lineno, "budgets must be positive");
      } else {
        if (key == "seed")
          cfg.seed = integer<std::uint64_t>(lineno, key, val);
        else if (key == "out")
          cfg.out_path = std::string(val);
        else
          config_error(lineno, "unknown key '" + key + "' in [run]");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      config_error(lineno, e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ConfigError, "cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string canonical_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[maps]\nf0 = " << cfg.f0.describe() << "\nf1 = " << cfg.f1.describe() << "\nmodulus = " << fmt17(cfg.modulus)
     << "\n[tolerances]\nbisect = " << fmt17(cfg.tol.bisect) << "\nparab = " << fmt17(cfg.tol.parab)
     << "\nmeas = " << fmt17(cfg.tol.meas) << "\n[budgets]\nnodes = " << cfg.budgets.node_cap
     << "\niterations = " << cfg.budgets.iteration_cap << "\n[run]\nseed = " << cfg.seed << "\n";
  return os.str();
}

std::uint64_t config_hash(const RunConfig& cfg) {
  // FNV-1a, 64 bit
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_config(cfg)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int workers_from_env(int fallback) {
  const char* v = std::getenv("CONCAVE_SKEW_WORKERS");
  if (!v || !*v) return fallback;
  int n = 0;
  std::string_view s(v);
  auto r = std::from_chars(s.data(), s.data() + s.size(), n);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || n < 1) return fallback;
  return n;
}

}  // namespace cskew
