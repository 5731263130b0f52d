// Command-line front end over the C API.
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cskew/cskew.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct OptionSpec {
  const char* name;
  const char* help;
};

// command options forwarded verbatim as key/value strings
const std::map<std::string, std::vector<OptionSpec>>& command_options() {
  static const std::map<std::string, std::vector<OptionSpec>> m = {
      {"hypotheses", {{"grid", "grid points for the derivative checks"}}},
      {"words", {{"n", "word length"}, {"all", "list inadmissible words too (true/false)"}}},
      {"entropy", {{"n", "largest word length"}}},
      {"orbit", {{"word", "periodic word"}}},
      {"twins", {{"word", "single word"}, {"max-len", "all admissible words up to this length"}}},
      {"freq", {{"word", "single word"}, {"max-len", "all words up to this length"}}},
      {"horseshoe",
       {{"a", "crossing threshold"},
        {"k", "crossing word length"},
        {"eps", "padding epsilon"},
        {"L", "contraction rate"},
        {"words", "comma separated crossing words"},
        {"grid", "grid points for the contraction check"}}},
      {"join",
       {{"w1", "word of the first orbit SFT"},
        {"w2", "word of the second orbit SFT"},
        {"samples", "admissibility samples"},
        {"sample-len", "sample length"},
        {"bridges", "connector bridge trials"}}},
      {"bifscan", {{"t-steps", "grid steps between t_h and t_c"}, {"n", "enumeration length"}}},
      {"saddle-node", {{"word", "periodic word"}}},
      {"parabolic-approx", {{"word", "parabolic word"}, {"lmax", "largest l"}, {"k", "zero run (default: minimal)"}}},
      {"verify", {{"only", "comma separated criterion ids"}}},
  };
  return m;
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int exit_for(cskew_status s) {
  std::cerr << "error: " << cskew_status_name(s) << ": " << cskew_last_error() << "\n";
  return s == CSKEW_E_CONFIG ? kExitConfig : kExitFailure;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

const std::map<std::string, std::string>& command_help() {
  static const std::map<std::string, std::string> h{
      {"hypotheses", "check the standing hypotheses on the fiber maps"},
      {"words", "enumerate admissible words"},
      {"entropy", "admissible word counts and entropy bounds"},
      {"orbit", "fixed points and spine of one periodic word"},
      {"twins", "twin measures, exponents and kappa bounds"},
      {"freq", "frequency obstruction over periodic words"},
      {"horseshoe", "padded horseshoe from crossing words"},
      {"join", "join two orbit SFTs through the zero fixed point"},
      {"bifscan", "entropy along the one-parameter family"},
      {"saddle-node", "locate the saddle node of a word"},
      {"parabolic-approx", "contracting orbits approaching a parabolic one"},
      {"verify", "run the acceptance checks on the current maps"},
  };
  return h;
}

int main(int argc, char** argv) {
  CLI::App app{"concave skew-product dynamics toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cskew_version()));

  std::string config_path, family_config, out_path, envelope_path, words_out;
  bool as_json = false, force = false;
  std::string seed_text;
  app.add_option("--config", config_path, "run configuration file");
  app.add_option("--family-config", family_config, "configuration declaring the family base maps (overrides --config)");
  app.add_option("--out", out_path, "write the result body here instead of stdout");
  app.add_option("--envelope", envelope_path, "write a JSON result envelope here");
  app.add_option("--words-out", words_out, "words file for horseshoe and join");
  app.add_option("--seed", seed_text, "seed for sampling checks");
  app.add_flag("--json", as_json, "JSON arrays instead of CSV");
  app.add_flag("--force", force, "run even if the maps fail the hypotheses");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> subs;
  for (size_t i = 0; i < cskew_command_count(); ++i) {
    std::string name = cskew_command_name(i);
    auto h = command_help().find(name);
    auto* sub = app.add_subcommand(name, h == command_help().end() ? "" : h->second);
    sub->fallthrough();
    subs[name] = sub;
    auto it = command_options().find(name);
    if (it == command_options().end()) continue;
    for (const auto& spec : it->second) sub->add_option(std::string("--") + spec.name, values[name][spec.name], spec.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  cskew_config* cfg = nullptr;
  const std::string& path = family_config.empty() ? config_path : family_config;
  cskew_status st = path.empty() ? cskew_config_default(&cfg) : cskew_config_load(path.c_str(), &cfg);
  if (st != CSKEW_OK) return exit_for(st);

  if (const char* env = std::getenv("CONCAVE_SKEW_WORKERS")) {
    char* end = nullptr;
    long w = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && w > 0) cskew_config_set_workers(cfg, static_cast<int>(w));
  }
  if (!seed_text.empty()) {
    char* end = nullptr;
    unsigned long long s = std::strtoull(seed_text.c_str(), &end, 10);
    if (end == seed_text.c_str() || *end != '\0') {
      std::cerr << "error: bad --seed '" << seed_text << "'\n";
      cskew_config_free(cfg);
      return kExitConfig;
    }
    cskew_config_set_seed(cfg, s);
  }
  if (out_path.empty()) out_path = cskew_config_out_path(cfg);

  cskew_options* opts = nullptr;
  cskew_options_create(&opts);
  for (const auto& [k, v] : values[command])
    if (!v.empty()) cskew_options_set(opts, k.c_str(), v.c_str());
  cskew_options_set(opts, "format", as_json ? "json" : "csv");
  if (force) cskew_options_set(opts, "force", "true");

  cskew_result* res = nullptr;
  st = cskew_run(command.c_str(), cfg, opts, &res);
  cskew_options_free(opts);
  if (st != CSKEW_OK) {
    cskew_config_free(cfg);
    return exit_for(st);
  }

  std::string body = cskew_result_body(res);
  int code = kExitOk;
  if (out_path.empty()) {
    std::cout << body;
  } else if (!write_file(out_path, body)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    code = kExitFailure;
  }

  std::string aux = cskew_result_aux(res);
  if (!words_out.empty() && !write_file(words_out, aux)) {
    std::cerr << "error: cannot write " << words_out << "\n";
    code = kExitFailure;
  }

  nlohmann::ordered_json warnings = nlohmann::ordered_json::array();
  for (size_t i = 0; i < cskew_result_warning_count(res); ++i) {
    std::cerr << "warning: " << cskew_result_warning(res, i) << "\n";
    warnings.push_back(cskew_result_warning(res, i));
  }

  if (!envelope_path.empty()) {
    nlohmann::ordered_json env;
    env["command"] = command;
    env["config_hash"] = hex64(cskew_config_hash(cfg));
    env["timestamp"] = timestamp_utc();
    env["row_count"] = cskew_result_rows(res);
    auto parsed = nlohmann::ordered_json::parse(body, nullptr, false);
    if (parsed.is_discarded())
      env["rows"] = body;
    else
      env["rows"] = parsed;
    env["warnings"] = warnings;
    if (!write_file(envelope_path, env.dump(2) + "\n")) {
      std::cerr << "error: cannot write " << envelope_path << "\n";
      code = kExitFailure;
    }
  }

  if (cskew_result_failed(res)) code = kExitFailure;
  cskew_result_free(res);
  cskew_config_free(cfg);
  return code;
}
