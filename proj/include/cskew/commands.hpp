#pragma once

#include <map>
#include <string>
#include <vector>

#include "cskew/config.hpp"

namespace cskew {

// String-valued options as they arrive from a command line; "format" is csv or json.
class CommandOptions {
public:
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  std::string str(const std::string& key, const std::string& dflt) const;
  int integer(const std::string& key, int dflt) const;
  double real(const std::string& key, double dflt) const;
  bool json() const { return str("format", "csv") == "json"; }

private:
  std::map<std::string, std::string> kv_;
};

struct CommandResult {
  std::string body;
  std::string aux;  // words file for horseshoe and join
  std::vector<std::string> warnings;
  std::size_t rows = 0;
  bool verification_failed = false;
};

const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& name, const RunConfig& cfg, const CommandOptions& opts);

}  // namespace cskew
