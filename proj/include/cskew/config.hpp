#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cskew/maps.hpp"

namespace cskew {

// Flat INI-style run configuration:
//   [maps]        f0 = logistic(c=0.5) / f1 = moebius(A=2, B=1, d=0.4) / modulus = 2
//   [tolerances]  bisect, parab, meas
//   [budgets]     nodes, iterations, workers
//   [run]         seed, out
struct RunConfig {
  FiberMap f0 = FiberMap::logistic(0.5);
  FiberMap f1 = FiberMap::moebius(2.0, 1.0, 0.4);
  double modulus = 2.0;
  Tolerances tol;
  Budgets budgets;
  std::uint64_t seed = 20240601;
  std::string out_path;

  FiberPair pair() const { return FiberPair(f0, f1, modulus); }
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Stable text form of everything that affects results (worker count and paths excluded).
std::string canonical_config(const RunConfig& cfg);
std::uint64_t config_hash(const RunConfig& cfg);

// CONCAVE_SKEW_WORKERS if set to a positive integer, else `fallback`.
int workers_from_env(int fallback);

}  // namespace cskew
