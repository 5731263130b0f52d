#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cskew/maps.hpp"
#include "cskew/orbits.hpp"

namespace cskew {

enum class ExitCase { Ia, Ib, II };
const char* exit_case_name(ExitCase c);

// Shift family f_{1,t} = f1_base + t with f0 fixed.
struct BifFamily {
  FiberMap f0;
  FiberMap f1_base;
  double modulus = 2.0;
  double t_h = 0.0;
  double t_c = 0.0;
  ExitCase exit_case = ExitCase::II;
  double a_exit = 0.0;
};

BifFamily make_family(const FiberMap& f0, const FiberMap& f1_base, double modulus);
FiberPair pair_at(const BifFamily& fam, double t);

double jump_constant(const BifFamily& fam, double t);
double binary_entropy(double p);

struct EntropyBound {
  double p = 0.5;
  double H = 0.0;
};
EntropyBound entropy_bound(const BifFamily& fam, double t);

struct ScanRow {
  double t = 0.0;
  double d_t = 0.0;
  double C_t = 0.0;
  double p_t = 0.0;
  double H_p_t = 0.0;
  std::uint64_t count_n = 0;
  double entropy_upper_n = 0.0;
  std::optional<int> k0_t;
  std::string error;  // empty when the row is complete
};

// steps+1 equally spaced parameters from t_h to t_c inclusive
std::vector<double> parameter_grid(const BifFamily& fam, int steps);
std::vector<ScanRow> scan(const BifFamily& fam, const std::vector<double>& t_grid, int n, const Budgets& budgets = {},
                          double tol = 1e-12);

double full_cylinder_threshold(const BifFamily& fam, int n, const Budgets& budgets = {}, double tol = 1e-12);

struct SaddleNode {
  double t = 0.0;
  PeriodicOrbit orbit;
};

SaddleNode find_saddle_node(const BifFamily& fam, const Word& w, const Tolerances& tol = {}, int grid_steps = 200);

}  // namespace cskew
