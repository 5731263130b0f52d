#include "cskew/bifurcation.hpp"

#include <cmath>
#include <limits>

#include "cskew/errors.hpp"
#include "cskew/parallel.hpp"
#include "cskew/symbolic.hpp"

namespace cskew {

const char* exit_case_name(ExitCase c) {
  switch (c) {
    case ExitCase::Ia: return "Ia";
    case ExitCase::Ib: return "Ib";
    case ExitCase::II: return "II";
  }
  return "?";
}

BifFamily make_family(const FiberMap& f0, const FiberMap& f1_base, double modulus) {
  (void)f1_base.shifted(0.0);  // rejects families without a shift
  BifFamily fam{f0, f1_base, modulus};
  const auto& f = fam.f1_base;
  fam.t_h = -f(1.0);
  if (f.derivative(1.0) > 1.0) {
    fam.exit_case = ExitCase::Ia;
    fam.a_exit = 1.0;
    fam.t_c = 1.0 - f(1.0);
  } else if (f.derivative(0.0) >= 1.0) {
    // f' is non-increasing, so f'(c) = 1 somewhere in [0,1]
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f.derivative(mid) > 1.0 ? lo : hi) = mid;
    }
    fam.exit_case = ExitCase::II;
    fam.a_exit = f.derivative(0.0) == 1.0 ? 0.0 : lo;
    fam.t_c = fam.a_exit - f(fam.a_exit);
  } else if (f.derivative(0.0) < 1.0) {
    fam.exit_case = ExitCase::Ib;
    fam.a_exit = 0.0;
    fam.t_c = -f(0.0);
  } else {
    throw Error(ErrorCode::NoExitCase, "f1 base map fits none of the exit cases on [0,1]");
  }
  return fam;
}

FiberPair pair_at(const BifFamily& fam, double t) { return FiberPair(fam.f0, fam.f1_base.shifted(t), fam.modulus); }

double jump_constant(const BifFamily& fam, double) {
  double s = fam.f1_base.derivative(1.0);
  if (!(s > 1.0)) return std::numeric_limits<double>::infinity();
  return std::abs(std::log(fam.f0.derivative(1.0))) / std::log(s);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

EntropyBound entropy_bound(const BifFamily& fam, double t) {
  double C = jump_constant(fam, t);
  double p = std::isinf(C) ? 0.5 : std::min(0.5, C / (1.0 + C));
  return {p, binary_entropy(p)};
}

std::vector<double> parameter_grid(const BifFamily& fam, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "need at least one step");
  std::vector<double> g;
  for (int i = 0; i <= steps; ++i) g.push_back(i == steps ? fam.t_c : fam.t_h + (fam.t_c - fam.t_h) * i / steps);
  return g;
}

std::vector<ScanRow> scan(const BifFamily& fam, const std::vector<double>& t_grid, int n, const Budgets& budgets,
                          double tol) {
  std::vector<ScanRow> rows(t_grid.size());
  Budgets inner = budgets;
  inner.workers = 1;
  parallel_for(rows.size(), budgets.workers, [&](std::size_t i) {
    auto& r = rows[i];
    r.t = t_grid[i];
    auto pair = pair_at(fam, r.t);
    r.d_t = pair.d();
    r.C_t = jump_constant(fam, r.t);
    auto eb = entropy_bound(fam, r.t);
    r.p_t = eb.p;
    r.H_p_t = eb.H;
    try {
      auto lc = count_admissible(pair, n, inner, tol);
      r.count_n = lc.count;
      r.entropy_upper_n = lc.entropy_upper;
    } catch (const Error& e) {
      r.error = std::string(error_name(e.code())) + ": " + e.what();
    }
    try {
      r.k0_t = max_consecutive_ones(pair, budgets.iteration_cap, tol);
    } catch (const Error& e) {
      if (!r.error.empty()) r.error += "; ";
      r.error += std::string(error_name(e.code())) + ": " + e.what();
    }
  });
  return rows;
}

double full_cylinder_threshold(const BifFamily& fam, int n, const Budgets& budgets, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const std::uint64_t full = std::uint64_t{1} << n;
  auto is_full = [&](double t) { return count_admissible(pair_at(fam, t), n, budgets, tol).count == full; };
  if (is_full(fam.t_h)) return fam.t_h;
  if (!is_full(fam.t_c)) throw Error(ErrorCode::NoSignChange, "language is not full even at t_c");
  double lo = fam.t_h, hi = fam.t_c;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (is_full(mid) ? hi : lo) = mid;
  }
  return hi;
}

SaddleNode find_saddle_node(const BifFamily& fam, const Word& w, const Tolerances& tol, int grid_steps) {
  auto gap = [&](double t) {
    auto pair = pair_at(fam, t);
    if (!is_forward_admissible(pair, w, tol.bisect)) return -std::numeric_limits<double>::infinity();
    return diagonal_gap(pair, w, tol).gap;
  };
  auto grid = parameter_grid(fam, grid_steps);
  std::size_t first = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (gap(grid[i]) >= 0.0) {
      first = i;
      break;
    }
  if (first == 0 || first == grid.size())
    throw Error(ErrorCode::NoSignChange, "diagonal gap of " + w.str() + " does not change sign on the grid");

  double lo = grid[first - 1], hi = grid[first];
  double g_lo = gap(lo), g_hi = gap(hi);
  for (int it = 0; it < 400 && std::min(std::abs(g_lo), std::abs(g_hi)) > 0.5 * tol.parab; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double g = gap(mid);
    if (g < 0.0)
      lo = mid, g_lo = g;
    else
      hi = mid, g_hi = g;
  }
  SaddleNode sn;
  sn.t = std::abs(g_lo) < std::abs(g_hi) ? lo : hi;
  auto fp = fixed_points(pair_at(fam, sn.t), w, tol);
  if (fp.variant != FixedPointVariant::Parabolic)
    throw Error(ErrorCode::NoSignChange, "bisection did not isolate a parabolic orbit of " + w.str());
  sn.orbit = *fp.plus;
  return sn;
}

}  // namespace cskew
