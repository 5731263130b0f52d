#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cskew/word.hpp"

namespace cskew {

struct Tolerances {
  double bisect = 1e-12;
  double parab = 1e-9;
  double meas = 1e-9;
};

struct Budgets {
  std::uint64_t node_cap = 200'000'000;
  int iteration_cap = 100'000;
  int workers = 1;
};

enum class MapFamily { LogisticLike, Moebius, ShiftedMoebius, Affine };

// One increasing concave fiber map, given by a closed formula valid on all of R.
//   LogisticLike {c}:         x + c x (1 - x)
//   Moebius {A, B, d}:        A (x - d) / (1 + B (x - d))
//   ShiftedMoebius {A,B,d,t}: Moebius + t
//   Affine {slope, d, t}:     slope (x - d) + t
class FiberMap {
public:
  static FiberMap logistic(double c);
  static FiberMap moebius(double A, double B, double d);
  static FiberMap shifted_moebius(double A, double B, double d, double t);
  static FiberMap affine(double slope, double d, double t = 0.0);
  // "logistic(c=0.5)", "moebius(A=2, B=1, d=0.4)", ...
  static FiberMap parse(std::string_view decl);

  MapFamily family() const noexcept { return family_; }
  const std::vector<double>& params() const noexcept { return p_; }

  double operator()(double x) const noexcept;
  double derivative(double x) const noexcept;
  // d/dx log f'(x)
  double log_derivative_slope(double x) const noexcept;
  // formula inverse on the increasing branch; NaN where no preimage exists
  double inverse(double y) const noexcept;
  // the point sent to 0
  double root() const noexcept { return inverse(0.0); }

  FiberMap shifted(double t) const;
  std::string describe() const;

private:
  FiberMap(MapFamily f, std::vector<double> p) : family_(f), p_(std::move(p)) {}
  MapFamily family_;
  std::vector<double> p_;
};

// f0 acts on [0,1], f1 on [d,1] with f1(d) = 0. modulus is the constant M of the
// two-sided log-derivative bound.
class FiberPair {
public:
  FiberPair(FiberMap f0, FiberMap f1, double modulus);

  const FiberMap& f0() const noexcept { return f0_; }
  const FiberMap& f1() const noexcept { return f1_; }
  const FiberMap& map(int symbol) const noexcept { return symbol == 0 ? f0_ : f1_; }
  double d() const noexcept { return d_; }
  double modulus() const noexcept { return modulus_; }
  double lower(int symbol) const noexcept { return symbol == 0 ? 0.0 : d_; }

private:
  FiberMap f0_, f1_;
  double d_;
  double modulus_;
};

FiberPair reference_pair();

// Applies f_symbol to x in place. Points within tol of a domain end are snapped onto it.
// Returns false if x lies outside the domain of f_symbol.
bool apply_symbol(const FiberPair& pair, int symbol, double& x, double tol) noexcept;

double eval_word(const FiberPair& pair, const Word& w, double x, double tol = 1e-12);
double deriv_word(const FiberPair& pair, const Word& w, double x, double tol = 1e-12);
// value and derivative of the composition in one pass
std::pair<double, double> eval_deriv_word(const FiberPair& pair, const Word& w, double x,
                                          double tol = 1e-12);
double invert_word(const FiberPair& pair, const Word& w, double y, double tol = 1e-12);

struct Violation {
  double location = 0.0;
  double magnitude = 0.0;
};

struct HypothesisReport {
  bool h1_ok = false;
  bool h2_ok = false;
  bool h2plus_ok = false;
  double modulus_estimate = 0.0;
  Violation worst_violation;
  std::vector<std::string> failed_clauses;
};

HypothesisReport check_hypotheses(const FiberPair& pair, int grid_n);

// Same two-sided modulus for the inverse maps: d/dy log (f^-1)'(y) = -(log f')'(x) / f'(x) at x = f^-1(y).
double inverse_modulus_estimate(const FiberPair& pair, int grid_n = 1000);

}  // namespace cskew
