#pragma once

#include <vector>

#include "cskew/maps.hpp"
#include "cskew/word.hpp"

namespace cskew {

// Uniform measure on the orbit of (word^Z, x0); points[i+1] = f_{word[i]}(points[i]).
struct OrbitMeasure {
  Word word;
  std::vector<double> points;
  double x_integral = 0.0;
  double freq0 = 0.0;
  double freq1 = 0.0;
};

OrbitMeasure orbit_measure(const FiberPair& pair, const Word& w, double x0, double tol = 1e-12);

struct Kappa {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

double kappa_c1(double a, double M);
double kappa_c2(double a, double M);
Kappa kappa(double D, double M);

struct TwinReport {
  Word word;
  OrbitMeasure mu_plus, mu_minus;
  double D = 0.0;
  double chi_plus = 0.0, chi_minus = 0.0;
  double kappa1 = 0.0, kappa2 = 0.0;
  double modulus = 0.0;  // max of the pair's M and the inverse-map estimate
  bool bounds_ok = false;
  // the two halves of bounds_ok: kappa1 side and kappa2 side
  bool lower_ok = false;
  bool upper_ok = false;
  // (chi_plus - chi_minus) / D, which distortion confines to [1/M, M]
  double gap_ratio = 0.0;
};

TwinReport twin_measures(const FiberPair& pair, const Word& w, const Tolerances& tol = {});

// Distance between the shifted periodic sequences sigma^i(u^Z) and sigma^j(v^Z):
// exp(-n) with n the first |k| where they differ, 0 if they coincide.
double base_distance(const Word& u, std::size_t i, const Word& v, std::size_t j);

struct WassersteinPair {
  double formula = 0.0;
  double oracle = 0.0;
};

// Twin-style pair over one base orbit with ordered fiber points.
WassersteinPair wasserstein_periodic(const OrbitMeasure& mu1, const OrbitMeasure& mu2, const Tolerances& tol = {});

// W1 between two periodic orbit measures of arbitrary periods.
double orbit_transport_distance(const OrbitMeasure& mu1, const OrbitMeasure& mu2, std::size_t max_support = 4096);

struct FrequencyBound {
  double lhs = 0.0;
  bool ok = false;
};

FrequencyBound frequency_bound(const FiberPair& pair, const Word& w, const Tolerances& tol = {});

}  // namespace cskew
