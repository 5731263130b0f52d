#pragma once

#include <optional>

#include "cskew/maps.hpp"
#include "cskew/word.hpp"

namespace cskew {

enum class OrbitKind { Expanding, Contracting, Parabolic };
enum class FixedPointVariant { None, Parabolic, Pair };

const char* kind_name(OrbitKind k);
const char* variant_name(FixedPointVariant v);

struct PeriodicOrbit {
  Word word;
  double point = 0.0;
  double multiplier = 1.0;
  double exponent = 0.0;  // log(multiplier) / |word|
  OrbitKind kind = OrbitKind::Parabolic;
};

struct FixedPointResult {
  FixedPointVariant variant = FixedPointVariant::None;
  // Parabolic: plus == minus. Pair: plus.point < minus.point.
  std::optional<PeriodicOrbit> plus;
  std::optional<PeriodicOrbit> minus;
};

struct Spine {
  Word word;
  double lo = 0.0;
  double hi = 0.0;
};

struct ProximityCheck {
  double epsilon = 0.0;
  double bound = 0.0;
  double distance = 0.0;
  bool ok = false;
};

// Maximal vertical gap g(z) - z of g = f_[w] on its admissible interval, with z where g'(z) = 1.
struct DiagonalGap {
  double a = 0.0;
  double z = 0.0;
  double gap = 0.0;
};

DiagonalGap diagonal_gap(const FiberPair& pair, const Word& w, const Tolerances& tol = {});

FixedPointResult fixed_points(const FiberPair& pair, const Word& w, const Tolerances& tol = {});

Spine spine_periodic(const FiberPair& pair, const Word& w, const Tolerances& tol = {});
// a_[w^m], increasing in m towards the lower spine endpoint
double spine_limit(const FiberPair& pair, const Word& w, int m, const Tolerances& tol = {});

double distortion_ratio(const FiberPair& pair, const Word& w, double x, double y, const Tolerances& tol = {});

// h(eps) = eps / (exp(sqrt(eps)/M) - 1) + sqrt(eps), continuous at 0
double proximity_bound(double eps, double M);
ProximityCheck fixed_point_proximity_check(const FiberPair& pair, const Word& w, double x,
                                           const Tolerances& tol = {});

// Least k >= 1 with (f0^k)'(x) < 1.
int minimal_contracting_zero_run(const FiberPair& pair, double x, int cap = 100'000);

// Contracting orbit of omega^l 0^k omega^l next to the parabolic orbit of omega.
PeriodicOrbit approximate_parabolic(const FiberPair& pair, const Word& omega, int k, int l,
                                    const Tolerances& tol = {});

}  // namespace cskew
