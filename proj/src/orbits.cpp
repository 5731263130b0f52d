#include "cskew/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "cskew/errors.hpp"
#include "cskew/symbolic.hpp"

namespace cskew {

const char* kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::Expanding: return "Expanding";
    case OrbitKind::Contracting: return "Contracting";
    case OrbitKind::Parabolic: return "Parabolic";
  }
  return "?";
}

const char* variant_name(FixedPointVariant v) {
  switch (v) {
    case FixedPointVariant::None: return "None";
    case FixedPointVariant::Parabolic: return "Parabolic";
    case FixedPointVariant::Pair: return "Pair";
  }
  return "?";
}

namespace {

// Bisection down to adjacent doubles. pred(lo) is true and pred(hi) false on entry.
template <class Pred>
std::pair<double, double> bisect(double lo, double hi, Pred pred) {
  for (int it = 0; it < 2000; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pred(mid) ? lo : hi) = mid;
  }
  return {lo, hi};
}

PeriodicOrbit make_orbit(const FiberPair& pair, const Word& w, double p, const Tolerances& tol) {
  PeriodicOrbit o;
  o.word = w;
  o.point = p;
  o.multiplier = deriv_word(pair, w, p, tol.bisect);
  o.exponent = std::log(o.multiplier) / static_cast<double>(w.size());
  if (o.multiplier > 1.0 + tol.parab)
    o.kind = OrbitKind::Expanding;
  else if (o.multiplier < 1.0 - tol.parab)
    o.kind = OrbitKind::Contracting;
  else
    o.kind = OrbitKind::Parabolic;
  return o;
}

}  // namespace

DiagonalGap diagonal_gap(const FiberPair& pair, const Word& w, const Tolerances& tol) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "empty word has no fixed-point structure");
  DiagonalGap g;
  g.a = forward_endpoint(pair, w, tol.bisect).a;
  auto slope_above_one = [&](double x) { return deriv_word(pair, w, x, tol.bisect) > 1.0; };
  if (!slope_above_one(g.a))
    g.z = g.a;
  else if (slope_above_one(1.0))
    g.z = 1.0;
  else
    g.z = bisect(g.a, 1.0, slope_above_one).first;
  g.gap = eval_word(pair, w, g.z, tol.bisect) - g.z;
  return g;
}

FixedPointResult fixed_points(const FiberPair& pair, const Word& w, const Tolerances& tol) {
  auto g = diagonal_gap(pair, w, tol);
  FixedPointResult r;
  if (g.gap < -tol.parab) return r;
  if (g.gap <= tol.parab) {
    r.variant = FixedPointVariant::Parabolic;
    r.plus = r.minus = make_orbit(pair, w, g.z, tol);
    return r;
  }
  auto phi = [&](double x) { return eval_word(pair, w, x, tol.bisect) - x; };
  auto closer = [&](std::pair<double, double> br) {
    return std::abs(phi(br.first)) <= std::abs(phi(br.second)) ? br.first : br.second;
  };
  double p_plus = phi(g.a) >= 0.0 ? g.a : closer(bisect(g.a, g.z, [&](double x) { return phi(x) < 0.0; }));
  double p_minus = phi(1.0) >= 0.0 ? 1.0 : closer(bisect(g.z, 1.0, [&](double x) { return phi(x) > 0.0; }));
  r.variant = FixedPointVariant::Pair;
  r.plus = make_orbit(pair, w, p_plus, tol);
  r.minus = make_orbit(pair, w, p_minus, tol);
  return r;
}

Spine spine_periodic(const FiberPair& pair, const Word& w, const Tolerances& tol) {
  auto fp = fixed_points(pair, w, tol);
  if (fp.variant == FixedPointVariant::None)
    throw Error(ErrorCode::NoFixedPoint, "(" + w.str() + ")^Z is not admissible: no fixed point");
  return {w, fp.plus->point, fp.minus->point};
}

double spine_limit(const FiberPair& pair, const Word& w, int m, const Tolerances& tol) {
  return forward_endpoint(pair, w.repeat(static_cast<std::size_t>(m)), tol.bisect).a;
}

double distortion_ratio(const FiberPair& pair, const Word& w, double x, double y, const Tolerances& tol) {
  if (!(y - x >= tol.bisect))
    throw Error(ErrorCode::DegenerateDenominator, "distortion ratio needs y - x >= tolerance");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto& f = pair.map(w[k]);
    double xc = std::clamp(x, pair.lower(w[k]), 1.0), yc = std::clamp(y, pair.lower(w[k]), 1.0);
    num += std::log(f.derivative(xc)) - std::log(f.derivative(yc));
    den += y - x;
    if (!apply_symbol(pair, w[k], x, tol.bisect) || !apply_symbol(pair, w[k], y, tol.bisect))
      throw Error(ErrorCode::DomainEscape, "word " + w.str() + " not admissible at both points",
                  static_cast<int>(k));
  }
  return num / den;
}

double proximity_bound(double eps, double M) {
  if (eps <= 0.0) return 0.0;
  double r = std::sqrt(eps);
  return eps / std::expm1(r / M) + r;
}

ProximityCheck fixed_point_proximity_check(const FiberPair& pair, const Word& w, double x,
                                           const Tolerances& tol) {
  auto fp = fixed_points(pair, w, tol);
  if (fp.variant == FixedPointVariant::None)
    throw Error(ErrorCode::NoFixedPoint, "word " + w.str() + " has no fixed point");
  ProximityCheck c;
  c.epsilon = std::abs(eval_word(pair, w, x, tol.bisect) - x);
  c.bound = proximity_bound(c.epsilon, pair.modulus());
  c.distance = std::min(std::abs(x - fp.plus->point), std::abs(x - fp.minus->point));
  c.ok = c.distance <= c.bound + tol.bisect;
  return c;
}

int minimal_contracting_zero_run(const FiberPair& pair, double x, int cap) {
  double d = 1.0;
  for (int k = 1; k <= cap; ++k) {
    d *= pair.f0().derivative(x);
    x = pair.f0()(x);
    if (d < 1.0) return k;
  }
  throw Error(ErrorCode::NonTerminating, "f0 derivative product stays >= 1");
}

PeriodicOrbit approximate_parabolic(const FiberPair& pair, const Word& omega, int k, int l,
                                    const Tolerances& tol) {
  if (k < 0 || l < 1) throw Error(ErrorCode::InvalidArgument, "need k >= 0 and l >= 1");
  if (fixed_points(pair, omega, tol).variant != FixedPointVariant::Parabolic)
    throw Error(ErrorCode::NotParabolic, "word " + omega.str() + " has no parabolic orbit here");
  Word eta = omega.repeat(l) + Word::zeros(k) + omega.repeat(l);
  auto fp = fixed_points(pair, eta, tol);
  if (fp.variant != FixedPointVariant::Pair)
    throw Error(ErrorCode::NoFixedPoint, "word " + eta.str() + " has no contracting fixed point");
  return *fp.minus;
}

}  // namespace cskew
