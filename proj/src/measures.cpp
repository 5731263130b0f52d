#include "cskew/measures.hpp"

#include <cmath>
#include <numeric>

#include "cskew/errors.hpp"
#include "cskew/orbits.hpp"
#include "cskew/transport.hpp"

namespace cskew {

OrbitMeasure orbit_measure(const FiberPair& pair, const Word& w, double x0, double tol) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "orbit measure needs a nonempty word");
  OrbitMeasure mu;
  mu.word = w;
  mu.points.reserve(w.size());
  double x = x0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    mu.points.push_back(x);
    if (!apply_symbol(pair, w[i], x, tol))
      throw Error(ErrorCode::DomainEscape, "orbit of " + w.str() + " leaves the domain", static_cast<int>(i));
  }
  mu.x_integral = std::accumulate(mu.points.begin(), mu.points.end(), 0.0) / static_cast<double>(w.size());
  mu.freq1 = w.freq1();
  mu.freq0 = 1.0 - mu.freq1;
  return mu;
}

namespace {

double c_of(double q) {
  if (q == 0.0) return 0.0;
  return std::log(q / -std::expm1(-q));
}

}  // namespace

double kappa_c1(double a, double M) { return c_of(a / M); }
double kappa_c2(double a, double M) { return c_of(a * M); }

Kappa kappa(double D, double M) {
  if (!(D >= 0.0 && M > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa needs D >= 0 and M > 0");
  double a = D / 3.0;
  return {a * kappa_c1(a, M), a * kappa_c2(a, M)};
}

TwinReport twin_measures(const FiberPair& pair, const Word& w, const Tolerances& tol) {
  auto fp = fixed_points(pair, w, tol);
  if (fp.variant != FixedPointVariant::Pair)
    throw Error(ErrorCode::NotHyperbolicPair, "word " + w.str() + " has no hyperbolic pair");
  TwinReport r;
  r.word = w;
  r.mu_plus = orbit_measure(pair, w, fp.plus->point, tol.bisect);
  r.mu_minus = orbit_measure(pair, w, fp.minus->point, tol.bisect);
  r.D = r.mu_minus.x_integral - r.mu_plus.x_integral;
  r.chi_plus = fp.plus->exponent;
  r.chi_minus = fp.minus->exponent;
  // one modulus for the forward and the inverse system
  r.modulus = std::max(pair.modulus(), inverse_modulus_estimate(pair));
  auto k = kappa(std::max(r.D, 0.0), r.modulus);
  r.kappa1 = k.kappa1;
  r.kappa2 = k.kappa2;
  const double s = tol.meas;
  r.lower_ok = r.kappa1 > 0.0 && r.chi_minus <= -r.kappa1 + s && r.chi_plus >= r.kappa1 - s;
  r.upper_ok = r.chi_minus >= -r.kappa2 - s && r.chi_plus <= r.kappa2 + s;
  r.bounds_ok = r.lower_ok && r.upper_ok;
  r.gap_ratio = r.D > 0.0 ? (r.chi_plus - r.chi_minus) / r.D : 0.0;
  return r;
}

double base_distance(const Word& u, std::size_t i, const Word& v, std::size_t j) {
  const std::size_t p = u.size(), q = v.size();
  const std::size_t span = std::lcm(p, q);
  auto at = [](const Word& w, std::size_t off, long long k) {
    long long n = static_cast<long long>(w.size());
    return w[static_cast<std::size_t>(((static_cast<long long>(off) + k) % n + n) % n)];
  };
  for (std::size_t n = 0; n <= span; ++n) {
    long long k = static_cast<long long>(n);
    if (at(u, i, k) != at(v, j, k) || at(u, i, -k) != at(v, j, -k)) return std::exp(-static_cast<double>(n));
  }
  return 0.0;
}

namespace {

CostMatrix orbit_costs(const OrbitMeasure& mu1, const OrbitMeasure& mu2, std::size_t L) {
  CostMatrix m{L, std::vector<double>(L * L)};
  const std::size_t p = mu1.points.size(), q = mu2.points.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      double base = base_distance(mu1.word, i % p, mu2.word, j % q);
      m.c[i * L + j] = std::max(base, std::abs(mu1.points[i % p] - mu2.points[j % q]));
    }
  return m;
}

}  // namespace

WassersteinPair wasserstein_periodic(const OrbitMeasure& mu1, const OrbitMeasure& mu2, const Tolerances& tol) {
  if (mu1.word != mu2.word || mu1.points.size() != mu2.points.size())
    throw Error(ErrorCode::CouplingHypothesisViolated, "measures live on different base orbits");
  for (std::size_t i = 0; i < mu1.points.size(); ++i)
    if (mu1.points[i] > mu2.points[i] + tol.meas)
      throw Error(ErrorCode::CouplingHypothesisViolated, "fiber points are not ordered");
  const std::size_t n = mu1.points.size();
  auto m = orbit_costs(mu1, mu2, n);
  double best = n <= 8 ? permutation_cost(m) : assignment_cost(m);
  return {mu2.x_integral - mu1.x_integral, best / static_cast<double>(n)};
}

double orbit_transport_distance(const OrbitMeasure& mu1, const OrbitMeasure& mu2, std::size_t max_support) {
  std::size_t L = std::lcm(mu1.points.size(), mu2.points.size());
  if (L == 0) throw Error(ErrorCode::InvalidArgument, "empty orbit measure");
  if (L > max_support)
    throw Error(ErrorCode::ResourceLimit, "common period " + std::to_string(L) + " exceeds transport limit");
  return assignment_cost(orbit_costs(mu1, mu2, L)) / static_cast<double>(L);
}

FrequencyBound frequency_bound(const FiberPair& pair, const Word& w, const Tolerances& tol) {
  FrequencyBound b;
  b.lhs = w.freq0() * std::log(pair.f0().derivative(1.0)) + w.freq1() * std::log(pair.f1().derivative(1.0));
  b.ok = b.lhs <= tol.meas;
  return b;
}

}  // namespace cskew
