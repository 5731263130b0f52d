#include "cskew/maps.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "cskew/errors.hpp"
#include "cskew/numfmt.hpp"

namespace cskew {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_decl(std::string_view decl, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "map declaration '" + std::string(decl) + "': " + why);
}

}  // namespace

FiberMap FiberMap::logistic(double c) {
  if (!(c >= 0.0 && c <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "logistic map needs c in [0,1]");
  return FiberMap(MapFamily::LogisticLike, {c});
}

FiberMap FiberMap::moebius(double A, double B, double d) {
  if (!(A > 0.0 && B > 0.0)) throw Error(ErrorCode::InvalidArgument, "moebius map needs A, B > 0");
  return FiberMap(MapFamily::Moebius, {A, B, d});
}

FiberMap FiberMap::shifted_moebius(double A, double B, double d, double t) {
  if (!(A > 0.0 && B > 0.0)) throw Error(ErrorCode::InvalidArgument, "moebius map needs A, B > 0");
  return FiberMap(MapFamily::ShiftedMoebius, {A, B, d, t});
}

FiberMap FiberMap::affine(double slope, double d, double t) {
  if (!(slope > 0.0)) throw Error(ErrorCode::InvalidArgument, "affine map needs slope > 0");
  return FiberMap(MapFamily::Affine, {slope, d, t});
}

FiberMap FiberMap::parse(std::string_view decl) {
  auto s = trim(decl);
  auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')') bad_decl(decl, "expected name(key=value, ...)");
  std::string name(trim(s.substr(0, open)));
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });

  std::map<std::string, double> kv;
  auto body = s.substr(open + 1, s.size() - open - 2);
  while (!trim(body).empty()) {
    auto comma = body.find(',');
    auto item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) bad_decl(decl, "parameter without '='");
    std::string key(trim(item.substr(0, eq)));
    auto v = parse_double(trim(item.substr(eq + 1)));
    if (!v) bad_decl(decl, "cannot read value of '" + key + "'");
    if (!kv.emplace(key, *v).second) bad_decl(decl, "duplicate parameter '" + key + "'");
  }

  auto take = [&](const char* key, std::optional<double> dflt = std::nullopt) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (!dflt) bad_decl(decl, std::string("missing parameter '") + key + "'");
      return *dflt;
    }
    double v = it->second;
    kv.erase(it);
    return v;
  };

  FiberMap out = [&] {
    if (name == "logistic") return logistic(take("c"));
    if (name == "moebius" || name == "shifted_moebius") {
      double A = take("A"), B = take("B"), d = take("d");
      double t = take("t", name == "moebius" ? std::optional(0.0) : std::nullopt);
      return t == 0.0 && name == "moebius" ? moebius(A, B, d) : shifted_moebius(A, B, d, t);
    }
    if (name == "affine") {
      double slope = kv.count("lambda") ? take("lambda") : take("slope");
      return affine(slope, take("d", 0.0), take("t", 0.0));
    }
    bad_decl(decl, "unknown family '" + name + "'");
  }();
  if (!kv.empty()) bad_decl(decl, "unknown parameter '" + kv.begin()->first + "'");
  return out;
}

double FiberMap::operator()(double x) const noexcept {
  switch (family_) {
    case MapFamily::LogisticLike: return x + p_[0] * x * (1.0 - x);
    case MapFamily::Moebius: {
      double u = x - p_[2];
      return p_[0] * u / (1.0 + p_[1] * u);
    }
    case MapFamily::ShiftedMoebius: {
      double u = x - p_[2];
      return p_[0] * u / (1.0 + p_[1] * u) + p_[3];
    }
    case MapFamily::Affine: return p_[0] * (x - p_[1]) + p_[2];
  }
  return kNaN;
}

double FiberMap::derivative(double x) const noexcept {
  switch (family_) {
    case MapFamily::LogisticLike: return 1.0 + p_[0] - 2.0 * p_[0] * x;
    case MapFamily::Moebius:
    case MapFamily::ShiftedMoebius: {
      double q = 1.0 + p_[1] * (x - p_[2]);
      return p_[0] / (q * q);
    }
    case MapFamily::Affine: return p_[0];
  }
  return kNaN;
}

double FiberMap::log_derivative_slope(double x) const noexcept {
  switch (family_) {
    case MapFamily::LogisticLike: return -2.0 * p_[0] / (1.0 + p_[0] - 2.0 * p_[0] * x);
    case MapFamily::Moebius:
    case MapFamily::ShiftedMoebius: return -2.0 * p_[1] / (1.0 + p_[1] * (x - p_[2]));
    case MapFamily::Affine: return 0.0;
  }
  return kNaN;
}

double FiberMap::inverse(double y) const noexcept {
  switch (family_) {
    case MapFamily::LogisticLike: {
      // root of c x^2 - (1+c) x + y = 0 on the increasing branch, cancellation-free form
      double c = p_[0];
      double disc = (1.0 + c) * (1.0 + c) - 4.0 * c * y;
      if (disc < 0.0) return kNaN;
      return 2.0 * y / ((1.0 + c) + std::sqrt(disc));
    }
    case MapFamily::Moebius:
    case MapFamily::ShiftedMoebius: {
      double yy = family_ == MapFamily::ShiftedMoebius ? y - p_[3] : y;
      double den = p_[0] - p_[1] * yy;
      if (den <= 0.0) return kNaN;
      return p_[2] + yy / den;
    }
    case MapFamily::Affine: return p_[1] + (y - p_[2]) / p_[0];
  }
  return kNaN;
}

FiberMap FiberMap::shifted(double t) const {
  switch (family_) {
    case MapFamily::Moebius: return shifted_moebius(p_[0], p_[1], p_[2], t);
    case MapFamily::ShiftedMoebius: return shifted_moebius(p_[0], p_[1], p_[2], p_[3] + t);
    case MapFamily::Affine: return affine(p_[0], p_[1], p_[2] + t);
    case MapFamily::LogisticLike: break;
  }
  throw Error(ErrorCode::InvalidArgument, "logistic maps have no shift family");
}

std::string FiberMap::describe() const {
  std::ostringstream os;
  switch (family_) {
    case MapFamily::LogisticLike: os << "logistic(c=" << fmt17(p_[0]) << ")"; break;
    case MapFamily::Moebius:
      os << "moebius(A=" << fmt17(p_[0]) << ", B=" << fmt17(p_[1]) << ", d=" << fmt17(p_[2]) << ")";
      break;
    case MapFamily::ShiftedMoebius:
      os << "shifted_moebius(A=" << fmt17(p_[0]) << ", B=" << fmt17(p_[1]) << ", d=" << fmt17(p_[2])
         << ", t=" << fmt17(p_[3]) << ")";
      break;
    case MapFamily::Affine:
      os << "affine(slope=" << fmt17(p_[0]) << ", d=" << fmt17(p_[1]) << ", t=" << fmt17(p_[2]) << ")";
      break;
  }
  return os.str();
}

FiberPair::FiberPair(FiberMap f0, FiberMap f1, double modulus)
    : f0_(std::move(f0)), f1_(std::move(f1)), modulus_(modulus) {
  if (!(modulus > 0.0)) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  double r = f1_.root();
  // no preimage of 0 at all: f1 is nowhere defined on the fiber
  d_ = std::isnan(r) ? 2.0 : std::max(r, 0.0);
}

FiberPair reference_pair() {
  return FiberPair(FiberMap::logistic(0.5), FiberMap::moebius(2.0, 1.0, 0.4), 2.0);
}

bool apply_symbol(const FiberPair& pair, int symbol, double& x, double tol) noexcept {
  double lo = pair.lower(symbol);
  if (!(x >= lo - tol && x <= 1.0 + tol)) return false;
  x = std::clamp(x, lo, 1.0);
  x = pair.map(symbol)(x);
  return true;
}

static void escape(const Word& w, std::size_t k, double x) {
  throw Error(ErrorCode::DomainEscape,
              "word " + w.str() + " leaves the domain at step " + std::to_string(k) + " (x=" + fmt17(x) + ")",
              static_cast<int>(k));
}

double eval_word(const FiberPair& pair, const Word& w, double x, double tol) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!apply_symbol(pair, w[k], x, tol)) escape(w, k, x);
  return x;
}

std::pair<double, double> eval_deriv_word(const FiberPair& pair, const Word& w, double x, double tol) {
  double dx = 1.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    double at = x;
    if (!apply_symbol(pair, w[k], x, tol)) escape(w, k, at);
    dx *= pair.map(w[k]).derivative(std::clamp(at, pair.lower(w[k]), 1.0));
  }
  return {x, dx};
}

double deriv_word(const FiberPair& pair, const Word& w, double x, double tol) {
  return eval_deriv_word(pair, w, x, tol).second;
}

double invert_word(const FiberPair& pair, const Word& w, double y, double tol) {
  for (std::size_t k = w.size(); k-- > 0;) {
    double x = pair.map(w[k]).inverse(y);
    if (!(x >= pair.lower(w[k]) - tol && x <= 1.0 + tol))
      throw Error(ErrorCode::DomainEscape,
                  "word " + w.str() + " has no preimage in the fiber at step " + std::to_string(k),
                  static_cast<int>(k));
    y = std::clamp(x, pair.lower(w[k]), 1.0);
  }
  return y;
}

HypothesisReport check_hypotheses(const FiberPair& pair, int grid_n) {
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  constexpr double eq_tol = 1e-12;
  HypothesisReport rep;
  bool h1 = true, h2 = true;

  auto fail = [&](bool& flag, const char* clause, double where, double mag) {
    flag = false;
    rep.failed_clauses.emplace_back(clause);
    if (mag >= rep.worst_violation.magnitude) rep.worst_violation = {where, mag};
  };
  auto grid = [&](double lo, double hi, int i) { return lo + (hi - lo) * i / (grid_n - 1); };

  const auto& f0 = pair.f0();
  const auto& f1 = pair.f1();
  const double d = pair.d();

  if (std::abs(f0(0.0)) > eq_tol) fail(h1, "f0(0)=0", 0.0, std::abs(f0(0.0)));
  if (std::abs(f0(1.0) - 1.0) > eq_tol) fail(h1, "f0(1)=1", 1.0, std::abs(f0(1.0) - 1.0));
  if (!(f0.derivative(0.0) > 1.0)) fail(h1, "f0'(0)>1", 0.0, 1.0 - f0.derivative(0.0));
  if (!(f0.derivative(1.0) > 0.0 && f0.derivative(1.0) < 1.0))
    fail(h1, "f0'(1) in (0,1)", 1.0, std::abs(f0.derivative(1.0) - 0.5) - 0.5);
  if (!(d > 0.0 && d < 1.0)) fail(h1, "d in (0,1)", d, std::max(-d, d - 1.0));

  bool f0_above = true, f0_incr = true, f1_below = true, f1_incr = true;
  for (int i = 0; i < grid_n; ++i) {
    double x = grid(0.0, 1.0, i);
    if (i > 0 && i < grid_n - 1 && !(f0(x) > x) && f0_above) fail(f0_above, "f0(x)>x", x, x - f0(x));
    if (!(f0.derivative(x) > 0.0) && f0_incr) fail(f0_incr, "f0 increasing", x, -f0.derivative(x));
  }
  double lo1 = std::clamp(d, 0.0, 1.0);
  if (std::abs(f1(lo1)) > eq_tol) fail(h1, "f1(d)=0", lo1, std::abs(f1(lo1)));
  for (int i = 0; i < grid_n; ++i) {
    double x = grid(lo1, 1.0, i);
    if (!(f1(x) < x) && f1_below) fail(f1_below, "f1(x)<x", x, f1(x) - x);
    if (!(f1.derivative(x) > 0.0) && f1_incr) fail(f1_incr, "f1 increasing", x, -f1.derivative(x));
  }
  h1 = h1 && f0_above && f0_incr && f1_below && f1_incr;

  for (int i = 1; i < grid_n; ++i) {
    double x = grid(0.0, 1.0, i - 1), y = grid(0.0, 1.0, i);
    if (!(f0.derivative(y) < f0.derivative(x))) {
      fail(h2, "f0' strictly decreasing", y, f0.derivative(y) - f0.derivative(x));
      break;
    }
  }
  for (int i = 1; i < grid_n; ++i) {
    double x = grid(lo1, 1.0, i - 1), y = grid(lo1, 1.0, i);
    if (f1.derivative(y) > f1.derivative(x)) {
      fail(h2, "f1' non-increasing", y, f1.derivative(y) - f1.derivative(x));
      break;
    }
  }

  // (log f')' must stay in [-M, -1/M]
  double sup = 0.0, inf = std::numeric_limits<double>::infinity();
  double inf_at = 0.0, sup_at = 0.0;
  auto scan = [&](const FiberMap& f, double lo) {
    for (int i = 0; i < grid_n; ++i) {
      double x = grid(lo, 1.0, i);
      double s = -f.log_derivative_slope(x);
      if (s > sup) sup = s, sup_at = x;
      if (s < inf) inf = s, inf_at = x;
    }
  };
  scan(f0, 0.0);
  scan(f1, lo1);
  rep.modulus_estimate = inf > 0.0 ? std::max(sup, 1.0 / inf) : std::numeric_limits<double>::infinity();
  const double M = pair.modulus();
  bool h2p = h2;
  if (sup > M + eq_tol) fail(h2p, "log f' slope <= M", sup_at, sup - M);
  if (inf < 1.0 / M - eq_tol) fail(h2p, "log f' slope >= 1/M", inf_at, 1.0 / M - inf);

  rep.h1_ok = h1;
  rep.h2_ok = h2;
  rep.h2plus_ok = h2p;
  return rep;
}

}  // namespace cskew

namespace cskew {

double inverse_modulus_estimate(const FiberPair& pair, int grid_n) {
  if (grid_n < 2) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  double sup = 0.0, inf = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 2; ++s) {
    const auto& f = pair.map(s);
    const double lo = pair.lower(s);
    for (int i = 0; i < grid_n; ++i) {
      double x = lo + (1.0 - lo) * i / (grid_n - 1);
      double v = -f.log_derivative_slope(x) / f.derivative(x);
      sup = std::max(sup, v);
      inf = std::min(inf, v);
    }
  }
  if (!(inf > 0.0)) return std::numeric_limits<double>::infinity();
  return std::max(sup, 1.0 / inf);
}

}  // namespace cskew
