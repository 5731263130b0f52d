#include "cskew/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "cskew/errors.hpp"
#include "cskew/measures.hpp"
#include "cskew/numfmt.hpp"
#include "cskew/orbits.hpp"
#include "cskew/sft.hpp"
#include "cskew/symbolic.hpp"

namespace cskew {

BifFamily family_case_ia() { return make_family(FiberMap::logistic(0.5), FiberMap::moebius(16.0, 1.0, 0.0), 2.0); }

BifFamily family_case_ii() { return make_family(FiberMap::logistic(0.5), FiberMap::moebius(2.0, 1.0, 0.0), 2.0); }

BifFamily family_reference_shift(const RunConfig& cfg) { return make_family(cfg.f0, cfg.f1, cfg.modulus); }

namespace {

using Detail = std::ostringstream;

// Random admissible word of length n, each symbol drawn among those keeping the orbit of 1 in the domain.
Word random_admissible(const FiberPair& pair, int n, std::mt19937_64& rng, double tol) {
  std::string s;
  double x = 1.0;
  for (int i = 0; i < n; ++i) {
    int sym = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
    double y = x;
    if (!apply_symbol(pair, sym, y, tol)) {
      sym = 1 - sym;
      y = x;
      apply_symbol(pair, sym, y, tol);
    }
    x = y;
    s.push_back(char('0' + sym));
  }
  return Word(s);
}

bool c1_full_entropy(const RunConfig& cfg, Detail& d) {
  bool ok = true;
  for (const auto& [name, fam] : {std::pair{"Ia", family_case_ia()}, std::pair{"II", family_case_ii()}}) {
    auto counts = language_counts(pair_at(fam, fam.t_c), 14, cfg.budgets, cfg.tol.bisect);
    int bad = 0;
    for (const auto& c : counts)
      if (c.count != (std::uint64_t{1} << c.n) || std::abs(c.entropy_upper - std::log(2.0)) > 1e-15) ++bad;
    d << name << ": t_c=" << fmt17(fam.t_c) << " count(14)=" << counts.back().count << " bad_n=" << bad << "; ";
    ok = ok && bad == 0;
  }
  return ok;
}

bool c2_trivial_entropy(const RunConfig& cfg, Detail& d) {
  bool ok = true;
  for (const auto& [name, fam] : {std::pair{"Ia", family_case_ia()}, std::pair{"II", family_case_ii()}}) {
    auto counts = language_counts(pair_at(fam, fam.t_h), 14, cfg.budgets, cfg.tol.bisect);
    int bad = 0;
    for (const auto& c : counts)
      if (c.count != static_cast<std::uint64_t>(c.n + 1)) ++bad;
    d << name << ": t_h=" << fmt17(fam.t_h) << " count(14)=" << counts.back().count << " bad_n=" << bad << "; ";
    ok = ok && bad == 0;
  }
  return ok;
}

bool c3_distortion(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  const double M = pair.modulus();
  std::mt19937_64 rng(cfg.seed);
  int violations = 0;
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < 1000; ++i) {
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    Word w = random_admissible(pair, n, rng, cfg.tol.bisect);
    double a = forward_endpoint(pair, w, cfg.tol.bisect).a;
    std::uniform_real_distribution<double> u(a, 1.0);
    double x, y;
    do {
      x = u(rng);
      y = u(rng);
      if (x > y) std::swap(x, y);
    } while (y - x < 1e-6);
    double r = distortion_ratio(pair, w, x, y, cfg.tol);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    if (r < 1.0 / M - 1e-9 || r > M + 1e-9) ++violations;
  }
  d << "ratio range [" << fmt17(lo) << ", " << fmt17(hi) << "], violations=" << violations;
  return violations == 0;
}

bool c4_exponent_gap(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  int pairs = 0, lower_bad = 0, upper_bad = 0;
  double worst = 0.0, M = 0.0;
  Word worst_word;
  for (const auto& w : list_admissible_up_to(pair, 12, cfg.budgets, cfg.tol.bisect)) {
    if (fixed_points(pair, w, cfg.tol).variant != FixedPointVariant::Pair) continue;
    auto t = twin_measures(pair, w, cfg.tol);
    M = t.modulus;
    ++pairs;
    if (!t.lower_ok) ++lower_bad;
    if (!t.upper_ok) {
      ++upper_bad;
      double excess = std::max(t.chi_plus - t.kappa2, -t.kappa2 - t.chi_minus);
      if (excess > worst) worst = excess, worst_word = w;
    }
  }
  d << "M=" << fmt17(M) << " hyperbolic pairs=" << pairs << " kappa1-side failures=" << lower_bad << " kappa2-side failures=" << upper_bad;
  if (upper_bad) d << " (largest excess " << fmt17(worst) << " at " << worst_word.str() << ")";
  return pairs > 0 && lower_bad == 0 && upper_bad == 0;
}

bool c5_wasserstein(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  int pairs = 0, bad = 0;
  double worst = 0.0;
  for (const auto& w : list_admissible_up_to(pair, 10, cfg.budgets, cfg.tol.bisect)) {
    if (fixed_points(pair, w, cfg.tol).variant != FixedPointVariant::Pair) continue;
    auto t = twin_measures(pair, w, cfg.tol);
    auto wp = wasserstein_periodic(t.mu_plus, t.mu_minus, cfg.tol);
    double e = std::abs(wp.formula - wp.oracle);
    worst = std::max(worst, e);
    ++pairs;
    if (e > 1e-9) ++bad;
  }
  d << "twin pairs=" << pairs << " max |formula-oracle|=" << fmt17(worst) << " failures=" << bad;
  return pairs > 0 && bad == 0;
}

bool c6_frequency(const RunConfig& cfg, Detail& d) {
  std::vector<std::pair<std::string, FiberPair>> pairs{{"REF", cfg.pair()}};
  auto fam = family_case_ia();
  for (double s : {0.2, 0.4, 0.6, 0.8}) {
    double t = fam.t_h + s * (fam.t_c - fam.t_h);
    pairs.emplace_back("Ia@t=" + fmt17(t), pair_at(fam, t));
  }
  bool ok = true;
  for (const auto& [name, pair] : pairs) {
    int periodic = 0, a_bad = 0, violators = 0, b_bad = 0;
    for (const auto& w : list_admissible_up_to(pair, 14, cfg.budgets, cfg.tol.bisect)) {
      auto fb = frequency_bound(pair, w, cfg.tol);
      bool lift = fixed_points(pair, w, cfg.tol).variant != FixedPointVariant::None;
      if (lift) {
        ++periodic;
        if (fb.lhs > 1e-12) ++a_bad;
      }
      if (fb.lhs > 0.02) {
        ++violators;
        if (lift) ++b_bad;
      }
    }
    d << name << ": periodic=" << periodic << " (a)fail=" << a_bad << " violators=" << violators
      << " (b)fail=" << b_bad << "; ";
    ok = ok && a_bad == 0 && b_bad == 0;
  }
  return ok;
}

bool c7_trichotomy(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  int words = 0, shape_bad = 0, spine_checked = 0, spine_bad = 0;
  double worst = 0.0;
  Word worst_word;
  for (const auto& w : list_admissible_up_to(pair, 12, cfg.budgets, cfg.tol.bisect)) {
    ++words;
    auto fp = fixed_points(pair, w, cfg.tol);
    if (fp.variant == FixedPointVariant::None) continue;
    if (fp.variant == FixedPointVariant::Pair) {
      double p = fp.plus->point, q = fp.minus->point;
      bool good = p < q;
      for (int i = 1; i <= 10 && good; ++i) {
        double x = p + (q - p) * i / 11.0;
        good = eval_word(pair, w, x, cfg.tol.bisect) > x;
      }
      if (!good) ++shape_bad;
    }
    ++spine_checked;
    double e = std::abs(spine_limit(pair, w, 20, cfg.tol) - fp.plus->point);
    if (e > 1e-8) {
      ++spine_bad;
      if (e > worst) worst = e, worst_word = w;
    }
  }
  d << "words=" << words << " shape failures=" << shape_bad << " spines=" << spine_checked
    << " spine mismatches>1e-8=" << spine_bad;
  if (spine_bad) d << " (worst " << fmt17(worst) << " at " << worst_word.str() << ")";
  return shape_bad == 0 && spine_bad == 0;
}

bool c8_horseshoe(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  auto words = crossing_words(pair, 6, 0.45, cfg.tol);
  auto h = build_horseshoe(pair, words, 0.1, 0.3, 0.45, cfg.tol, 1000);
  std::mt19937_64 rng(cfg.seed);
  int good = 0;
  const int blocks = (60 + h.k + h.s - 1) / (h.k + h.s);
  for (int i = 0; i < 100; ++i) {
    Word s;
    for (int b = 0; b < blocks; ++b)
      s = s + h.padded[std::uniform_int_distribution<std::size_t>(0, h.padded.size() - 1)(rng)];
    if (is_forward_admissible(pair, s, cfg.tol.bisect)) ++good;
  }
  d << "|W'|=" << words.size() << " s=" << h.s << " p-=" << fmt17(h.p_minus)
    << " contraction_sup=" << fmt17(h.contraction_sup) << " admissible concatenations=" << good << "/100";
  return h.contraction_sup < 1.0 && good == 100;
}

bool c9_join(const RunConfig& cfg, Detail& d) {
  auto pair = cfg.pair();
  auto r = join_sfts(pair, orbit_sft(Word("1000")), orbit_sft(Word("10000")), cfg.seed, cfg.tol);
  const auto& c = r.checks;
  d << "N0=" << r.cert.N0 << " N1=" << r.cert.N1 << " windows=" << r.s3.allowed.size()
    << " contains_inputs=" << c.contains_inputs << " rejects_0^2N1=" << c.rejects_zero_block
    << " samples=" << c.samples_admissible << "/" << c.samples << " bridges=" << c.bridges_allowed << "/" << c.bridges;
  return c.ok() && c.samples == 200 && c.bridges == 50;
}

bool c10_parabolic(const RunConfig& cfg, Detail& d) {
  auto fam = family_reference_shift(cfg);
  Word omega("10");
  auto sn = find_saddle_node(fam, omega, cfg.tol);
  auto pair = pair_at(fam, sn.t);
  int k = minimal_contracting_zero_run(pair, sn.orbit.point);
  auto parabolic = orbit_measure(pair, omega, sn.orbit.point, cfg.tol.bisect);
  bool contracting = true, monotone = true;
  double prev = INFINITY, last = INFINITY;
  d << "t*=" << fmt17(sn.t) << " k=" << k << " W1:";
  for (int l = 1; l <= 6; ++l) {
    auto orb = approximate_parabolic(pair, omega, k, l, cfg.tol);
    contracting = contracting && orb.multiplier < 1.0;
    last = orbit_transport_distance(orbit_measure(pair, orb.word, orb.point, cfg.tol.bisect), parabolic);
    monotone = monotone && last < prev;
    prev = last;
    d << " " << fmt17(last);
  }
  d << " contracting=" << contracting << " decreasing=" << monotone << " final<0.05=" << (last < 0.05);
  return contracting && monotone && last < 0.05;
}

bool c11_entropy_jump(const RunConfig& cfg, Detail& d) {
  auto fam = family_case_ia();
  double C = jump_constant(fam, fam.t_c);
  auto eb = entropy_bound(fam, fam.t_c);
  double expected = std::log(3.0) - 2.0 / 3.0 * std::log(2.0);
  double enumerated = count_admissible(pair_at(fam, fam.t_c), 14, cfg.budgets, cfg.tol.bisect).entropy_upper;
  d << "C(t_c)=" << fmt17(C) << " p=" << fmt17(eb.p) << " H(p)=" << fmt17(eb.H) << " enumerated h(14)="
    << fmt17(enumerated) << " jump=" << fmt17(enumerated - eb.H);
  return std::abs(C - 0.5) < 1e-12 && std::abs(eb.H - expected) < 1e-12 && eb.H < std::log(2.0) &&
         std::abs(enumerated - std::log(2.0)) < 1e-15;
}

struct Criterion {
  const char* name;
  bool (*fn)(const RunConfig&, Detail&);
};

const Criterion kCriteria[] = {
    {"full-entropy endpoint", c1_full_entropy},
    {"trivial-entropy endpoint", c2_trivial_entropy},
    {"distortion", c3_distortion},
    {"exponent gap", c4_exponent_gap},
    {"Wasserstein formula", c5_wasserstein},
    {"frequency obstruction", c6_frequency},
    {"trichotomy and spines", c7_trichotomy},
    {"horseshoe construction", c8_horseshoe},
    {"SFT join", c9_join},
    {"parabolic approximation", c10_parabolic},
    {"entropy-jump arithmetic", c11_entropy_jump},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id, const RunConfig& cfg) {
  if (id < 1 || id > criterion_count()) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
  const auto& c = kCriteria[id - 1];
  CriterionResult r{id, c.name};
  Detail d;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.passed = c.fn(cfg, d);
  } catch (const Error& e) {
    d << " error " << error_name(e.code()) << ": " << e.what();
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = d.str();
  return r;
}

std::vector<CriterionResult> run_suite(const RunConfig& cfg, const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= criterion_count(); ++i) {
    out.push_back(run_criterion(i, cfg));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace cskew
