#include "cskew/commands.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "cskew/bifurcation.hpp"
#include "cskew/errors.hpp"
#include "cskew/measures.hpp"
#include "cskew/numfmt.hpp"
#include "cskew/orbits.hpp"
#include "cskew/sft.hpp"
#include "cskew/symbolic.hpp"
#include "cskew/verify.hpp"

namespace cskew {

using json = nlohmann::ordered_json;

std::string CommandOptions::str(const std::string& key, const std::string& dflt) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? dflt : it->second;
}

int CommandOptions::integer(const std::string& key, int dflt) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return dflt;
  auto v = parse_double(it->second);
  if (!v || *v != std::floor(*v) || std::abs(*v) > 1e9)
    throw Error(ErrorCode::InvalidArgument, "option --" + key + " expects an integer");
  return static_cast<int>(*v);
}

double CommandOptions::real(const std::string& key, double dflt) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return dflt;
  auto v = parse_double(it->second);
  if (!v) throw Error(ErrorCode::InvalidArgument, "option --" + key + " expects a number");
  return *v;
}

namespace {

using Cell = std::variant<std::monostate, double, std::int64_t, std::uint64_t, bool, std::string>;

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<Cell>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << text(r[i]);
      os << "\n";
    }
    return os.str();
  }

  std::string json_array() const {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) o[cols[i]] = value(r[i]);
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }

  static std::string text(const Cell& c) {
    struct V {
      std::string operator()(std::monostate) const { return ""; }
      std::string operator()(double d) const { return fmt17(d); }
      std::string operator()(std::int64_t i) const { return std::to_string(i); }
      std::string operator()(std::uint64_t i) const { return std::to_string(i); }
      std::string operator()(bool b) const { return b ? "true" : "false"; }
      std::string operator()(const std::string& s) const {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
      }
    };
    return std::visit(V{}, c);
  }

  static json value(const Cell& c) {
    struct V {
      json operator()(std::monostate) const { return nullptr; }
      json operator()(double d) const { return std::isfinite(d) ? json(d) : json(nullptr); }
      json operator()(std::int64_t i) const { return i; }
      json operator()(std::uint64_t i) const { return i; }
      json operator()(bool b) const { return b; }
      json operator()(const std::string& s) const { return s; }
    };
    return std::visit(V{}, c);
  }
};

json num(double d) { return std::isfinite(d) ? json(d) : json(nullptr); }

CommandResult emit(const Table& t, const CommandOptions& o) {
  CommandResult r;
  r.body = o.json() ? t.json_array() : t.csv();
  r.rows = t.rows.size();
  return r;
}

CommandResult emit_object(const json& obj) {
  CommandResult r;
  r.body = obj.dump(2) + "\n";
  r.rows = 1;
  return r;
}

Cell i64(long long v) { return static_cast<std::int64_t>(v); }

void require_hypotheses(const RunConfig& cfg, const CommandOptions& o) {
  if (o.str("force", "false") == "true") return;
  auto rep = check_hypotheses(cfg.pair(), 1000);
  if (rep.h1_ok && rep.h2_ok && rep.h2plus_ok) return;
  std::string clauses;
  for (const auto& c : rep.failed_clauses) clauses += (clauses.empty() ? "" : "; ") + c;
  throw Error(ErrorCode::ConfigError, "declared maps fail the hypotheses (" + clauses + "); use --force to run anyway");
}

std::vector<Word> word_list(const std::string& csv) {
  std::vector<Word> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.emplace_back(item);
  return out;
}

CommandResult cmd_hypotheses(const RunConfig& cfg, const CommandOptions& o) {
  auto rep = check_hypotheses(cfg.pair(), o.integer("grid", 1000));
  std::string clauses;
  for (const auto& c : rep.failed_clauses) clauses += (clauses.empty() ? "" : ";") + c;
  Table t{{"h1_ok", "h2_ok", "h2plus_ok", "modulus", "modulus_estimate", "worst_location", "worst_magnitude",
           "failed_clauses"}};
  t.rows.push_back({rep.h1_ok, rep.h2_ok, rep.h2plus_ok, cfg.modulus, rep.modulus_estimate,
                    rep.worst_violation.location, rep.worst_violation.magnitude, clauses});
  auto r = emit(t, o);
  if (!(rep.h1_ok && rep.h2_ok && rep.h2plus_ok)) r.warnings.push_back("hypotheses fail: " + clauses);
  return r;
}

CommandResult cmd_words(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  auto pair = cfg.pair();
  int n = o.integer("n", 4);
  bool all = o.str("all", "false") == "true";
  Table t{{"word", "admissible", "a_endpoint"}};
  if (all) {
    if (n < 1 || n > 24) throw Error(ErrorCode::InvalidArgument, "--all lists 2^n words; keep n in 1..24");
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::string s(n, '0');
      for (int i = 0; i < n; ++i)
        if (m >> (n - 1 - i) & 1) s[i] = '1';
      Word w(s);
      bool adm = is_forward_admissible(pair, w, cfg.tol.bisect);
      t.rows.push_back({s, adm, adm ? Cell(forward_endpoint(pair, w, cfg.tol.bisect).a) : Cell()});
    }
  } else {
    Budgets b = cfg.budgets;
    for (const auto& w : list_admissible(pair, n, b, cfg.tol.bisect))
      t.rows.push_back({w.str(), true, forward_endpoint(pair, w, cfg.tol.bisect).a});
  }
  return emit(t, o);
}

CommandResult cmd_entropy(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  Table t{{"n", "count", "entropy_upper"}};
  for (const auto& c : language_counts(cfg.pair(), o.integer("n", 12), cfg.budgets, cfg.tol.bisect))
    t.rows.push_back({i64(c.n), c.count, c.entropy_upper});
  return emit(t, o);
}

CommandResult cmd_orbit(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  Word w(o.str("word", "1000"));
  auto fp = fixed_points(cfg.pair(), w, cfg.tol);
  json j;
  j["word"] = w.str();
  j["variant"] = variant_name(fp.variant);
  bool has = fp.variant != FixedPointVariant::None;
  j["p_plus"] = has ? num(fp.plus->point) : json(nullptr);
  j["p_minus"] = has ? num(fp.minus->point) : json(nullptr);
  j["mult_plus"] = has ? num(fp.plus->multiplier) : json(nullptr);
  j["mult_minus"] = has ? num(fp.minus->multiplier) : json(nullptr);
  j["chi_plus"] = has ? num(fp.plus->exponent) : json(nullptr);
  j["chi_minus"] = has ? num(fp.minus->exponent) : json(nullptr);
  return emit_object(j);
}

CommandResult cmd_twins(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  auto pair = cfg.pair();
  std::vector<Word> words;
  bool single = o.has("word");
  if (single)
    words.emplace_back(o.str("word", ""));
  else
    words = list_admissible_up_to(pair, o.integer("max-len", 8), cfg.budgets, cfg.tol.bisect);
  Table t{{"word", "D", "chi_plus", "chi_minus", "kappa1", "kappa2", "bounds_ok"}};
  int failures = 0;
  for (const auto& w : words) {
    if (!single && fixed_points(pair, w, cfg.tol).variant != FixedPointVariant::Pair) continue;
    auto r = twin_measures(pair, w, cfg.tol);
    if (!r.bounds_ok) ++failures;
    t.rows.push_back({w.str(), r.D, r.chi_plus, r.chi_minus, r.kappa1, r.kappa2, r.bounds_ok});
  }
  auto res = emit(t, o);
  if (failures) res.warnings.push_back(std::to_string(failures) + " twin pairs violate the exponent-gap chain");
  return res;
}

CommandResult cmd_freq(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  auto pair = cfg.pair();
  std::vector<Word> words;
  bool single = o.has("word");
  if (single)
    words.emplace_back(o.str("word", ""));
  else
    words = list_admissible_up_to(pair, o.integer("max-len", 10), cfg.budgets, cfg.tol.bisect);
  Table t{{"word", "lhs", "ok"}};
  for (const auto& w : words) {
    if (!single && fixed_points(pair, w, cfg.tol).variant == FixedPointVariant::None) continue;
    auto b = frequency_bound(pair, w, cfg.tol);
    t.rows.push_back({w.str(), b.lhs, b.ok});
  }
  return emit(t, o);
}

CommandResult cmd_horseshoe(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  auto pair = cfg.pair();
  double a = o.real("a", 0.45);
  auto words = o.has("words") ? word_list(o.str("words", "")) : crossing_words(pair, o.integer("k", 6), a, cfg.tol);
  auto h = build_horseshoe(pair, words, o.real("eps", 0.1), o.real("L", 0.3), a, cfg.tol, o.integer("grid", 1000));
  json j;
  j["a"] = h.a;
  j["k"] = h.k;
  j["epsilon"] = h.epsilon;
  j["L"] = h.L;
  j["z_lower"] = h.z_lower;
  j["ell"] = h.ell;
  j["ell_prime"] = h.ell_prime;
  j["s"] = h.s;
  j["window"] = h.k + h.s;
  j["word_count"] = h.words.size();
  j["p_minus"] = h.p_minus;
  j["contraction_sup"] = h.contraction_sup;
  j["entropy"] = h.entropy;
  j["sft_entropy"] = sft_entropy(horseshoe_sft(h));
  auto r = emit_object(j);
  for (const auto& w : h.padded) r.aux += w.str() + "\n";
  return r;
}

CommandResult cmd_join(const RunConfig& cfg, const CommandOptions& o) {
  require_hypotheses(cfg, o);
  auto s1 = orbit_sft(Word(o.str("w1", "1000")));
  auto s2 = orbit_sft(Word(o.str("w2", "10000")));
  auto res = join_sfts(cfg.pair(), s1, s2, cfg.seed, cfg.tol, o.integer("samples", 200), o.integer("sample-len", 60),
                       o.integer("bridges", 50));
  json j;
  j["N0"] = res.cert.N0;
  j["N1"] = res.cert.N1;
  j["a"] = res.cert.a;
  j["b"] = res.cert.b;
  j["window"] = res.s3.window;
  json sizes = json::array();
  for (const auto& c : res.cert.word_classes) sizes.push_back(c.size());
  j["class_sizes"] = sizes;
  j["allowed_count"] = res.s3.allowed.size();
  j["entropy"] = num(sft_entropy(res.s3));
  const auto& c = res.checks;
  j["checks"] = {{"contains_inputs", c.contains_inputs},
                 {"rejects_zero_block", c.rejects_zero_block},
                 {"samples", c.samples},
                 {"samples_admissible", c.samples_admissible},
                 {"bridges", c.bridges},
                 {"bridges_allowed", c.bridges_allowed},
                 {"bridges_extended", c.bridges_extended}};
  auto r = emit_object(j);
  for (const auto& w : res.s3.allowed) r.aux += w.str() + "\n";
  if (!c.ok()) r.warnings.push_back("join verification did not fully pass");
  return r;
}

CommandResult cmd_bifscan(const RunConfig& cfg, const CommandOptions& o) {
  auto fam = make_family(cfg.f0, cfg.f1, cfg.modulus);
  auto rows = scan(fam, parameter_grid(fam, o.integer("t-steps", 20)), o.integer("n", 10), cfg.budgets, cfg.tol.bisect);
  Table t{{"t", "d_t", "C_t", "p_t", "H_p_t", "count_n", "entropy_upper_n", "k0_t"}};
  CommandResult r;
  for (const auto& row : rows) {
    t.rows.push_back({row.t, row.d_t, row.C_t, row.p_t, row.H_p_t, row.count_n, row.entropy_upper_n,
                      row.k0_t ? i64(*row.k0_t) : Cell()});
    if (!row.error.empty()) r.warnings.push_back("t=" + fmt17(row.t) + ": " + row.error);
  }
  auto out = emit(t, o);
  out.warnings = std::move(r.warnings);
  return out;
}

CommandResult cmd_saddle_node(const RunConfig& cfg, const CommandOptions& o) {
  auto fam = make_family(cfg.f0, cfg.f1, cfg.modulus);
  Word w(o.str("word", "10"));
  auto sn = find_saddle_node(fam, w, cfg.tol);
  json j;
  j["word"] = w.str();
  j["case"] = exit_case_name(fam.exit_case);
  j["t_h"] = fam.t_h;
  j["t_c"] = fam.t_c;
  j["t_star"] = sn.t;
  j["point"] = sn.orbit.point;
  j["multiplier"] = sn.orbit.multiplier;
  j["kind"] = kind_name(sn.orbit.kind);
  return emit_object(j);
}

CommandResult cmd_parabolic_approx(const RunConfig& cfg, const CommandOptions& o) {
  auto fam = make_family(cfg.f0, cfg.f1, cfg.modulus);
  Word omega(o.str("word", "10"));
  auto sn = find_saddle_node(fam, omega, cfg.tol);
  auto pair = pair_at(fam, sn.t);
  int k = o.has("k") ? o.integer("k", 1) : minimal_contracting_zero_run(pair, sn.orbit.point);
  auto parabolic = orbit_measure(pair, omega, sn.orbit.point, cfg.tol.bisect);
  Table t{{"l", "t_star", "k", "period", "point", "multiplier", "distance", "w1"}};
  for (int l = 1; l <= o.integer("lmax", 6); ++l) {
    auto orb = approximate_parabolic(pair, omega, k, l, cfg.tol);
    double w1 = orbit_transport_distance(orbit_measure(pair, orb.word, orb.point, cfg.tol.bisect), parabolic);
    t.rows.push_back({i64(l), sn.t, i64(k), i64(static_cast<long long>(orb.word.size())), orb.point, orb.multiplier,
                      orb.point - sn.orbit.point, w1});
  }
  return emit(t, o);
}

CommandResult cmd_verify(const RunConfig& cfg, const CommandOptions& o) {
  std::vector<int> ids;
  if (o.has("only")) {
    std::stringstream ss(o.str("only", ""));
    std::string item;
    while (std::getline(ss, item, ','))
      if (auto v = parse_double(item)) ids.push_back(static_cast<int>(*v));
  } else {
    for (int i = 1; i <= criterion_count(); ++i) ids.push_back(i);
  }
  Table t{{"id", "criterion", "passed", "seconds", "detail"}};
  CommandResult r;
  bool failed = false;
  for (int id : ids) {
    auto c = run_criterion(id, cfg);
    failed = failed || !c.passed;
    t.rows.push_back({i64(c.id), c.name, c.passed, c.seconds, c.detail});
    if (!c.passed) r.warnings.push_back("criterion " + std::to_string(c.id) + " failed: " + c.name);
  }
  auto out = emit(t, o);
  out.warnings = std::move(r.warnings);
  out.verification_failed = failed;
  return out;
}

using Handler = CommandResult (*)(const RunConfig&, const CommandOptions&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"hypotheses", cmd_hypotheses}, {"words", cmd_words},
      {"entropy", cmd_entropy},       {"orbit", cmd_orbit},
      {"twins", cmd_twins},           {"freq", cmd_freq},
      {"horseshoe", cmd_horseshoe},   {"join", cmd_join},
      {"bifscan", cmd_bifscan},       {"saddle-node", cmd_saddle_node},
      {"parabolic-approx", cmd_parabolic_approx}, {"verify", cmd_verify},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, h] : handlers()) v.push_back(n);
    return v;
  }();
  return names;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg, const CommandOptions& opts) {
  for (const auto& [n, h] : handlers())
    if (n == name) return h(cfg, opts);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
}

}  // namespace cskew
