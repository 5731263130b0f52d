#include "cskew/cskew.h"

#include <new>
#include <string>

#include "cskew/bifurcation.hpp"
#include "cskew/commands.hpp"
#include "cskew/config.hpp"
#include "cskew/errors.hpp"
#include "cskew/measures.hpp"
#include "cskew/orbits.hpp"
#include "cskew/symbolic.hpp"

struct cskew_config {
  cskew::RunConfig cfg;
};

struct cskew_pair {
  cskew::FiberPair pair;
  cskew::Tolerances tol;
};

struct cskew_family {
  cskew::BifFamily fam;
  cskew::Tolerances tol;
};

struct cskew_options {
  cskew::CommandOptions opts;
};

struct cskew_result {
  cskew::CommandResult res;
};

namespace {

thread_local std::string g_last_error;
thread_local int g_last_step = -1;

cskew_status fail(cskew_status s, const std::string& msg, int step = -1) {
  g_last_error = msg;
  g_last_step = step;
  return s;
}

template <class F>
cskew_status guarded(F&& f) {
  try {
    f();
    return CSKEW_OK;
  } catch (const cskew::Error& e) {
    return fail(static_cast<cskew_status>(static_cast<int>(e.code())), e.what(), e.step());
  } catch (const std::bad_alloc&) {
    return fail(CSKEW_E_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSKEW_E_INTERNAL, e.what());
  } catch (...) {
    return fail(CSKEW_E_INTERNAL, "unknown failure");
  }
}

#define CSKEW_REQUIRE(cond)                                               \
  do {                                                                    \
    if (!(cond)) return fail(CSKEW_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* cskew_version(void) { return "0.1.0"; }
const char* cskew_last_error(void) { return g_last_error.c_str(); }
int cskew_last_error_step(void) { return g_last_step; }

const char* cskew_status_name(cskew_status status) {
  if (status == CSKEW_OK) return "Ok";
  if (status == CSKEW_E_INTERNAL) return "Internal";
  if (status >= CSKEW_E_INVALID_ARGUMENT && status <= CSKEW_E_CONFIG)
    return cskew::error_name(static_cast<cskew::ErrorCode>(static_cast<int>(status)));
  return "Unknown";
}

cskew_status cskew_config_default(cskew_config** out) {
  CSKEW_REQUIRE(out);
  return guarded([&] { *out = new cskew_config{}; });
}

cskew_status cskew_config_parse(const char* text, cskew_config** out) {
  CSKEW_REQUIRE(text && out);
  return guarded([&] { *out = new cskew_config{cskew::parse_config(text)}; });
}

cskew_status cskew_config_load(const char* path, cskew_config** out) {
  CSKEW_REQUIRE(path && out);
  return guarded([&] { *out = new cskew_config{cskew::load_config(path)}; });
}

void cskew_config_free(cskew_config* cfg) { delete cfg; }

cskew_status cskew_config_set_workers(cskew_config* cfg, int workers) {
  CSKEW_REQUIRE(cfg);
  if (workers < 1) return fail(CSKEW_E_INVALID_ARGUMENT, "worker count must be positive");
  cfg->cfg.budgets.workers = workers;
  return CSKEW_OK;
}

int cskew_config_workers(const cskew_config* cfg) { return cfg ? cfg->cfg.budgets.workers : 0; }

cskew_status cskew_config_set_seed(cskew_config* cfg, uint64_t seed) {
  CSKEW_REQUIRE(cfg);
  cfg->cfg.seed = seed;
  return CSKEW_OK;
}

uint64_t cskew_config_seed(const cskew_config* cfg) { return cfg ? cfg->cfg.seed : 0; }
uint64_t cskew_config_hash(const cskew_config* cfg) { return cfg ? cskew::config_hash(cfg->cfg) : 0; }
const char* cskew_config_out_path(const cskew_config* cfg) { return cfg ? cfg->cfg.out_path.c_str() : ""; }

cskew_status cskew_pair_create(const char* f0, const char* f1, double modulus, cskew_pair** out) {
  CSKEW_REQUIRE(f0 && f1 && out);
  return guarded([&] {
    *out = new cskew_pair{cskew::FiberPair(cskew::FiberMap::parse(f0), cskew::FiberMap::parse(f1), modulus), {}};
  });
}

cskew_status cskew_pair_from_config(const cskew_config* cfg, cskew_pair** out) {
  CSKEW_REQUIRE(cfg && out);
  return guarded([&] { *out = new cskew_pair{cfg->cfg.pair(), cfg->cfg.tol}; });
}

void cskew_pair_free(cskew_pair* pair) { delete pair; }
double cskew_pair_d(const cskew_pair* pair) { return pair ? pair->pair.d() : 0.0; }

cskew_status cskew_eval_word(const cskew_pair* pair, const char* word, double x, double* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] { *out = cskew::eval_word(pair->pair, cskew::Word(word), x, pair->tol.bisect); });
}

cskew_status cskew_deriv_word(const cskew_pair* pair, const char* word, double x, double* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] { *out = cskew::deriv_word(pair->pair, cskew::Word(word), x, pair->tol.bisect); });
}

cskew_status cskew_invert_word(const cskew_pair* pair, const char* word, double y, double* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] { *out = cskew::invert_word(pair->pair, cskew::Word(word), y, pair->tol.bisect); });
}

cskew_status cskew_check_hypotheses(const cskew_pair* pair, int grid_n, cskew_hypothesis_report* out) {
  CSKEW_REQUIRE(pair && out);
  return guarded([&] {
    auto r = cskew::check_hypotheses(pair->pair, grid_n);
    *out = {r.h1_ok, r.h2_ok, r.h2plus_ok, r.modulus_estimate, r.worst_violation.location,
            r.worst_violation.magnitude};
  });
}

cskew_status cskew_admissible_at(const cskew_pair* pair, const char* word, double x, int* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] { *out = cskew::admissible_at(pair->pair, cskew::Word(word), x, pair->tol.bisect); });
}

cskew_status cskew_forward_endpoint(const cskew_pair* pair, const char* word, double* a) {
  CSKEW_REQUIRE(pair && word && a);
  return guarded([&] { *a = cskew::forward_endpoint(pair->pair, cskew::Word(word), pair->tol.bisect).a; });
}

cskew_status cskew_count_admissible(const cskew_pair* pair, int n, uint64_t node_cap, int workers, uint64_t* count,
                                    double* entropy_upper) {
  CSKEW_REQUIRE(pair && count);
  return guarded([&] {
    cskew::Budgets b;
    if (node_cap) b.node_cap = node_cap;
    b.workers = workers > 0 ? workers : 1;
    auto c = cskew::count_admissible(pair->pair, n, b, pair->tol.bisect);
    *count = c.count;
    if (entropy_upper) *entropy_upper = c.entropy_upper;
  });
}

cskew_status cskew_max_consecutive_ones(const cskew_pair* pair, int cap, int* k0) {
  CSKEW_REQUIRE(pair && k0);
  return guarded([&] { *k0 = cskew::max_consecutive_ones(pair->pair, cap > 0 ? cap : 100000, pair->tol.bisect); });
}

cskew_status cskew_fixed_points(const cskew_pair* pair, const char* word, cskew_fixed_point_info* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] {
    auto fp = cskew::fixed_points(pair->pair, cskew::Word(word), pair->tol);
    *out = {};
    out->variant = static_cast<int>(fp.variant);
    if (fp.variant != cskew::FixedPointVariant::None) {
      out->p_plus = fp.plus->point;
      out->p_minus = fp.minus->point;
      out->mult_plus = fp.plus->multiplier;
      out->mult_minus = fp.minus->multiplier;
      out->chi_plus = fp.plus->exponent;
      out->chi_minus = fp.minus->exponent;
    }
  });
}

cskew_status cskew_distortion_ratio(const cskew_pair* pair, const char* word, double x, double y, double* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] { *out = cskew::distortion_ratio(pair->pair, cskew::Word(word), x, y, pair->tol); });
}

cskew_status cskew_kappa(double D, double M, double* kappa1, double* kappa2) {
  CSKEW_REQUIRE(kappa1 && kappa2);
  return guarded([&] {
    auto k = cskew::kappa(D, M);
    *kappa1 = k.kappa1;
    *kappa2 = k.kappa2;
  });
}

cskew_status cskew_twin_measures(const cskew_pair* pair, const char* word, cskew_twin_info* out) {
  CSKEW_REQUIRE(pair && word && out);
  return guarded([&] {
    auto t = cskew::twin_measures(pair->pair, cskew::Word(word), pair->tol);
    *out = {t.D, t.chi_plus, t.chi_minus, t.kappa1, t.kappa2, t.bounds_ok};
  });
}

cskew_status cskew_wasserstein_twins(const cskew_pair* pair, const char* word, double* formula, double* oracle) {
  CSKEW_REQUIRE(pair && word && formula && oracle);
  return guarded([&] {
    auto t = cskew::twin_measures(pair->pair, cskew::Word(word), pair->tol);
    auto w = cskew::wasserstein_periodic(t.mu_plus, t.mu_minus, pair->tol);
    *formula = w.formula;
    *oracle = w.oracle;
  });
}

cskew_status cskew_frequency_bound(const cskew_pair* pair, const char* word, double* lhs, int* ok) {
  CSKEW_REQUIRE(pair && word && lhs);
  return guarded([&] {
    auto b = cskew::frequency_bound(pair->pair, cskew::Word(word), pair->tol);
    *lhs = b.lhs;
    if (ok) *ok = b.ok;
  });
}

cskew_status cskew_family_create(const char* f0, const char* f1_base, double modulus, cskew_family** out) {
  CSKEW_REQUIRE(f0 && f1_base && out);
  return guarded([&] {
    *out = new cskew_family{
        cskew::make_family(cskew::FiberMap::parse(f0), cskew::FiberMap::parse(f1_base), modulus), {}};
  });
}

cskew_status cskew_family_from_config(const cskew_config* cfg, cskew_family** out) {
  CSKEW_REQUIRE(cfg && out);
  return guarded([&] {
    *out = new cskew_family{cskew::make_family(cfg->cfg.f0, cfg->cfg.f1, cfg->cfg.modulus), cfg->cfg.tol};
  });
}

void cskew_family_free(cskew_family* fam) { delete fam; }

cskew_status cskew_family_info_get(const cskew_family* fam, cskew_family_info* out) {
  CSKEW_REQUIRE(fam && out);
  const auto& f = fam->fam;
  int c = f.exit_case == cskew::ExitCase::Ia ? CSKEW_CASE_IA
          : f.exit_case == cskew::ExitCase::Ib ? CSKEW_CASE_IB
                                               : CSKEW_CASE_II;
  *out = {f.t_h, f.t_c, f.a_exit, c};
  return CSKEW_OK;
}

cskew_status cskew_family_pair_at(const cskew_family* fam, double t, cskew_pair** out) {
  CSKEW_REQUIRE(fam && out);
  return guarded([&] { *out = new cskew_pair{cskew::pair_at(fam->fam, t), fam->tol}; });
}

cskew_status cskew_jump_constant(const cskew_family* fam, double t, double* out) {
  CSKEW_REQUIRE(fam && out);
  return guarded([&] { *out = cskew::jump_constant(fam->fam, t); });
}

cskew_status cskew_entropy_bound(const cskew_family* fam, double t, double* p, double* H) {
  CSKEW_REQUIRE(fam && p && H);
  return guarded([&] {
    auto b = cskew::entropy_bound(fam->fam, t);
    *p = b.p;
    *H = b.H;
  });
}

cskew_status cskew_full_cylinder_threshold(const cskew_family* fam, int n, double* t) {
  CSKEW_REQUIRE(fam && t);
  return guarded([&] { *t = cskew::full_cylinder_threshold(fam->fam, n, {}, fam->tol.bisect); });
}

cskew_status cskew_find_saddle_node(const cskew_family* fam, const char* word, double* t, double* point) {
  CSKEW_REQUIRE(fam && word && t);
  return guarded([&] {
    auto sn = cskew::find_saddle_node(fam->fam, cskew::Word(word), fam->tol);
    *t = sn.t;
    if (point) *point = sn.orbit.point;
  });
}

size_t cskew_command_count(void) { return cskew::command_names().size(); }

const char* cskew_command_name(size_t i) {
  const auto& names = cskew::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

cskew_status cskew_options_create(cskew_options** out) {
  CSKEW_REQUIRE(out);
  return guarded([&] { *out = new cskew_options{}; });
}

cskew_status cskew_options_set(cskew_options* opts, const char* key, const char* value) {
  CSKEW_REQUIRE(opts && key && value);
  return guarded([&] { opts->opts.set(key, value); });
}

void cskew_options_free(cskew_options* opts) { delete opts; }

cskew_status cskew_run(const char* command, const cskew_config* cfg, const cskew_options* opts, cskew_result** out) {
  CSKEW_REQUIRE(command && cfg && out);
  return guarded([&] {
    static const cskew::CommandOptions none;
    *out = new cskew_result{cskew::run_command(command, cfg->cfg, opts ? opts->opts : none)};
  });
}

const char* cskew_result_body(const cskew_result* res) { return res ? res->res.body.c_str() : ""; }
const char* cskew_result_aux(const cskew_result* res) { return res ? res->res.aux.c_str() : ""; }
size_t cskew_result_rows(const cskew_result* res) { return res ? res->res.rows : 0; }
int cskew_result_failed(const cskew_result* res) { return res ? res->res.verification_failed : 0; }
size_t cskew_result_warning_count(const cskew_result* res) { return res ? res->res.warnings.size() : 0; }

const char* cskew_result_warning(const cskew_result* res, size_t i) {
  if (!res || i >= res->res.warnings.size()) return nullptr;
  return res->res.warnings[i].c_str();
}

void cskew_result_free(cskew_result* res) { delete res; }

}  // extern "C"
