#include "gradedpi.h"

#include <cstring>
#include <functional>
#include <new>
#include <sstream>
#include <string>

#include "algebra.hpp"
#include "algebra_io.hpp"
#include "analysis.hpp"
#include "errors.hpp"
#include "report_json.hpp"

using namespace gpi;

struct gp_algebra {
  GradedAlgebra impl;
};

namespace {

thread_local std::string t_last_error;

gp_status fail(gp_status s, const std::string& msg) {
  t_last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RunConfig to_run_config(const gp_config* cfg) {
  RunConfig rc;
  if (!cfg) return rc;
  rc.n_max = cfg->n_max > 0 ? static_cast<unsigned>(cfg->n_max) : 1;
  rc.associative = cfg->associative != 0;
  if (cfg->max_monomials > 0) rc.max_monomials = static_cast<size_t>(cfg->max_monomials);
  if (cfg->max_columns > 0) rc.max_columns = static_cast<size_t>(cfg->max_columns);
  if (cfg->cap_n_nonassoc > 0) rc.cap_n_nonassoc = static_cast<unsigned>(cfg->cap_n_nonassoc);
  if (cfg->cap_n_assoc > 0) rc.cap_n_assoc = static_cast<unsigned>(cfg->cap_n_assoc);
  if (cfg->trials > 0) rc.trials = static_cast<unsigned>(cfg->trials);
  if (cfg->coord_bound > 0) rc.coord_bound = cfg->coord_bound;
  rc.seed = cfg->seed;
  if (cfg->precision_bits >= 64) rc.precision_bits = cfg->precision_bits;
  if (cfg->workers >= 0) rc.workers = static_cast<unsigned>(cfg->workers);
  if (cfg->tail_n_min > 0) rc.tail_n_min = static_cast<unsigned>(cfg->tail_n_min);
  if (cfg->ratio_n_min > 0) rc.ratio_n_min = static_cast<unsigned>(cfg->ratio_n_min);
  if (cfg->generic_n_max >= 0) rc.generic_n_max = static_cast<unsigned>(cfg->generic_n_max);
  return rc;
}

gp_status run_guarded(char** json_out, const std::function<std::string()>& body) {
  if (!json_out) return fail(GP_ERR_ARGUMENT, "null output pointer");
  *json_out = nullptr;
  try {
    std::string s = body();
    *json_out = dup_string(s);
    if (!*json_out) return fail(GP_ERR_INTERNAL, "allocation failed");
    return GP_OK;
  } catch (const CapError& e) {
    return fail(GP_ERR_CAP, e.what());
  } catch (const ParseError& e) {
    return fail(GP_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(GP_ERR_VALIDATION, e.what());
  } catch (const IntegrityError& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GP_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

void gp_config_defaults(gp_config* cfg) {
  if (!cfg) return;
  RunConfig rc;
  cfg->n_max = static_cast<int>(rc.n_max);
  cfg->associative = rc.associative ? 1 : 0;
  cfg->max_monomials = static_cast<long>(rc.max_monomials);
  cfg->max_columns = static_cast<long>(rc.max_columns);
  cfg->cap_n_nonassoc = static_cast<int>(rc.cap_n_nonassoc);
  cfg->cap_n_assoc = static_cast<int>(rc.cap_n_assoc);
  cfg->trials = static_cast<int>(rc.trials);
  cfg->coord_bound = rc.coord_bound;
  cfg->seed = rc.seed;
  cfg->precision_bits = static_cast<int>(rc.precision_bits);
  cfg->workers = static_cast<int>(rc.workers);
  cfg->tail_n_min = static_cast<int>(rc.tail_n_min);
  cfg->ratio_n_min = static_cast<int>(rc.ratio_n_min);
  cfg->generic_n_max = static_cast<int>(rc.generic_n_max);
}

const char* gp_status_name(gp_status s) {
  switch (s) {
    case GP_OK: return "ok";
    case GP_ERR_ARGUMENT: return "argument";
    case GP_ERR_PARSE: return "parse";
    case GP_ERR_VALIDATION: return "validation";
    case GP_ERR_UNKNOWN_BUILTIN: return "unknown_builtin";
    case GP_ERR_CAP: return "cap";
    case GP_ERR_IO: return "io";
    case GP_ERR_INTERNAL: return "internal";
  }
  return "?";
}

const char* gp_last_error(void) { return t_last_error.c_str(); }

gp_status gp_algebra_builtin(const char* name, gp_algebra** out) {
  if (!name || !out) return fail(GP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    *out = new gp_algebra{builtin(name)};
    return GP_OK;
  } catch (const Error& e) {
    return fail(GP_ERR_UNKNOWN_BUILTIN, e.what());
  } catch (const std::exception& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  }
}

gp_status gp_algebra_from_text(const char* text, gp_algebra** out) {
  if (!text || !out) return fail(GP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    *out = new gp_algebra{parse_algebra_text(text)};
    return GP_OK;
  } catch (const ParseError& e) {
    return fail(GP_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(GP_ERR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  }
}

gp_status gp_algebra_from_file(const char* path, gp_algebra** out) {
  if (!path || !out) return fail(GP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    *out = new gp_algebra{parse_algebra_file(path)};
    return GP_OK;
  } catch (const ParseError& e) {
    return fail(GP_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(GP_ERR_VALIDATION, e.what());
  } catch (const Error& e) {
    return fail(GP_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(GP_ERR_INTERNAL, e.what());
  }
}

void gp_algebra_free(gp_algebra* a) { delete a; }

int gp_algebra_dim(const gp_algebra* a) { return a ? static_cast<int>(a->impl.dim()) : 0; }

int gp_algebra_support_size(const gp_algebra* a) {
  return a ? static_cast<int>(a->impl.support().size()) : 0;
}

gp_status gp_algebra_export_text(const gp_algebra* a, char** out) {
  if (!a) return fail(GP_ERR_ARGUMENT, "null algebra");
  return run_guarded(out, [&] { return export_algebra(a->impl); });
}

gp_status gp_codim_json(const gp_algebra* a, const gp_config* cfg, char** json_out) {
  if (!a) return fail(GP_ERR_ARGUMENT, "null algebra");
  RunConfig rc = to_run_config(cfg);
  return run_guarded(json_out, [&] {
    InvariantReport rep = compute_report(a->impl, rc, false, false);
    return report_to_json(rep, rc);
  });
}

gp_status gp_colength_json(const gp_algebra* a, const gp_config* cfg, char** json_out) {
  if (!a) return fail(GP_ERR_ARGUMENT, "null algebra");
  RunConfig rc = to_run_config(cfg);
  return run_guarded(json_out, [&] {
    InvariantReport rep = compute_report(a->impl, rc, true, false);
    return report_to_json(rep, rc);
  });
}

gp_status gp_verify_json(const gp_algebra* a, const gp_config* cfg, char** json_out, int* hard_fail,
                         int* truncated) {
  if (!a) return fail(GP_ERR_ARGUMENT, "null algebra");
  RunConfig rc = to_run_config(cfg);
  bool hf = false, tr = false;
  gp_status s = run_guarded(json_out, [&] {
    auto checks = verify_all(a->impl, rc);
    hf = any_hard_failure(checks);
    tr = any_skipped(checks);
    return checks_to_json(a->impl.name(), checks, rc, tr);
  });
  if (hard_fail) *hard_fail = hf ? 1 : 0;
  if (truncated) *truncated = tr ? 1 : 0;
  return s;
}

gp_status gp_report_json(const gp_algebra* a, const gp_config* cfg, char** json_out) {
  if (!a) return fail(GP_ERR_ARGUMENT, "null algebra");
  RunConfig rc = to_run_config(cfg);
  return run_guarded(json_out, [&] {
    InvariantReport rep = compute_report(a->impl, rc, true, true);
    return report_to_json(rep, rc);
  });
}

gp_status gp_builtin_catalog(char** out) {
  return run_guarded(out, [] {
    std::ostringstream os;
    for (const auto& [name, desc] : builtin_catalog()) os << name << ": " << desc << "\n";
    return os.str();
  });
}

void gp_string_free(char* s) { delete[] s; }

}  // extern "C"
