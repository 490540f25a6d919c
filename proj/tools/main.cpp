// gradedpi command line: codimension/colength reports, bound verification,
// exponent-existence reports and algebra file round-tripping, all through the
// C API of libgradedpi.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

extern "C" {
#include "gradedpi.h"
}

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitHardFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapStrict = 3;

struct AlgebraHandle {
  gp_algebra* a = nullptr;
  ~AlgebraHandle() { gp_algebra_free(a); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { gp_string_free(s); }
};

struct CommonOpts {
  std::string builtin_name;
  std::string algebra_path;
  std::string format = "table";
  std::string out_path;
  bool strict = false;
  bool seed_given = false;
  gp_config cfg;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_compute_flags) {
  auto* src = cmd->add_option_group("algebra source");
  src->add_option("--builtin", o.builtin_name, "builtin algebra name (see 'builtins')");
  src->add_option("--algebra", o.algebra_path, "algebra definition file");
  src->require_option(1);
  cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
  if (with_compute_flags) {
    cmd->add_option("--n-max", o.cfg.n_max, "largest total degree to compute");
    cmd->add_flag("--associative", o.cfg.associative, "left-normed monomials only");
    cmd->add_option("--max-monomials", o.cfg.max_monomials, "per-degree-vector monomial cap");
    cmd->add_option("--max-columns", o.cfg.max_columns, "evaluation matrix column cap");
    cmd->add_option("--cap-n-nonassoc", o.cfg.cap_n_nonassoc, "hard degree cap, all bracketings");
    cmd->add_option("--cap-n-assoc", o.cfg.cap_n_assoc, "hard degree cap, left-normed");
    cmd->add_option("--trials", o.cfg.trials, "simplicity trials per component");
    cmd->add_option("--seed", o.cfg.seed, "random seed for simplicity checks")
        ->each([&o](const std::string&) { o.seed_given = true; });
    cmd->add_option("--precision-bits", o.cfg.precision_bits, "log-space comparison precision");
    cmd->add_option("--workers", o.cfg.workers, "worker threads (0 = all cores)");
    cmd->add_option("--tail-n-min", o.cfg.tail_n_min, "exponent estimate window start");
    cmd->add_option("--ratio-n-min", o.cfg.ratio_n_min, "ratio-bound reporting threshold");
    cmd->add_option("--generic-n-max", o.cfg.generic_n_max, "degree cap for generic-span checks");
    cmd->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_flag("--strict", o.strict, "exit 3 when a resource cap truncated the run");
  }
}

int load_algebra(const CommonOpts& o, AlgebraHandle& h) {
  gp_status s;
  if (!o.builtin_name.empty()) {
    s = gp_algebra_builtin(o.builtin_name.c_str(), &h.a);
  } else {
    s = gp_algebra_from_file(o.algebra_path.c_str(), &h.a);
  }
  if (s != GP_OK) {
    std::cerr << "error (" << gp_status_name(s) << "): " << gp_last_error() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error (io): cannot open '" << o.out_path << "'\n";
    return kExitInputError;
  }
  f << text;
  return kExitOk;
}

void note_default_seed(const CommonOpts& o) {
  if (!o.seed_given) {
    std::cerr << "note: --seed not given, using default seed " << o.cfg.seed << "\n";
  }
}

std::string pad(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string render_rows_table(const json& j, bool with_colength) {
  std::ostringstream os;
  os << "algebra " << j["algebra"]["name"].get<std::string>() << "  dim "
     << j["algebra"]["dim"].get<int>() << "  support";
  for (const auto& s : j["algebra"]["support"]) os << ' ' << s.get<std::string>();
  os << "\n";
  if (with_colength) {
    os << pad("n", 4) << pad("c_gr", 16) << pad("root", 12) << pad("l_gr", 10) << pad("l_bound", 20)
       << "verdict\n";
  } else {
    os << pad("n", 4) << pad("c_gr", 16) << pad("root", 12) << "\n";
  }
  for (const auto& row : j["rows"]) {
    os << pad(std::to_string(row["n"].get<int>()), 4) << pad(row["c_gr"].get<std::string>(), 16)
       << pad(row["root"].get<std::string>(), 12);
    if (with_colength) {
      os << pad(row["l_gr"].get<std::string>(), 10) << pad(row["l_bound"].get<std::string>(), 20)
         << (row["l_bound_holds"].get<bool>() ? "holds" : "FAILS");
    }
    os << "\n";
  }
  if (j.contains("exponent_estimates")) {
    const auto& e = j["exponent_estimates"];
    os << "exponent estimates (n >= " << e["window_start"].get<int>()
       << "): tail_min " << e["tail_min"].get<std::string>() << ", tail_max "
       << e["tail_max"].get<std::string>();
    if (e["nilpotent_evidence"].get<bool>()) os << "  [c_n = 0 in window: nilpotent evidence]";
    os << "\n";
  }
  if (j["truncated"].get<bool>()) {
    os << "TRUNCATED: " << j["truncation_reason"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_rows_csv(const json& j, bool with_colength) {
  std::ostringstream os;
  if (with_colength) {
    os << "n,l_n_gr,bound,verdict\n";
    for (const auto& row : j["rows"]) {
      os << row["n"].get<int>() << ',' << row["l_gr"].get<std::string>() << ','
         << row["l_bound"].get<std::string>() << ','
         << (row["l_bound_holds"].get<bool>() ? "holds" : "fails") << "\n";
    }
  } else {
    os << "n,c_n_gr,root\n";
    for (const auto& row : j["rows"]) {
      os << row["n"].get<int>() << ',' << row["c_gr"].get<std::string>() << ','
         << row["root"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

int run_rows_command(const CommonOpts& o, bool with_colength) {
  AlgebraHandle h;
  if (int rc = load_algebra(o, h); rc != kExitOk) return rc;
  OwnedString out;
  gp_status s = with_colength ? gp_colength_json(h.a, &o.cfg, &out.s)
                              : gp_codim_json(h.a, &o.cfg, &out.s);
  if (s != GP_OK) {
    std::cerr << "error (" << gp_status_name(s) << "): " << gp_last_error() << "\n";
    return s == GP_ERR_CAP ? kExitCapStrict : kExitInputError;
  }
  json j = json::parse(out.s);
  bool truncated = j["truncated"].get<bool>();
  int rc;
  if (o.format == "json") {
    rc = emit(o, out.s);
  } else if (o.format == "csv") {
    rc = emit(o, render_rows_csv(j, with_colength));
  } else {
    rc = emit(o, render_rows_table(j, with_colength));
  }
  if (rc != kExitOk) return rc;
  if (truncated && o.strict) return kExitCapStrict;
  return kExitOk;
}

int run_verify(const CommonOpts& o) {
  AlgebraHandle h;
  if (int rc = load_algebra(o, h); rc != kExitOk) return rc;
  OwnedString out;
  int hard_fail = 0, truncated = 0;
  gp_status s = gp_verify_json(h.a, &o.cfg, &out.s, &hard_fail, &truncated);
  if (s != GP_OK) {
    std::cerr << "error (" << gp_status_name(s) << "): " << gp_last_error() << "\n";
    return s == GP_ERR_CAP ? kExitCapStrict : kExitInputError;
  }
  json j = json::parse(out.s);
  int rc;
  if (o.format == "json") {
    rc = emit(o, out.s);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "name,subject,outcome,hard,detail\n";
    for (const auto& c : j["checks"]) {
      std::string detail = c.contains("detail") ? c["detail"].get<std::string>() : "";
      for (auto& ch : detail) {
        if (ch == ',') ch = ';';
      }
      os << c["name"].get<std::string>() << ',' << c["subject"].get<std::string>() << ','
         << c["outcome"].get<std::string>() << ',' << (c["hard"].get<bool>() ? 1 : 0) << ',' << detail
         << "\n";
    }
    rc = emit(o, os.str());
  } else {
    std::ostringstream os;
    for (const auto& c : j["checks"]) {
      os << '[' << pad(c["outcome"].get<std::string>(), 8) << "] "
         << pad(c["name"].get<std::string>(), 28) << c["subject"].get<std::string>();
      if (c.contains("detail")) os << "  (" << c["detail"].get<std::string>() << ")";
      os << "\n";
    }
    const auto& sm = j["summary"];
    os << "summary: " << sm["pass"].get<int>() << " pass, " << sm["fail"].get<int>() << " fail, "
       << sm["marginal"].get<int>() << " marginal, " << sm["skipped"].get<int>() << " skipped, "
       << sm["info"].get<int>() << " info\n";
    rc = emit(o, os.str());
  }
  if (rc != kExitOk) return rc;
  if (hard_fail) return kExitHardFail;
  if (truncated && o.strict) return kExitCapStrict;
  return kExitOk;
}

int run_report(const CommonOpts& o) {
  note_default_seed(o);
  AlgebraHandle h;
  if (int rc = load_algebra(o, h); rc != kExitOk) return rc;
  OwnedString out;
  gp_status s = gp_report_json(h.a, &o.cfg, &out.s);
  if (s != GP_OK) {
    std::cerr << "error (" << gp_status_name(s) << "): " << gp_last_error() << "\n";
    return kExitInputError;
  }
  if (o.format == "json" || o.format == "csv") return emit(o, out.s);
  json j = json::parse(out.s);
  std::ostringstream os;
  os << render_rows_table(j, true);
  const auto& ap = j["applicability"];
  os << "grading table: " << ap["table_kind"].get<std::string>() << "\n";
  os << "graded simple: " << ap["graded_simple"].get<std::string>()
     << ", simple: " << ap["simple"].get<std::string>() << "\n";
  os << ap["summary"].get<std::string>() << "\n";
  if (j.contains("unital_codim_monotonicity")) {
    os << "unital codimension monotonicity: " << j["unital_codim_monotonicity"].get<std::string>()
       << "\n";
  }
  int rc = emit(o, os.str());
  if (rc != kExitOk) return rc;
  if (j["truncated"].get<bool>() && o.strict) return kExitCapStrict;
  return kExitOk;
}

int run_export(const CommonOpts& o) {
  AlgebraHandle h;
  if (int rc = load_algebra(o, h); rc != kExitOk) return rc;
  OwnedString out;
  gp_status s = gp_algebra_export_text(h.a, &out.s);
  if (s != GP_OK) {
    std::cerr << "error (" << gp_status_name(s) << "): " << gp_last_error() << "\n";
    return kExitInputError;
  }
  return emit(o, out.s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded polynomial-identity invariants of finite-dimensional graded algebras"};
  app.require_subcommand(1);

  CommonOpts codim_o, colen_o, verify_o, report_o, export_o;
  gp_config_defaults(&codim_o.cfg);
  gp_config_defaults(&colen_o.cfg);
  gp_config_defaults(&verify_o.cfg);
  gp_config_defaults(&report_o.cfg);
  gp_config_defaults(&export_o.cfg);

  auto* codim = app.add_subcommand("codim", "graded codimension sequence c_n^gr and root estimates");
  add_common_flags(codim, codim_o, true);
  auto* colen = app.add_subcommand("colength", "graded colength sequence with its polynomial bound");
  add_common_flags(colen, colen_o, true);
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common_flags(verify, verify_o, true);
  auto* report = app.add_subcommand("report", "full invariant report with existence classification");
  add_common_flags(report, report_o, true);
  auto* export_cmd = app.add_subcommand("export", "print the canonical algebra definition file");
  add_common_flags(export_cmd, export_o, false);
  auto* builtins = app.add_subcommand("builtins", "list builtin algebras");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(builtins)) {
    OwnedString out;
    if (gp_builtin_catalog(&out.s) != GP_OK) {
      std::cerr << "error: " << gp_last_error() << "\n";
      return kExitInputError;
    }
    std::cout << out.s;
    return kExitOk;
  }
  if (app.got_subcommand(codim)) return run_rows_command(codim_o, false);
  if (app.got_subcommand(colen)) return run_rows_command(colen_o, true);
  if (app.got_subcommand(verify)) return run_verify(verify_o);
  if (app.got_subcommand(report)) return run_report(report_o);
  if (app.got_subcommand(export_cmd)) return run_export(export_o);
  return kExitInputError;
}
