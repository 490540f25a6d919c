#include "report_json.hpp"

#include <cstdio>

#include <json.hpp>

namespace gpi {

namespace {

using ordered = nlohmann::ordered_json;

ordered config_json(const RunConfig& cfg) {
  ordered c;
  c["n_max"] = cfg.n_max;
  c["associative"] = cfg.associative;
  c["max_monomials"] = cfg.max_monomials;
  c["max_columns"] = cfg.max_columns;
  c["trials"] = cfg.trials;
  c["coord_bound"] = cfg.coord_bound;
  c["seed"] = std::to_string(cfg.seed);
  c["precision_bits"] = static_cast<long>(cfg.precision_bits);
  c["tail_n_min"] = cfg.tail_n_min;
  c["ratio_n_min"] = cfg.ratio_n_min;
  c["generic_n_max"] = cfg.generic_n_max;
  return c;
}

ordered check_json(const CheckLine& line) {
  ordered c;
  c["name"] = line.name;
  c["subject"] = line.subject;
  c["outcome"] = check_outcome_name(line.outcome);
  c["hard"] = line.hard;
  if (!line.detail.empty()) c["detail"] = line.detail;
  return c;
}

}  // namespace

std::string report_to_json(const InvariantReport& rep, const RunConfig& cfg) {
  ordered j;
  j["schema"] = 1;
  j["tool"] = "gradedpi";
  ordered alg;
  alg["name"] = rep.algebra_name;
  alg["dim"] = rep.dim;
  alg["support"] = rep.support_labels;
  alg["component_dims"] = rep.component_dims;
  alg["associative"] = rep.algebra_is_associative;
  j["algebra"] = alg;
  j["config"] = config_json(cfg);
  j["n_max_requested"] = rep.n_max_requested;
  j["n_max_computed"] = rep.n_max_computed;
  j["truncated"] = rep.truncated;
  if (rep.truncated) j["truncation_reason"] = rep.truncation_reason;

  ordered rows = ordered::array();
  for (const auto& row : rep.rows) {
    ordered r;
    r["n"] = row.n;
    r["c_gr"] = int_str(row.c_gr);
    if (row.l_gr) r["l_gr"] = int_str(*row.l_gr);
    if (row.l_bound) {
      r["l_bound"] = int_str(*row.l_bound);
      r["l_bound_holds"] = row.l_gr && *row.l_gr <= *row.l_bound;
    }
    r["root"] = row.root_str;
    r["root_exact"] = row.root_exact;
    if (row.root_exact) r["root_exact_value"] = int_str(row.root_exact_value);
    {
      char buf[32];
      snprintf(buf, sizeof buf, "%.6g", row.tail_min);
      r["tail_min"] = buf;
      snprintf(buf, sizeof buf, "%.6g", row.tail_max);
      r["tail_max"] = buf;
    }
    ordered dvs = ordered::array();
    for (const auto& d : row.dvs) {
      ordered e;
      e["dv"] = d.dv.n;
      e["multinomial"] = int_str(d.multinomial_coeff);
      e["c"] = d.partial_codim;
      if (d.partial_colen) e["l"] = int_str(*d.partial_colen);
      dvs.push_back(std::move(e));
    }
    r["dvs"] = std::move(dvs);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);

  if (rep.estimates) {
    ordered e;
    e["window_start"] = rep.estimates->window_start;
    e["tail_min"] = rep.estimates->tail_min_str;
    e["tail_max"] = rep.estimates->tail_max_str;
    e["nilpotent_evidence"] = rep.estimates->zero_in_window;
    e["note"] = "estimates over the computed range only; no convergence claim";
    j["exponent_estimates"] = std::move(e);
  }
  if (rep.unital_monotonicity) j["unital_codim_monotonicity"] = *rep.unital_monotonicity;

  ordered checks = ordered::array();
  for (const auto& line : rep.checks) checks.push_back(check_json(line));
  j["checks"] = std::move(checks);

  if (rep.applicability) {
    const auto& ap = *rep.applicability;
    ordered a;
    a["table_kind"] = table_kind_name(ap.table_class.kind);
    a["table_associative"] = ap.table_class.associative;
    a["table_commutative"] = ap.table_class.commutative;
    a["graded_simple"] = ap.graded.certain_no ? "No" : "ProbablyYes";
    a["simple"] = ap.ungraded.certain_no ? "No" : "ProbablyYes";
    a["square_zero"] = ap.square_zero;
    a["existence_by_graded_simple_commutative"] = ap.existence_by_graded_simple_commutative;
    a["existence_by_simple"] = ap.existence_by_simple;
    a["trials"] = ap.graded.trials;
    a["seed"] = std::to_string(ap.graded.seed);
    a["summary"] = ap.summary;
    if (ap.graded.certain_no && ap.graded.witness) {
      a["graded_witness_dim"] = ap.graded.witness->dim();
    }
    if (ap.ungraded.certain_no && ap.ungraded.witness) {
      a["simple_witness_dim"] = ap.ungraded.witness->dim();
    }
    j["applicability"] = std::move(a);
  }
  return j.dump(2) + "\n";
}

std::string checks_to_json(const std::string& algebra_name, const std::vector<CheckLine>& checks,
                           const RunConfig& cfg, bool truncated) {
  ordered j;
  j["schema"] = 1;
  j["tool"] = "gradedpi";
  j["algebra"] = algebra_name;
  j["config"] = config_json(cfg);
  j["truncated"] = truncated;
  ordered arr = ordered::array();
  unsigned pass = 0, fail = 0, marginal = 0, skipped = 0, info = 0;
  for (const auto& line : checks) {
    arr.push_back(check_json(line));
    switch (line.outcome) {
      case CheckOutcome::Pass: ++pass; break;
      case CheckOutcome::Fail: ++fail; break;
      case CheckOutcome::Marginal: ++marginal; break;
      case CheckOutcome::Skipped: ++skipped; break;
      case CheckOutcome::Info: ++info; break;
    }
  }
  j["checks"] = std::move(arr);
  ordered summary;
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["marginal"] = marginal;
  summary["skipped"] = skipped;
  summary["info"] = info;
  summary["hard_failure"] = any_hard_failure(checks);
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

bool any_hard_failure(const std::vector<CheckLine>& checks) {
  for (const auto& line : checks) {
    if (line.hard && line.outcome == CheckOutcome::Fail) return true;
  }
  return false;
}

bool any_skipped(const std::vector<CheckLine>& checks) {
  for (const auto& line : checks) {
    if (line.outcome == CheckOutcome::Skipped) return true;
  }
  return false;
}

}  // namespace gpi
