#include "analysis.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "errors.hpp"

namespace gpi {

const char* check_outcome_name(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::Marginal: return "marginal";
    case CheckOutcome::Skipped: return "skipped";
    case CheckOutcome::Info: return "info";
  }
  return "?";
}

namespace {

unsigned worker_count(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Computes the per-degree-vector records for one n. Tasks are independent;
/// results land in preassigned slots so the fold is deterministic.
std::vector<DvRecord> dv_sweep(const GradedAlgebra& A, unsigned n, bool with_colength,
                               const RunConfig& cfg) {
  auto supp = A.support();
  auto dvs = enumerate_degree_vectors(n, static_cast<unsigned>(supp.size()));
  std::vector<DvRecord> records(dvs.size());
  std::vector<std::exception_ptr> errors(dvs.size());

  auto run_task = [&](size_t t) {
    try {
      DvRecord r;
      r.dv = dvs[t];
      r.multinomial_coeff = multinomial(n, dvs[t].n);
      if (with_colength) {
        EvaluationMatrix M = build_evaluation_matrix(A, dvs[t], cfg.associative, cfg);
        r.partial_codim = M.rank();
        r.partial_colen = multiplicities(M).colength();
      } else {
        r.partial_codim = partial_codimension(A, dvs[t], cfg.associative, cfg);
      }
      records[t] = std::move(r);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  unsigned workers = std::min<unsigned>(worker_count(cfg), static_cast<unsigned>(dvs.size()));
  if (workers <= 1) {
    for (size_t t = 0; t < dvs.size(); ++t) run_task(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t t = next.fetch_add(1); t < dvs.size(); t = next.fetch_add(1)) run_task(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

}  // namespace

Int graded_codimension(const GradedAlgebra& A, unsigned n, bool associative, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.associative = associative;
  Int total = 0;
  for (const auto& r : dv_sweep(A, n, false, c)) {
    total += r.multinomial_coeff * Int(static_cast<unsigned long>(r.partial_codim));
  }
  return total;
}

Int graded_colength(const GradedAlgebra& A, unsigned n, bool associative, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.associative = associative;
  Int total = 0;
  for (const auto& r : dv_sweep(A, n, true, c)) total += *r.partial_colen;
  return total;
}

void fill_roots(std::vector<NRecord>& rows, mpfr_prec_t prec) {
  for (auto& row : rows) {
    if (row.c_gr == 0) {
      row.root_exact = true;
      row.root_exact_value = 0;
      row.root_str = "0";
      row.root_approx = 0.0;
      continue;
    }
    Int root;
    int exact = mpz_root(root.get_mpz_t(), row.c_gr.get_mpz_t(), row.n);
    if (exact != 0) {
      row.root_exact = true;
      row.root_exact_value = root;
    }
    Real r = Real::root_of(row.c_gr, row.n, prec);
    row.root_str = r.str(6);
    row.root_approx = r.to_double();
  }
  // Suffix statistics.
  double mn = 0, mx = 0;
  for (size_t i = rows.size(); i-- > 0;) {
    double v = rows[i].root_approx;
    if (i + 1 == rows.size()) {
      mn = mx = v;
    } else {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    rows[i].tail_min = mn;
    rows[i].tail_max = mx;
  }
}

ExponentEstimates exponent_estimates(const std::vector<NRecord>& rows, unsigned window_start) {
  ExponentEstimates e;
  if (rows.empty()) return e;
  unsigned start = std::min<unsigned>(window_start, rows.back().n);
  e.window_start = start;
  bool first = true;
  for (const auto& row : rows) {
    if (row.n < start) continue;
    if (row.c_gr == 0) e.zero_in_window = true;
    if (first) {
      e.tail_min = e.tail_max = row.root_approx;
      first = false;
    } else {
      e.tail_min = std::min(e.tail_min, row.root_approx);
      e.tail_max = std::max(e.tail_max, row.root_approx);
    }
  }
  std::ostringstream a, b;
  a.precision(6);
  b.precision(6);
  a << e.tail_min;
  b << e.tail_max;
  e.tail_min_str = a.str();
  e.tail_max_str = b.str();
  return e;
}

std::vector<CheckLine> verify_codim_exponential_bound(const GradedAlgebra& A,
                                                      const std::vector<NRecord>& rows) {
  std::vector<CheckLine> out;
  Int d = A.dim();
  for (const auto& row : rows) {
    Int bound;
    mpz_pow_ui(bound.get_mpz_t(), d.get_mpz_t(), row.n + 1);
    CheckLine line;
    line.name = "codim_exponential_bound";
    line.subject = A.name() + " n=" + std::to_string(row.n);
    line.outcome = row.c_gr <= bound ? CheckOutcome::Pass : CheckOutcome::Fail;
    line.detail = "c_gr=" + int_str(row.c_gr) + " <= d^(n+1)=" + int_str(bound);
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<CheckLine> verify_colength_polynomial_bound(const GradedAlgebra& A,
                                                        const std::vector<NRecord>& rows) {
  std::vector<CheckLine> out;
  auto supp = A.support();
  unsigned long expo = supp.size();
  for (unsigned label : supp) {
    unsigned long di = A.component_dim(label);
    expo += di * di + di;
  }
  for (const auto& row : rows) {
    if (!row.l_gr) continue;
    Int base = row.n + 1;
    Int bound;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), expo);
    bound *= A.dim();
    CheckLine line;
    line.name = "colength_polynomial_bound";
    line.subject = A.name() + " n=" + std::to_string(row.n);
    line.outcome = *row.l_gr <= bound ? CheckOutcome::Pass : CheckOutcome::Fail;
    line.detail = "l_gr=" + int_str(*row.l_gr) + " <= d(n+1)^" + std::to_string(expo) + "=" + int_str(bound);
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<CheckLine> verify_codim_ratio_bound(const GradedAlgebra& A,
                                                const std::vector<NRecord>& rows, unsigned n_min) {
  std::vector<CheckLine> out;
  Subspace ann = annihilator_full(A);
  if (ann.dim() != 0) {
    CheckLine line;
    line.name = "codim_ratio_bound";
    line.subject = A.name();
    line.outcome = CheckOutcome::Skipped;
    line.hard = false;
    line.detail = "annihilator is nonzero (dim " + std::to_string(ann.dim()) + ")";
    out.push_back(std::move(line));
    return out;
  }
  unsigned long k = A.support().size();
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    unsigned n = rows[i].n;
    if (rows[i + 1].n != n + 1) continue;
    // c_{n+1} * 8k n^k > c_n, exactly.
    Int lhs = rows[i + 1].c_gr * 8 * Int(k);
    Int nk;
    Int nn = n;
    mpz_pow_ui(nk.get_mpz_t(), nn.get_mpz_t(), k);
    lhs *= nk;
    bool holds = lhs > rows[i].c_gr;
    CheckLine line;
    line.name = "codim_ratio_bound";
    line.subject = A.name() + " n=" + std::to_string(n);
    line.hard = false;
    line.detail = "c_(n+1)*8k*n^k=" + int_str(lhs) + " > c_n=" + int_str(rows[i].c_gr);
    if (holds) {
      line.outcome = CheckOutcome::Pass;
    } else if (n < n_min) {
      line.outcome = CheckOutcome::Info;
      line.detail += " (outside asymptotic regime)";
    } else {
      line.outcome = CheckOutcome::Fail;  // soft: asymptotic statement
      line.detail += " (asymptotic statement; informational at desk scale)";
    }
    out.push_back(std::move(line));
  }
  return out;
}

Applicability theorem_applicability(const GradedAlgebra& A, const RunConfig& cfg) {
  Applicability ap;
  ap.table_class = classify_table(A.table());
  ap.graded = is_graded_simple(A, cfg.trials, cfg.seed, cfg.coord_bound);
  ap.ungraded = is_simple(A, cfg.trials, cfg.seed, cfg.coord_bound);
  ap.square_zero = ap.graded.square_zero;
  bool graded_simple = !ap.graded.certain_no;
  bool simple = !ap.ungraded.certain_no;
  ap.existence_by_graded_simple_commutative =
      graded_simple && ap.table_class.associative && ap.table_class.commutative;
  ap.existence_by_simple = simple;
  std::ostringstream os;
  if (ap.existence_by_graded_simple_commutative && ap.existence_by_simple) {
    os << "graded PI-exponent existence guaranteed via both the graded-simple + "
          "commutative-semigroup criterion and the simple-algebra criterion";
  } else if (ap.existence_by_graded_simple_commutative) {
    os << "graded PI-exponent existence guaranteed via the graded-simple + "
          "commutative-semigroup criterion";
  } else if (ap.existence_by_simple) {
    os << "graded PI-exponent existence guaranteed via the simple-algebra criterion";
  } else {
    os << "no existence guarantee from these results";
  }
  os << " (simplicity verdicts are one-sided: No is certain, Yes is Monte Carlo; seed "
     << cfg.seed << ")";
  if (ap.square_zero) os << "; note: A*A = 0";
  ap.summary = os.str();
  return ap;
}

InvariantReport compute_report(const GradedAlgebra& A, const RunConfig& cfg, bool with_colength,
                               bool with_applicability) {
  InvariantReport rep;
  rep.algebra_name = A.name();
  rep.dim = A.dim();
  rep.seed = cfg.seed;
  rep.associative_mode = cfg.associative;
  rep.algebra_is_associative = A.is_associative();
  auto supp = A.support();
  for (unsigned label : supp) {
    rep.support_labels.push_back(A.table().label(label));
    rep.component_dims.push_back(A.component_dim(label));
  }
  rep.n_max_requested = cfg.n_max;

  for (unsigned n = 1; n <= cfg.n_max; ++n) {
    std::vector<DvRecord> records;
    try {
      records = dv_sweep(A, n, with_colength, cfg);
    } catch (const CapError& e) {
      rep.truncated = true;
      rep.truncation_reason = e.what();
      break;
    }
    NRecord row;
    row.n = n;
    row.c_gr = 0;
    if (with_colength) row.l_gr = Int(0);
    for (auto& r : records) {
      row.c_gr += r.multinomial_coeff * Int(static_cast<unsigned long>(r.partial_codim));
      if (with_colength) *row.l_gr += *r.partial_colen;
    }
    row.dvs = std::move(records);
    rep.rows.push_back(std::move(row));
    rep.n_max_computed = n;
  }
  fill_roots(rep.rows, cfg.precision_bits);
  if (!rep.rows.empty()) rep.estimates = exponent_estimates(rep.rows, cfg.tail_n_min);
  if (with_colength) {
    unsigned long expo = supp.size();
    for (unsigned label : supp) {
      unsigned long di = A.component_dim(label);
      expo += di * di + di;
    }
    for (auto& row : rep.rows) {
      Int base = row.n + 1;
      Int bound;
      mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), expo);
      row.l_bound = bound * A.dim();
    }
  }

  auto expb = verify_codim_exponential_bound(A, rep.rows);
  rep.checks.insert(rep.checks.end(), expb.begin(), expb.end());
  if (with_colength) {
    auto colb = verify_colength_polynomial_bound(A, rep.rows);
    rep.checks.insert(rep.checks.end(), colb.begin(), colb.end());
  }
  auto ratio = verify_codim_ratio_bound(A, rep.rows, cfg.ratio_n_min);
  rep.checks.insert(rep.checks.end(), ratio.begin(), ratio.end());

  if (auto u = A.unit()) {
    bool monotone = true;
    for (size_t i = 0; i + 1 < rep.rows.size(); ++i) {
      if (rep.rows[i + 1].c_gr < rep.rows[i].c_gr) monotone = false;
    }
    rep.unital_monotonicity = monotone ? "holds" : "violated";
  }

  if (with_applicability) rep.applicability = theorem_applicability(A, cfg);
  return rep;
}

namespace {

void append(std::vector<CheckLine>& out, CheckLine line) { out.push_back(std::move(line)); }

CheckLine from_bound_verdict(const std::string& name, const std::string& subject,
                             const BoundVerdict& v, bool hard = true) {
  CheckLine line;
  line.name = name;
  line.subject = subject;
  line.hard = hard;
  std::ostringstream os;
  os.precision(6);
  os << "lower_margin=" << v.lower_margin << " upper_margin=" << v.upper_margin;
  line.detail = os.str();
  switch (v.status) {
    case BoundStatus::Holds: line.outcome = CheckOutcome::Pass; break;
    case BoundStatus::Marginal: line.outcome = CheckOutcome::Marginal; break;
    case BoundStatus::Fails:
      line.outcome = CheckOutcome::Fail;
      line.detail += std::string(" side=") + v.failed_side;
      break;
  }
  return line;
}

}  // namespace

std::vector<CheckLine> verify_all(const GradedAlgebra& A, const RunConfig& cfg) {
  std::vector<CheckLine> out;

  // Structural validation first; nothing else runs when it fails.
  auto vr = A.validate();
  {
    CheckLine line;
    line.name = "grading_validation";
    line.subject = A.name();
    line.outcome = vr.ok ? CheckOutcome::Pass : CheckOutcome::Fail;
    if (!vr.ok) line.detail = std::to_string(vr.violations.size()) + " violating triple(s)";
    append(out, std::move(line));
    if (!vr.ok) return out;
  }

  InvariantReport rep = compute_report(A, cfg, true, false);
  out.insert(out.end(), rep.checks.begin(), rep.checks.end());
  if (rep.truncated) {
    CheckLine line;
    line.name = "resource_caps";
    line.subject = A.name();
    line.outcome = CheckOutcome::Skipped;
    line.hard = false;
    line.detail = rep.truncation_reason;
    append(out, std::move(line));
  }

  // Cross-path exactness and multiplicity checks per degree vector.
  for (unsigned n = 1; n <= rep.n_max_computed; ++n) {
    for (const auto& dv : enumerate_degree_vectors(n, static_cast<unsigned>(A.support().size()))) {
      CheckLine line;
      line.name = "rank_vs_character";
      line.subject = A.name() + " dv=" + dv_str(dv);
      try {
        auto r = verify_rank_vs_character(A, dv, cfg.associative, cfg);
        line.outcome = r.equal ? CheckOutcome::Pass : CheckOutcome::Fail;
        line.detail = "rank=" + std::to_string(r.rank) + " character_sum=" + int_str(r.character_sum);
      } catch (const CapError& e) {
        line.outcome = CheckOutcome::Skipped;
        line.hard = false;
        line.detail = e.what();
      }
      append(out, std::move(line));

      if (n <= cfg.generic_n_max) {
        CheckLine gb;
        gb.name = "multiplicity_generic_bound";
        gb.subject = A.name() + " dv=" + dv_str(dv);
        try {
          auto r = verify_multiplicity_bound(A, dv, cfg);
          bool ok = r.mult_bound_holds && r.generic_bound_holds;
          gb.outcome = ok ? CheckOutcome::Pass : CheckOutcome::Fail;
          gb.detail = "max_mult=" + int_str(r.max_multiplicity) +
                      " generic_dim=" + std::to_string(r.generic_dim) +
                      " bound=" + int_str(r.generic_bound);
        } catch (const CapError& e) {
          gb.outcome = CheckOutcome::Skipped;
          gb.hard = false;
          gb.detail = e.what();
        }
        append(out, std::move(gb));
      }
    }
  }

  // Algebra-independent combinatorial grids (compact verify-time versions;
  // the acceptance suite runs the full grids).
  {
    for (const auto& nu : enumerate_partitions(100, 2)) {
      if (nu.part(1) % 10 != 0) continue;  // every 10th split
      append(out, from_bound_verdict("dim_phi_bounds", "nu=" + nu.str() + " d=2",
                                     check_dim_phi_bounds(nu, 2, cfg.precision_bits)));
    }
    for (unsigned m = 6; m <= 12; ++m) {
      for (unsigned d = 2; d <= 4; ++d) {
        for (const auto& nu : enumerate_partitions(m, d)) {
          for (const auto& pv : check_push_monotone(nu, d, cfg.precision_bits)) {
            if (pv.status == BoundStatus::Holds) continue;
            CheckLine line;
            line.name = "push_monotonicity";
            line.subject = "nu=" + nu.str() + " push(" + std::to_string(pv.i) + "," + std::to_string(pv.j) + ")";
            line.outcome = pv.status == BoundStatus::Marginal ? CheckOutcome::Marginal : CheckOutcome::Fail;
            line.hard = pv.status != BoundStatus::Marginal;
            append(out, std::move(line));
          }
        }
      }
    }
    {
      CheckLine line;
      line.name = "push_monotonicity";
      line.subject = "all nu |- m, 6 <= m <= 12, heights <= 4";
      line.outcome = CheckOutcome::Pass;
      line.detail = "violations reported individually";
      append(out, std::move(line));
    }
    for (unsigned m : {10u, 24u, 40u}) {
      append(out, from_bound_verdict("multinomial_phi_bounds", "parts=[" + std::to_string(m / 2) + "," +
                                                                   std::to_string(m - m / 2) + "]",
                                     check_multinomial_phi_bounds({m / 2, m - m / 2}, cfg.precision_bits)));
    }
    struct ScaledCase {
      std::vector<unsigned> n_parts;
      std::vector<Partition> lambdas;
      unsigned q;
    };
    std::vector<ScaledCase> cases = {
        {{100}, {Partition({100})}, 100},
        {{50, 50}, {Partition({25, 25}), Partition({50})}, 100},
    };
    for (const auto& c : cases) {
      auto v = check_scaled_product_bound(c.n_parts, c.lambdas, c.q, 2, cfg.precision_bits);
      CheckLine line;
      line.name = "scaled_product_bound";
      std::ostringstream os;
      os << "n=(";
      for (size_t i = 0; i < c.n_parts.size(); ++i) os << (i ? "," : "") << c.n_parts[i];
      os << ") q=" << c.q;
      line.subject = os.str();
      line.outcome = v.status == BoundStatus::Holds   ? CheckOutcome::Pass
                     : v.status == BoundStatus::Marginal ? CheckOutcome::Marginal
                                                         : CheckOutcome::Fail;
      std::ostringstream det;
      det.precision(6);
      det << "log_margin=" << v.margin;
      line.detail = det.str();
      append(out, std::move(line));
    }
  }
  return out;
}

}  // namespace gpi
