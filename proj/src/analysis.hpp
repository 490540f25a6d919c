#pragma once

#include <optional>
#include <string>

#include "combinatorial_checks.hpp"
#include "representation.hpp"

namespace gpi {

enum class CheckOutcome { Pass, Fail, Marginal, Skipped, Info };
const char* check_outcome_name(CheckOutcome c);

/// One line of a verification report. Hard failures drive the process exit
/// status; soft ones (asymptotic statements probed at small n, marginal
/// log-space comparisons) never do.
struct CheckLine {
  std::string name;
  std::string subject;  // algebra / degree / case description
  CheckOutcome outcome = CheckOutcome::Pass;
  bool hard = true;
  std::string detail;
};

struct DvRecord {
  DegreeVector dv;
  Int multinomial_coeff;
  size_t partial_codim = 0;
  std::optional<Int> partial_colen;
};

struct NRecord {
  unsigned n = 0;
  Int c_gr;
  std::optional<Int> l_gr;
  std::optional<Int> l_bound;   // d(n+1)^(k + sum d_i^2 + sum d_i)
  std::vector<DvRecord> dvs;
  bool root_exact = false;      // c_gr is an exact n-th power
  Int root_exact_value;
  std::string root_str;         // 6 significant digits
  double root_approx = 0.0;
  double tail_min = 0.0;        // over computed m >= n
  double tail_max = 0.0;
};

struct ExponentEstimates {
  unsigned window_start = 0;
  std::string tail_min_str, tail_max_str;
  double tail_min = 0.0, tail_max = 0.0;
  bool zero_in_window = false;  // some c_n = 0: nilpotent evidence
};

struct Applicability {
  TableClass table_class;
  SimplicityVerdict graded;
  SimplicityVerdict ungraded;
  bool square_zero = false;
  bool existence_by_graded_simple_commutative = false;
  bool existence_by_simple = false;
  std::string summary;
};

struct InvariantReport {
  std::string algebra_name;
  unsigned dim = 0;
  std::vector<std::string> support_labels;
  std::vector<unsigned> component_dims;
  unsigned n_max_requested = 0;
  unsigned n_max_computed = 0;
  bool truncated = false;
  std::string truncation_reason;
  bool associative_mode = false;
  bool algebra_is_associative = false;
  std::vector<NRecord> rows;
  std::optional<ExponentEstimates> estimates;
  std::vector<CheckLine> checks;
  std::optional<Applicability> applicability;
  std::optional<std::string> unital_monotonicity;  // "holds" / "violated" when a unit exists
  uint64_t seed = 0;
};

Int graded_codimension(const GradedAlgebra& A, unsigned n, bool associative, const RunConfig& cfg);
Int graded_colength(const GradedAlgebra& A, unsigned n, bool associative, const RunConfig& cfg);

/// Roots r_n = c_n^(1/n) and suffix min/max statistics. Exact n-th powers are
/// detected and reported exactly.
void fill_roots(std::vector<NRecord>& rows, mpfr_prec_t prec);
ExponentEstimates exponent_estimates(const std::vector<NRecord>& rows, unsigned window_start);

std::vector<CheckLine> verify_codim_exponential_bound(const GradedAlgebra& A,
                                                      const std::vector<NRecord>& rows);
std::vector<CheckLine> verify_colength_polynomial_bound(const GradedAlgebra& A,
                                                        const std::vector<NRecord>& rows);
/// Consecutive-ratio lower bound c_{n+1} > c_n / (8k n^k); requires zero
/// annihilator (skipped otherwise). Asymptotic: failures below n_min are
/// informational, and all outcomes are soft.
std::vector<CheckLine> verify_codim_ratio_bound(const GradedAlgebra& A,
                                                const std::vector<NRecord>& rows, unsigned n_min);

Applicability theorem_applicability(const GradedAlgebra& A, const RunConfig& cfg);

/// Full pipeline: per-n degree-vector sweep (parallel over degree vectors),
/// aggregation, roots, bounds, and (optionally) the applicability report.
/// Resource caps truncate the report with an explicit marker instead of
/// failing.
InvariantReport compute_report(const GradedAlgebra& A, const RunConfig& cfg, bool with_colength,
                               bool with_applicability);

/// Everything cmd_verify aggregates: per-algebra checks plus the
/// algebra-independent combinatorial grids.
std::vector<CheckLine> verify_all(const GradedAlgebra& A, const RunConfig& cfg);

}  // namespace gpi
