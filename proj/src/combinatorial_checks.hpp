#pragma once

#include <vector>

#include "logreal.hpp"
#include "partitions.hpp"

namespace gpi {

/// Verdict of a log-space bound check. Margins are log-space distances from
/// the bound; a bound holds when its margin >= -slack. A check whose smallest
/// margin lands within the slack of equality is Marginal, never Fails.
enum class BoundStatus { Holds, Marginal, Fails };

struct BoundVerdict {
  BoundStatus status = BoundStatus::Holds;
  double lower_margin = 0.0;
  double upper_margin = 0.0;
  const char* failed_side = nullptr;  // "lower" / "upper" when status == Fails
};

const char* bound_status_name(BoundStatus s);

/// log of the entropy-type magnitude 1 / prod (p_i/m)^(p_i/m) for any list of
/// non-negative integers with sum m >= 1; zero entries contribute factor 1.
Real log_phi(const std::vector<unsigned>& parts, mpfr_prec_t prec = 256);

/// Phi(nu) for a partition read with d rows (zero-padded). Requires
/// height(nu) <= d and sum >= 1. Always lies in [1, d].
LogReal phi(const Partition& nu, unsigned d, mpfr_prec_t prec = 256);

/// Two-sided bound Phi(nu)^m / m^(d^2+d) <= dim_irrep(nu) <= m * Phi(nu)^m.
/// Requires m = sum(nu) >= 100 (hypothesis of the bound) and height <= d.
BoundVerdict check_dim_phi_bounds(const Partition& nu, unsigned d, mpfr_prec_t prec = 256);

struct PushVerdict {
  unsigned i, j;
  Partition rho;
  BoundStatus status;
  double margin;  // log Phi(rho) - log Phi(nu)
};

/// For every valid single-box push of nu (read with d rows), checks
/// Phi(rho) >= Phi(nu) in log space.
std::vector<PushVerdict> check_push_monotone(const Partition& nu, unsigned d, mpfr_prec_t prec = 256);

/// (1/m^k) Phi^m <= multinomial(m; parts) <= m Phi^m, k = number of slots.
BoundVerdict check_multinomial_phi_bounds(const std::vector<unsigned>& parts, mpfr_prec_t prec = 256);

/// One-sided inequality relating the q-scaled multinomial-times-dimensions
/// product to the q-th power of the unscaled one:
///   C(qn; qn_1..qn_k) * prod d_{q lambda_i}
///     >= (1/(qn))^(k(d^2+d+1)) * [ (1/n^(2k)) C(n; n_1..n_k) prod d_{lambda_i} ]^q.
/// Requires n = sum(n_parts) >= 100, q >= 100, all n_i >= 1, heights <= d.
struct ScaledBoundVerdict {
  BoundStatus status;
  double margin;  // log(lhs) - log(rhs)
};

ScaledBoundVerdict check_scaled_product_bound(const std::vector<unsigned>& n_parts,
                                      const std::vector<Partition>& lambdas, unsigned q, unsigned d,
                                      mpfr_prec_t prec = 256);

}  // namespace gpi
