#include "combinatorial_checks.hpp"

#include <stdexcept>

namespace gpi {

const char* bound_status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Marginal: return "marginal";
    case BoundStatus::Fails: return "fails";
  }
  return "?";
}

Real log_phi(const std::vector<unsigned>& parts, mpfr_prec_t prec) {
  unsigned long m = 0;
  for (unsigned p : parts) m += p;
  if (m == 0) throw std::invalid_argument("log_phi: sum of parts must be >= 1");
  Real logm = Real::log_of_ui(m, prec);
  Real acc(prec);
  for (unsigned p : parts) {
    if (p == 0) continue;  // 0^0 = 1 convention
    Real t = logm - Real::log_of_ui(p, prec);
    t.mul_si(static_cast<long>(p));
    acc += t;
  }
  acc.div_ui(m);
  return acc;
}

LogReal phi(const Partition& nu, unsigned d, mpfr_prec_t prec) {
  if (nu.height() > d) throw std::invalid_argument("phi: height(nu) > d");
  if (nu.sum() == 0) throw std::invalid_argument("phi: empty partition");
  return LogReal{true, log_phi(nu.parts(), prec)};
}

namespace {

BoundVerdict two_sided_verdict(const Real& lower_margin, const Real& upper_margin, mpfr_prec_t prec) {
  Real eps = log_slack(prec);
  Real neg_eps = eps;
  neg_eps.mul_si(-1);
  BoundVerdict v;
  v.lower_margin = lower_margin.to_double();
  v.upper_margin = upper_margin.to_double();
  if (lower_margin < neg_eps) {
    v.status = BoundStatus::Fails;
    v.failed_side = "lower";
  } else if (upper_margin < neg_eps) {
    v.status = BoundStatus::Fails;
    v.failed_side = "upper";
  } else if (lower_margin <= eps || upper_margin <= eps) {
    v.status = BoundStatus::Marginal;
  } else {
    v.status = BoundStatus::Holds;
  }
  return v;
}

}  // namespace

BoundVerdict check_dim_phi_bounds(const Partition& nu, unsigned d, mpfr_prec_t prec) {
  unsigned m = nu.sum();
  if (m < 100) throw std::invalid_argument("check_dim_phi_bounds: requires m >= 100");
  if (nu.height() > d) throw std::invalid_argument("check_dim_phi_bounds: height(nu) > d");
  Real log_dim = Real::log_of(dim_irrep(nu), prec);
  Real phim = log_phi(nu.parts(), prec);
  phim.mul_si(static_cast<long>(m));
  Real logm = Real::log_of_ui(m, prec);

  // lower: log d_nu - (m log Phi - (d^2+d) log m)
  Real lower = log_dim;
  lower -= phim;
  Real corr = logm;
  corr.mul_si(static_cast<long>(d) * d + d);
  lower += corr;
  // upper: (log m + m log Phi) - log d_nu
  Real upper = logm;
  upper += phim;
  upper -= log_dim;
  return two_sided_verdict(lower, upper, prec);
}

std::vector<PushVerdict> check_push_monotone(const Partition& nu, unsigned d, mpfr_prec_t prec) {
  if (nu.height() > d) throw std::invalid_argument("check_push_monotone: height(nu) > d");
  Real base = log_phi(nu.parts(), prec);
  Real eps = log_slack(prec);
  Real neg_eps = eps;
  neg_eps.mul_si(-1);
  std::vector<PushVerdict> out;
  for (unsigned i = 1; i <= d; ++i) {
    for (unsigned j = i + 1; j <= d; ++j) {
      Partition rho;
      try {
        rho = push_down_box(nu, i, j, d);
      } catch (const std::invalid_argument&) {
        continue;  // not a valid push
      }
      Real margin = log_phi(rho.parts(), prec);
      margin -= base;
      PushVerdict pv{i, j, rho, BoundStatus::Holds, margin.to_double()};
      if (margin < neg_eps) {
        pv.status = BoundStatus::Fails;
      } else if (margin <= eps) {
        pv.status = BoundStatus::Marginal;
      }
      out.push_back(std::move(pv));
    }
  }
  return out;
}

BoundVerdict check_multinomial_phi_bounds(const std::vector<unsigned>& parts, mpfr_prec_t prec) {
  unsigned long m = 0;
  for (unsigned p : parts) m += p;
  if (m == 0) throw std::invalid_argument("check_multinomial_phi_bounds: sum must be >= 1");
  unsigned long k = parts.size();
  Real log_c = Real::log_of(multinomial(m, parts), prec);
  Real phim = log_phi(parts, prec);
  phim.mul_si(static_cast<long>(m));
  Real logm = Real::log_of_ui(m, prec);

  Real lower = log_c;
  lower -= phim;
  Real corr = logm;
  corr.mul_si(static_cast<long>(k));
  lower += corr;

  Real upper = logm;
  upper += phim;
  upper -= log_c;
  return two_sided_verdict(lower, upper, prec);
}

ScaledBoundVerdict check_scaled_product_bound(const std::vector<unsigned>& n_parts,
                                      const std::vector<Partition>& lambdas, unsigned q, unsigned d,
                                      mpfr_prec_t prec) {
  if (n_parts.size() != lambdas.size()) {
    throw std::invalid_argument("check_scaled_product_bound: k mismatch between n_parts and lambdas");
  }
  unsigned long n = 0;
  for (size_t i = 0; i < n_parts.size(); ++i) {
    if (n_parts[i] == 0) throw std::invalid_argument("check_scaled_product_bound: n_i must be positive");
    if (lambdas[i].sum() != n_parts[i]) {
      throw std::invalid_argument("check_scaled_product_bound: lambda_" + std::to_string(i + 1) +
                                  " is not a partition of n_" + std::to_string(i + 1));
    }
    if (lambdas[i].height() > d) {
      throw std::invalid_argument("check_scaled_product_bound: height(lambda_" + std::to_string(i + 1) +
                                  ") > d");
    }
    n += n_parts[i];
  }
  if (n < 100) throw std::invalid_argument("check_scaled_product_bound: requires n >= 100");
  if (q < 100) throw std::invalid_argument("check_scaled_product_bound: requires q >= 100");

  unsigned long k = n_parts.size();
  std::vector<unsigned> qn_parts = n_parts;
  for (auto& x : qn_parts) x *= q;

  // lhs: log C(qn; qn_1..qn_k) + sum log d_{q lambda_i}
  Real lhs = Real::log_of(multinomial(n * q, qn_parts), prec);
  for (const auto& lam : lambdas) lhs += Real::log_of(dim_irrep(scale(lam, q)), prec);

  // rhs: -k(d^2+d+1) log(qn) + q * ( log C(n; ...) + sum log d_lambda - 2k log n )
  Real rhs = Real::log_of_ui(n * q, prec);
  rhs.mul_si(-(static_cast<long>(k) * (static_cast<long>(d) * d + d + 1)));
  Real inner = Real::log_of(multinomial(n, n_parts), prec);
  for (const auto& lam : lambdas) inner += Real::log_of(dim_irrep(lam), prec);
  Real logn = Real::log_of_ui(n, prec);
  logn.mul_si(2 * static_cast<long>(k));
  inner -= logn;
  inner.mul_si(static_cast<long>(q));
  rhs += inner;

  Real margin = lhs;
  margin -= rhs;
  Real eps = log_slack(prec);
  Real neg_eps = eps;
  neg_eps.mul_si(-1);
  ScaledBoundVerdict v{BoundStatus::Holds, margin.to_double()};
  if (margin < neg_eps) {
    v.status = BoundStatus::Fails;
  } else if (margin <= eps) {
    v.status = BoundStatus::Marginal;
  }
  return v;
}

}  // namespace gpi
