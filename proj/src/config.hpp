#pragma once

#include <cstddef>
#include <cstdint>

#include <mpfr.h>

namespace gpi {

/// Seed used when the caller does not supply one; always echoed in output.
inline constexpr uint64_t kDefaultSeed = 1729;

struct RunConfig {
  unsigned n_max = 4;
  bool associative = false;
  size_t max_monomials = 2000000;
  size_t max_columns = 200000;
  unsigned cap_n_nonassoc = 6;  // hard degree caps, raisable by flag
  unsigned cap_n_assoc = 8;
  unsigned trials = 64;         // randomized simplicity trials per component
  int coord_bound = 10;         // random coordinates drawn from [-B, B]
  uint64_t seed = kDefaultSeed;
  mpfr_prec_t precision_bits = 256;
  unsigned workers = 0;         // 0 = all cores
  unsigned tail_n_min = 3;      // exponent-estimate window start
  unsigned ratio_n_min = 3;       // below this, ratio-bound failures are informational
  unsigned generic_n_max = 4;   // degree cap for generic-element span checks
};

}  // namespace gpi
