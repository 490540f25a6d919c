#pragma once

#include "partitions.hpp"

namespace gpi {

/// Irreducible S_m character value chi_lambda on the class of the given cycle
/// type, by the Murnaghan-Nakayama recursion (beta-set rim hook removal),
/// memoized and safe to call concurrently. Throws on size mismatch.
Int char_value(const Partition& lambda, const Partition& cycles);

}  // namespace gpi
