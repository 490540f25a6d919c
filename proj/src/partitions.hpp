#pragma once

#include <compare>
#include <string>
#include <vector>

#include "numbers.hpp"

namespace gpi {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0. Conceptually zero-padded to any length via
/// part(i).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned sum() const { return sum_; }
  unsigned height() const { return static_cast<unsigned>(parts_.size()); }
  /// Zero-padded access, 0-based.
  unsigned part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  std::string str() const;

 private:
  std::vector<unsigned> parts_;
  unsigned sum_ = 0;
};

/// All partitions of m with height <= max_height, lexicographically
/// decreasing (the canonical order throughout this library), no duplicates.
std::vector<Partition> enumerate_partitions(unsigned m, unsigned max_height);

Partition conjugate(const Partition& p);

/// (q*p_1, ..., q*p_t), a partition of q*m.
Partition scale(const Partition& p, unsigned q);

/// Dimension of the irreducible S_m representation indexed by lambda,
/// by the hook length formula. Requires a nonempty partition.
Int dim_irrep(const Partition& lambda);

/// Moves one box from row i to row j (1-based, i < j <= d, rows read with
/// zero padding up to d). Throws std::invalid_argument when the result is
/// not a Young diagram, naming the violated row pair.
Partition push_down_box(const Partition& nu, unsigned i, unsigned j, unsigned d);

/// Conjugacy class of S_m given by cycle lengths, with its exact size
/// m! / prod_l (l^{m_l} * m_l!).
struct CycleType {
  Partition cycles;
  Int class_size;
};

CycleType cycle_type(const Partition& cycles);
std::vector<CycleType> conjugacy_classes(unsigned m);

}  // namespace gpi
