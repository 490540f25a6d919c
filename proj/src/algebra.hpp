#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "numbers.hpp"

namespace gpi {

/// Finite grading structure: a list of labels with a total binary operation.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::vector<std::string> labels, std::vector<unsigned> table);

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(unsigned i) const { return labels_[i]; }
  unsigned product(unsigned i, unsigned j) const { return table_[i * size() + j]; }
  std::optional<unsigned> label_index(const std::string& name) const;

 private:
  std::vector<std::string> labels_;
  std::vector<unsigned> table_;  // row-major, entries are label indices
};

enum class TableKind { Magma, Semigroup, CommutativeSemigroup, Group };

const char* table_kind_name(TableKind k);

struct TableClass {
  bool associative = false;
  bool commutative = false;
  bool has_identity = false;
  std::optional<unsigned> identity;
  bool has_inverses = false;
  TableKind kind = TableKind::Magma;
};

/// Exhaustive classification of the finite operation table; the kind is the
/// most specific of group > commutative semigroup > semigroup > magma.
TableClass classify_table(const OperationTable& t);

struct GradingViolation {
  unsigned i, j, l;  // basis indices: coefficient of b_l in b_i * b_j breaks the grading
};

struct ValidationResult {
  bool ok = true;
  std::vector<GradingViolation> violations;
};

/// Finite-dimensional algebra over exact rationals with a grading by the
/// labels of an operation table. Immutable once constructed; all queries are
/// read-only and safe to share across threads.
class GradedAlgebra {
 public:
  /// products: sparse (i, j, l, coefficient) entries; unspecified products are zero.
  GradedAlgebra(std::string name, OperationTable table, std::vector<std::string> basis_names,
                std::vector<unsigned> grades,
                const std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>>& products);

  const std::string& name() const { return name_; }
  unsigned dim() const { return static_cast<unsigned>(basis_names_.size()); }
  const OperationTable& table() const { return table_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  unsigned grade(unsigned i) const { return grades_[i]; }
  const Rational& sc(unsigned i, unsigned j, unsigned l) const { return prod_[i * dim() + j][l]; }
  const QVec& product_row(unsigned i, unsigned j) const { return prod_[i * dim() + j]; }

  QVec multiply(const QVec& x, const QVec& y) const;

  /// Checks the grading rule on every structure constant.
  ValidationResult validate() const;

  /// Labels with a nonzero component, in table declaration order.
  std::vector<unsigned> support() const;
  unsigned component_dim(unsigned label) const;
  /// Global basis indices of the component, in basis order.
  std::vector<unsigned> component_basis(unsigned label) const;

  bool product_is_zero() const;  // A*A == 0
  bool is_associative() const;   // exhaustive triple check on basis vectors
  std::optional<QVec> unit() const;

 private:
  std::string name_;
  OperationTable table_;
  std::vector<std::string> basis_names_;
  std::vector<unsigned> grades_;
  std::vector<QVec> prod_;  // [i*d+j] -> coordinates of b_i b_j
};

/// Homogeneous subspace: for each support label, a canonical subspace of that
/// component in component coordinates.
struct GradedSubspace {
  struct Component {
    unsigned label;
    Subspace space;
  };
  std::vector<Component> components;
  size_t total_dim() const;
};

/// Smallest subspace containing S and closed under left and right
/// multiplication by A. Fixed point in at most dim(A) rounds.
Subspace ideal_closure(const GradedAlgebra& A, const Subspace& S);

/// The two-sided annihilator {x : xA = Ax = 0}, computed as the kernel of the
/// stacked multiplication maps. Homogeneity is asserted and checked.
GradedSubspace annihilator(const GradedAlgebra& A);
Subspace annihilator_full(const GradedAlgebra& A);

/// Splits a subspace into homogeneous components; nullopt when the subspace
/// is not homogeneous.
std::optional<GradedSubspace> to_graded(const GradedAlgebra& A, const Subspace& S);
Subspace from_graded(const GradedAlgebra& A, const GradedSubspace& S);

/// One-sided-certainty simplicity verdict: a No always carries re-verified
/// evidence (a proper nonzero closed subspace, or A*A = 0); ProbablyYes is
/// Monte Carlo over `trials` seeded random vectors per component plus a
/// deterministic sweep of basis vectors and their pairwise sums/differences.
struct SimplicityVerdict {
  bool certain_no = false;
  bool square_zero = false;
  std::optional<Subspace> witness;
  unsigned trials = 0;
  uint64_t seed = 0;
};

SimplicityVerdict is_graded_simple(const GradedAlgebra& A, unsigned trials, uint64_t seed,
                                   int coord_bound = 10);
SimplicityVerdict is_simple(const GradedAlgebra& A, unsigned trials, uint64_t seed,
                            int coord_bound = 10);

/// Catalog of example algebras: field, nilpotent_1, dual_numbers,
/// group_algebra:Z_m, M2_Z2, direct_sum_Z2. Throws on unknown names.
GradedAlgebra builtin(const std::string& name);
std::vector<std::pair<std::string, std::string>> builtin_catalog();

}  // namespace gpi
