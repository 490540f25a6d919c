#pragma once

#include "evaluation.hpp"
#include "partitions.hpp"

namespace gpi {

/// Conjugacy class of H = S_{n_1} x ... x S_{n_k}: one cycle type per color,
/// class size = product of the component class sizes.
struct HClass {
  std::vector<Partition> cycle_types;
  Int size;
};

std::vector<HClass> h_classes(const DegreeVector& dv);

/// Element of H as one permutation (0-based images) per color.
struct HPerm {
  std::vector<std::vector<unsigned>> perms;
};

/// Canonical representative: cycles laid out on consecutive points.
HPerm canonical_rep(const HClass& c);

/// Trace of the permutation acting on the row space of the evaluation matrix
/// (image of a monomial row = row of the variable-relabeled monomial, looked
/// up by canonical index). Exact; well-defined because the row set is
/// permuted by the action.
Rational quotient_trace(const EvaluationMatrix& M, const HPerm& sigma);

struct MultiPartition {
  std::vector<Partition> lambda;
  bool operator==(const MultiPartition&) const = default;
  std::string str() const;
};

/// Exact multiplicity table of the irreducible H-modules in the quotient.
/// Entries are extracted by character inner products and are asserted to be
/// non-negative integers; tuples whose height exceeds the component dimension
/// are asserted to have multiplicity zero. Either failure throws
/// IntegrityError: it would mean the rank, trace and character paths
/// disagree.
struct MultiplicityTable {
  DegreeVector dv;
  std::vector<std::pair<MultiPartition, Int>> entries;  // nonzero only, canonical order

  Int colength() const;
  /// Sum of multiplicity * product of component irreducible dimensions.
  Int character_dimension_sum() const;
};

MultiplicityTable multiplicities(const EvaluationMatrix& M);

Int partial_colength(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                     const RunConfig& cfg);

/// Exact cross-check: rank-computed partial codimension against the
/// character-side sum. A mismatch is a cross-path failure.
struct CrosscheckResult {
  size_t rank;
  Int character_sum;
  bool equal;
};

CrosscheckResult verify_rank_vs_character(const GradedAlgebra& A, const DegreeVector& dv,
                                          bool associative, const RunConfig& cfg);

/// Max multiplicity <= generic span dimension, and the generic span dimension
/// against its closed-form bound.
struct MultiplicityBoundResult {
  Int max_multiplicity;
  size_t generic_dim;
  Int generic_bound;
  bool mult_bound_holds;
  bool generic_bound_holds;
};

MultiplicityBoundResult verify_multiplicity_bound(const GradedAlgebra& A, const DegreeVector& dv,
                                                  const RunConfig& cfg);

}  // namespace gpi
