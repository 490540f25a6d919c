#pragma once

#include "linalg.hpp"
#include "monomials.hpp"

namespace gpi {

/// Rank of the evaluation matrix over exact rationals = the partial
/// codimension at the given degree vector. Streaming: rows are generated in
/// canonical monomial order and eliminated incrementally; the matrix is never
/// materialized.
size_t partial_codimension(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                           const RunConfig& cfg);

/// Full-matrix mode: all rows retained (canonical order) plus the reduced
/// pivot data needed to express rows over the first-independent pivot rows.
struct EvaluationMatrix {
  MonomialScheme scheme;
  std::vector<QVec> rows;
  RrefBuilder rref;
  EvaluationMatrix() : rref(0) {}
  size_t rank() const { return rref.rank(); }
  const std::vector<size_t>& pivot_monomials() const { return rref.pivot_rows(); }
};

EvaluationMatrix build_evaluation_matrix(const GradedAlgebra& A, const DegreeVector& dv,
                                         bool associative, const RunConfig& cfg);

/// Dimension of the span of all products of generic elements (one generic
/// element per variable, var_counts[i] variables of color i, color-i degree
/// exactly dv[i]) inside A tensor a polynomial ring. Equals the dimension of
/// the corresponding multihomogeneous component of the relatively free
/// algebra of the variety generated by A.
size_t generic_space_dimension(const GradedAlgebra& A, const DegreeVector& dv,
                               const std::vector<unsigned>& var_counts, const RunConfig& cfg);

/// The bound (sum d_i) * prod (n_i + 1)^(d_i^2) it must satisfy.
Int generic_space_bound(const GradedAlgebra& A, const DegreeVector& dv);

}  // namespace gpi
