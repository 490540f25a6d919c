#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "algebra.hpp"
#include "config.hpp"

namespace gpi {

/// Color degrees (n_1,...,n_k), one entry per support label of the algebra,
/// in support order.
struct DegreeVector {
  std::vector<unsigned> n;
  unsigned total() const {
    unsigned s = 0;
    for (unsigned x : n) s += x;
    return s;
  }
  bool operator==(const DegreeVector&) const = default;
};

/// All degree vectors with the given total, lexicographically decreasing.
std::vector<DegreeVector> enumerate_degree_vectors(unsigned n, unsigned k);

std::string dv_str(const DegreeVector& dv);

/// Binary bracketing with n leaves, leaves numbered 0..n-1 left to right.
/// Child encoding: value < n_leaves refers to a leaf position, otherwise to
/// internal node (value - n_leaves); internal nodes are topologically ordered
/// with the root last.
struct Shape {
  unsigned n_leaves = 1;
  std::vector<std::pair<unsigned, unsigned>> nodes;
};

/// Bracketings in the canonical recursive order (left subtree size
/// descending, then left shapes, then right shapes); the left-normed chain
/// comes first and is the only shape in associative mode.
const std::vector<Shape>& enumerate_shapes(unsigned n, bool associative);

size_t catalan(unsigned n);
size_t factorial_sz(unsigned n);
/// Lexicographic rank of a permutation of 0..n-1 and its inverse.
size_t perm_rank(const std::vector<unsigned>& perm);
std::vector<unsigned> perm_unrank(size_t rank, unsigned n);

/// Enumeration universe for the multilinear monomials of one degree vector:
/// variables are numbered canonically (colors in support order, indices
/// within a color increasing), a monomial is (shape index, leaf variable
/// sequence), and the canonical monomial index is shape-major with leaf
/// sequences in lexicographic order.
struct MonomialScheme {
  const GradedAlgebra* algebra = nullptr;
  DegreeVector dv;
  bool associative = false;
  unsigned n = 0;
  std::vector<unsigned> support;                   // label of each color slot
  std::vector<unsigned> var_color;                 // variable id -> color slot
  std::vector<std::vector<unsigned>> comp_basis;   // color slot -> global basis indices
  const std::vector<Shape>* shapes = nullptr;
  size_t monomial_count = 0;
  size_t tuple_count = 0;  // prod_i (dim A_{g_i})^{n_i}
  size_t cols = 0;         // tuple_count * dim

  size_t index_of(size_t shape_idx, const std::vector<unsigned>& leaf_vars) const;
};

/// Builds the scheme and enforces the degree and resource caps (throws
/// CapError naming the cap).
MonomialScheme make_scheme(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                           const RunConfig& cfg);

/// Streams every monomial of the scheme in canonical order (shape-major,
/// leaf sequences lexicographic): fn(shape_index, leaf_vars).
template <typename Fn>
void for_each_monomial(const MonomialScheme& sc, Fn&& fn) {
  std::vector<unsigned> perm(sc.n);
  for (unsigned i = 0; i < sc.n; ++i) perm[i] = i;
  for (size_t si = 0; si < sc.shapes->size(); ++si) {
    std::vector<unsigned> p = perm;
    do {
      fn(si, p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

/// Evaluates a bracketing whose leaf at position p is the basis vector
/// leaf_basis[p]; exact coordinates in A.
QVec evaluate_shape(const GradedAlgebra& A, const Shape& shape, const std::vector<unsigned>& leaf_basis);

/// Evaluates one monomial at one assignment (variable id -> global basis
/// index; the basis vector's grade must match the variable's color).
QVec evaluate_monomial(const MonomialScheme& sc, const Shape& shape,
                       const std::vector<unsigned>& leaf_vars, const std::vector<unsigned>& assignment);

/// Row of the evaluation matrix: all basis tuples, columns (tuple, coordinate).
QVec monomial_row(const MonomialScheme& sc, const Shape& shape, const std::vector<unsigned>& leaf_vars);

}  // namespace gpi
