#include "evaluation.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "errors.hpp"

namespace gpi {

size_t partial_codimension(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                           const RunConfig& cfg) {
  MonomialScheme sc = make_scheme(A, dv, associative, cfg);
  StreamingRank elim(sc.cols);
  for_each_monomial(sc, [&](size_t si, const std::vector<unsigned>& perm) {
    elim.add_row(monomial_row(sc, (*sc.shapes)[si], perm));
  });
  return elim.rank();
}

EvaluationMatrix build_evaluation_matrix(const GradedAlgebra& A, const DegreeVector& dv,
                                         bool associative, const RunConfig& cfg) {
  EvaluationMatrix M;
  M.scheme = make_scheme(A, dv, associative, cfg);
  M.rref = RrefBuilder(M.scheme.cols);
  M.rows.reserve(M.scheme.monomial_count);
  for_each_monomial(M.scheme, [&](size_t si, const std::vector<unsigned>& perm) {
    QVec row = monomial_row(M.scheme, (*M.scheme.shapes)[si], perm);
    M.rref.add_row(M.rows.size(), row);
    M.rows.push_back(std::move(row));
  });
  return M;
}

namespace {

// Y-monomial: sorted multiset of (color, basis-slot, variable-index) factors.
using YMono = std::vector<std::array<unsigned, 3>>;

}  // namespace

size_t generic_space_dimension(const GradedAlgebra& A, const DegreeVector& dv,
                               const std::vector<unsigned>& var_counts, const RunConfig& cfg) {
  auto supp = A.support();
  if (var_counts.size() != supp.size()) {
    throw std::invalid_argument("generic_space_dimension: var_counts length must equal support size");
  }
  unsigned n = dv.total();
  if (n < 1) throw std::invalid_argument("generic_space_dimension: total degree must be >= 1");
  const auto& shapes = enumerate_shapes(n, false);
  unsigned d = A.dim();

  // Color sequences with the prescribed counts, lexicographically.
  std::vector<unsigned> colors;
  for (size_t slot = 0; slot < dv.n.size(); ++slot) {
    colors.insert(colors.end(), dv.n[slot], static_cast<unsigned>(slot));
  }
  {
    // multinomial(n; dv) * prod var_counts^degree, checked against the cap
    Int words = Int(static_cast<unsigned long>(shapes.size())) * multinomial(n, dv.n);
    for (size_t slot = 0; slot < dv.n.size(); ++slot) {
      if (dv.n[slot] > 0 && var_counts[slot] == 0) {
        throw std::invalid_argument("generic_space_dimension: var_counts must be positive where dv is");
      }
      Int vc = var_counts[slot];
      for (unsigned t = 0; t < dv.n[slot]; ++t) words *= vc;
    }
    if (words > static_cast<unsigned long>(cfg.max_monomials)) {
      throw CapError("max_monomials", "generic word count " + int_str(words) + " exceeds cap");
    }
  }

  std::map<std::pair<unsigned, YMono>, size_t> column_of;
  std::vector<std::map<size_t, Rational>> sparse_rows;

  std::vector<std::vector<unsigned>> comp_basis;
  for (unsigned label : supp) comp_basis.push_back(A.component_basis(label));

  std::sort(colors.begin(), colors.end());
  do {
    // j-assignment: per leaf, which generic variable of its color.
    std::vector<unsigned> jdig(n, 0);
    while (true) {
      for (size_t si = 0; si < shapes.size(); ++si) {
        // Expand the product of generic elements over component-basis choices.
        std::map<size_t, Rational> row;
        std::vector<unsigned> mdig(n, 0);
        while (true) {
          std::vector<unsigned> leaf_basis(n);
          for (unsigned p = 0; p < n; ++p) leaf_basis[p] = comp_basis[colors[p]][mdig[p]];
          QVec val = evaluate_shape(A, shapes[si], leaf_basis);
          if (!is_zero_vec(val)) {
            YMono ym(n);
            for (unsigned p = 0; p < n; ++p) ym[p] = {colors[p], mdig[p], jdig[p]};
            std::sort(ym.begin(), ym.end());
            for (unsigned l = 0; l < d; ++l) {
              if (val[l] == 0) continue;
              auto key = std::make_pair(l, ym);
              auto it = column_of.find(key);
              size_t col;
              if (it == column_of.end()) {
                col = column_of.size();
                if (col >= cfg.max_columns) {
                  throw CapError("max_columns", "generic span columns exceed cap");
                }
                column_of.emplace(std::move(key), col);
              } else {
                col = it->second;
              }
              row[col] += val[l];
            }
          }
          unsigned p = n;
          bool done = false;
          while (p-- > 0) {
            if (++mdig[p] < comp_basis[colors[p]].size()) break;
            mdig[p] = 0;
            if (p == 0) done = true;
          }
          if (done) break;
        }
        sparse_rows.push_back(std::move(row));
      }
      unsigned p = n;
      bool done = false;
      while (p-- > 0) {
        if (++jdig[p] < var_counts[colors[p]]) break;
        jdig[p] = 0;
        if (p == 0) done = true;
      }
      if (done) break;
    }
  } while (std::next_permutation(colors.begin(), colors.end()));

  size_t cols = column_of.size();
  StreamingRank elim(cols);
  for (const auto& sr : sparse_rows) {
    QVec dense(cols, Rational(0));
    for (const auto& [c, v] : sr) dense[c] = v;
    elim.add_row(dense);
  }
  return elim.rank();
}

Int generic_space_bound(const GradedAlgebra& A, const DegreeVector& dv) {
  auto supp = A.support();
  Int sum_d = 0;
  Int bound = 1;
  for (size_t slot = 0; slot < supp.size(); ++slot) {
    unsigned di = A.component_dim(supp[slot]);
    sum_d += di;
    Int base = dv.n[slot] + 1;
    for (unsigned t = 0; t < di * di; ++t) bound *= base;
  }
  return sum_d * bound;
}

}  // namespace gpi
