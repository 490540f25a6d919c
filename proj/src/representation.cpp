#include "representation.hpp"

#include <algorithm>
#include <sstream>

#include "characters.hpp"
#include "errors.hpp"

namespace gpi {

namespace {

// Cartesian product over per-color partition lists, odometer order.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<Partition>>& lists, Fn&& fn) {
  size_t k = lists.size();
  std::vector<size_t> idx(k, 0);
  while (true) {
    std::vector<const Partition*> tuple(k);
    for (size_t i = 0; i < k; ++i) tuple[i] = &lists[i][idx[i]];
    fn(tuple);
    size_t i = k;
    bool done = k == 0;
    while (i-- > 0) {
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
}

std::vector<std::vector<Partition>> per_color_partitions(const DegreeVector& dv) {
  std::vector<std::vector<Partition>> lists;
  for (unsigned ni : dv.n) lists.push_back(enumerate_partitions(ni, ni == 0 ? 1 : ni));
  return lists;
}

}  // namespace

std::vector<HClass> h_classes(const DegreeVector& dv) {
  std::vector<HClass> out;
  for_each_tuple(per_color_partitions(dv), [&](const std::vector<const Partition*>& tuple) {
    HClass c;
    c.size = 1;
    for (const Partition* p : tuple) {
      auto ct = cycle_type(*p);
      c.size *= ct.class_size;
      c.cycle_types.push_back(*p);
    }
    out.push_back(std::move(c));
  });
  return out;
}

HPerm canonical_rep(const HClass& c) {
  HPerm h;
  for (const Partition& ct : c.cycle_types) {
    std::vector<unsigned> perm(ct.sum());
    unsigned base = 0;
    for (unsigned len : ct.parts()) {
      for (unsigned t = 0; t < len; ++t) perm[base + t] = base + (t + 1) % len;
      base += len;
    }
    h.perms.push_back(std::move(perm));
  }
  return h;
}

Rational quotient_trace(const EvaluationMatrix& M, const HPerm& sigma) {
  const MonomialScheme& sc = M.scheme;
  // Variable relabeling induced by sigma: var t of color i maps to sigma_i(t).
  std::vector<unsigned> var_map(sc.n);
  {
    std::vector<unsigned> offsets(sc.dv.n.size(), 0);
    unsigned off = 0;
    for (size_t slot = 0; slot < sc.dv.n.size(); ++slot) {
      offsets[slot] = off;
      off += sc.dv.n[slot];
    }
    for (size_t slot = 0; slot < sc.dv.n.size(); ++slot) {
      if (sigma.perms[slot].size() != sc.dv.n[slot]) {
        throw std::invalid_argument("quotient_trace: permutation sizes must match the degree vector");
      }
      for (unsigned t = 0; t < sc.dv.n[slot]; ++t) {
        var_map[offsets[slot] + t] = offsets[slot] + sigma.perms[slot][t];
      }
    }
  }

  const auto& pivots = M.pivot_monomials();
  size_t nfact = factorial_sz(sc.n);
  Rational trace(0);
  for (size_t s = 0; s < pivots.size(); ++s) {
    size_t idx = pivots[s];
    size_t shape_idx = idx / nfact;
    std::vector<unsigned> leaf_vars = perm_unrank(idx % nfact, sc.n);
    for (auto& lv : leaf_vars) lv = var_map[lv];
    size_t image_idx = sc.index_of(shape_idx, leaf_vars);
    auto coords = M.rref.pivot_coords(M.rows[image_idx]);
    if (!coords) throw IntegrityError("permuted monomial row escaped the row space");
    trace += (*coords)[s];
  }
  return trace;
}

std::string MultiPartition::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << lambda[i].str();
  }
  os << ']';
  return os.str();
}

Int MultiplicityTable::colength() const {
  Int s = 0;
  for (const auto& [mp, m] : entries) s += m;
  return s;
}

Int MultiplicityTable::character_dimension_sum() const {
  Int s = 0;
  for (const auto& [mp, m] : entries) {
    Int d = 1;
    for (const auto& lam : mp.lambda) {
      if (lam.height() > 0) d *= dim_irrep(lam);
    }
    s += m * d;
  }
  return s;
}

MultiplicityTable multiplicities(const EvaluationMatrix& M) {
  const MonomialScheme& sc = M.scheme;
  const DegreeVector& dv = sc.dv;
  MultiplicityTable table;
  table.dv = dv;

  auto classes = h_classes(dv);
  std::vector<Rational> traces;
  traces.reserve(classes.size());
  for (const auto& c : classes) traces.push_back(quotient_trace(M, canonical_rep(c)));

  Int order = 1;
  for (unsigned ni : dv.n) order *= factorial(ni);

  const GradedAlgebra& A = *sc.algebra;
  for_each_tuple(per_color_partitions(dv), [&](const std::vector<const Partition*>& tuple) {
    Rational acc(0);
    for (size_t ci = 0; ci < classes.size(); ++ci) {
      Int chi = 1;
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i]->sum() > 0) chi *= char_value(*tuple[i], classes[ci].cycle_types[i]);
      }
      acc += traces[ci] * Rational(classes[ci].size * chi);
    }
    acc /= Rational(order);
    if (acc.get_den() != 1) {
      throw IntegrityError("non-integer multiplicity at " + dv_str(dv) + ": " + rational_str(acc));
    }
    Int m = acc.get_num();
    if (m < 0) throw IntegrityError("negative multiplicity " + int_str(m));
    if (m == 0) return;
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i]->height() > A.component_dim(sc.support[i])) {
        throw IntegrityError("nonzero multiplicity with height above component dimension at " +
                             tuple[i]->str());
      }
    }
    MultiPartition mp;
    for (const Partition* p : tuple) mp.lambda.push_back(*p);
    table.entries.emplace_back(std::move(mp), std::move(m));
  });
  return table;
}

Int partial_colength(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                     const RunConfig& cfg) {
  EvaluationMatrix M = build_evaluation_matrix(A, dv, associative, cfg);
  return multiplicities(M).colength();
}

CrosscheckResult verify_rank_vs_character(const GradedAlgebra& A, const DegreeVector& dv,
                                          bool associative, const RunConfig& cfg) {
  EvaluationMatrix M = build_evaluation_matrix(A, dv, associative, cfg);
  MultiplicityTable t = multiplicities(M);
  CrosscheckResult r{M.rank(), t.character_dimension_sum(), false};
  r.equal = Int(static_cast<unsigned long>(r.rank)) == r.character_sum;
  return r;
}

MultiplicityBoundResult verify_multiplicity_bound(const GradedAlgebra& A, const DegreeVector& dv,
                                                  const RunConfig& cfg) {
  EvaluationMatrix M = build_evaluation_matrix(A, dv, cfg.associative, cfg);
  MultiplicityTable t = multiplicities(M);
  Int max_mult = 0;
  for (const auto& [mp, m] : t.entries) max_mult = std::max(max_mult, m);
  std::vector<unsigned> var_counts;
  for (unsigned label : M.scheme.support) var_counts.push_back(A.component_dim(label));
  MultiplicityBoundResult r;
  r.max_multiplicity = max_mult;
  r.generic_dim = generic_space_dimension(A, dv, var_counts, cfg);
  r.generic_bound = generic_space_bound(A, dv);
  r.mult_bound_holds = max_mult <= Int(static_cast<unsigned long>(r.generic_dim));
  r.generic_bound_holds = Int(static_cast<unsigned long>(r.generic_dim)) <= r.generic_bound;
  return r;
}

}  // namespace gpi
