#include "linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace gpi {

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

void Subspace::reduce(QVec& v) const {
  for (size_t t = 0; t < rows_.size(); ++t) {
    const Rational& c = v[pivot_cols_[t]];
    if (c == 0) continue;
    Rational f = c;
    for (size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[t][j];
  }
}

bool Subspace::insert(QVec v) {
  reduce(v);
  size_t lead = ambient_;
  for (size_t j = 0; j < ambient_; ++j) {
    if (v[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == ambient_) return false;
  Rational inv = v[lead];
  for (size_t j = 0; j < ambient_; ++j) v[j] /= inv;
  // Clear the new pivot column in existing rows, keep rows sorted by pivot.
  for (size_t t = 0; t < rows_.size(); ++t) {
    const Rational& c = rows_[t][lead];
    if (c == 0) continue;
    Rational f = c;
    for (size_t j = 0; j < ambient_; ++j) rows_[t][j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
  size_t idx = static_cast<size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool Subspace::contains(QVec v) const {
  reduce(v);
  return is_zero_vec(v);
}

std::vector<Int> clear_denominators(const QVec& row) {
  Int lcm = 1;
  for (const auto& x : row) {
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<Int> out(row.size());
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    out[j] = row[j].get_num() * (lcm / row[j].get_den());
  }
  return out;
}

namespace {

// Divide the row by the gcd of its entries and make the first nonzero entry
// positive. Returns the column of that entry, or row size when zero.
size_t normalize_int_row(std::vector<Int>& r) {
  Int g = 0;
  size_t lead = r.size();
  for (size_t j = 0; j < r.size(); ++j) {
    if (r[j] != 0) {
      if (lead == r.size()) lead = j;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
    }
  }
  if (lead == r.size()) return lead;
  if (r[lead] < 0) g = -g;
  for (auto& x : r) x /= g;
  return lead;
}

}  // namespace

bool StreamingRank::add_row(const QVec& row) { return add_int_row(clear_denominators(row)); }

bool StreamingRank::add_int_row(std::vector<Int> r) {
  // Invariant: every stored pivot row is zero at every other pivot column, so
  // one pass fully reduces the incoming row at all pivot columns.
  for (const auto& p : pivots_) {
    const Int& rc = r[p.col];
    if (rc == 0) continue;
    const Int& pv = p.v[p.col];
    Int a = pv, b = rc;
    for (size_t j = 0; j < cols_; ++j) {
      r[j] = r[j] * a - p.v[j] * b;
    }
    normalize_int_row(r);
  }
  size_t lead = normalize_int_row(r);
  if (lead == cols_) return false;
  // Restore the invariant: clear the new pivot column in existing rows.
  for (auto& p : pivots_) {
    const Int& pc = p.v[lead];
    if (pc == 0) continue;
    Int a = r[lead], b = pc;
    for (size_t j = 0; j < cols_; ++j) {
      p.v[j] = p.v[j] * a - r[j] * b;
    }
    normalize_int_row(p.v);
  }
  Pivot np{lead, std::move(r)};
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), np,
                              [](const Pivot& x, const Pivot& y) { return x.col < y.col; });
  pivots_.insert(pos, std::move(np));
  return true;
}

bool RrefBuilder::add_row(size_t original_index, const QVec& row) {
  QVec v = row;
  QVec alpha(rref_.size(), Rational(0));
  for (size_t t = 0; t < rref_.size(); ++t) {
    const Rational& c = v[pivot_cols_[t]];
    if (c == 0) continue;
    alpha[t] = c;
    Rational f = c;
    for (size_t j = 0; j < cols_; ++j) v[j] -= f * rref_[t][j];
  }
  size_t lead = cols_;
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == cols_) return false;

  // combo(new) = (e_idx - sum alpha_t combo_t) / v[lead]
  QVec combo(pivot_rows_.size() + 1, Rational(0));
  combo.back() = 1;
  for (size_t t = 0; t < rref_.size(); ++t) {
    if (alpha[t] == 0) continue;
    for (size_t s = 0; s < combos_[t].size(); ++s) combo[s] -= alpha[t] * combos_[t][s];
  }
  Rational inv = v[lead];
  for (auto& x : combo) x /= inv;
  for (size_t j = 0; j < cols_; ++j) v[j] /= inv;

  // Grow existing combos to the new length, then clear the new pivot column.
  for (auto& c : combos_) c.resize(pivot_rows_.size() + 1, Rational(0));
  for (size_t t = 0; t < rref_.size(); ++t) {
    const Rational& c = rref_[t][lead];
    if (c == 0) continue;
    Rational f = c;
    for (size_t j = 0; j < cols_; ++j) rref_[t][j] -= f * v[j];
    for (size_t s = 0; s < combo.size(); ++s) combos_[t][s] -= f * combo[s];
  }

  pivot_rows_.push_back(original_index);
  pivot_cols_.push_back(lead);
  rref_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  return true;
}

std::optional<QVec> RrefBuilder::pivot_coords(const QVec& v) const {
  // Rows are mutually reduced, so the coefficient over rref_[t] is v[pivot_cols_[t]].
  QVec coords(pivot_rows_.size(), Rational(0));
  QVec rem = v;
  for (size_t t = 0; t < rref_.size(); ++t) {
    const Rational a = rem[pivot_cols_[t]];
    if (a == 0) continue;
    for (size_t j = 0; j < cols_; ++j) rem[j] -= a * rref_[t][j];
    for (size_t s = 0; s < combos_[t].size(); ++s) coords[s] += a * combos_[t][s];
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

std::vector<QVec> kernel(const std::vector<QVec>& equations, size_t unknowns) {
  Subspace rowspace(unknowns);
  for (const auto& eq : equations) rowspace.insert(eq);
  const auto& rows = rowspace.basis();
  std::vector<size_t> pivot_of_col(unknowns, rows.size());
  std::vector<size_t> pcols;
  for (size_t t = 0; t < rows.size(); ++t) {
    for (size_t j = 0; j < unknowns; ++j) {
      if (rows[t][j] != 0) {
        pivot_of_col[j] = t;
        pcols.push_back(j);
        break;
      }
    }
  }
  std::vector<QVec> out;
  for (size_t f = 0; f < unknowns; ++f) {
    if (pivot_of_col[f] < rows.size()) continue;  // pivot column
    QVec x(unknowns, Rational(0));
    x[f] = 1;
    for (size_t t = 0; t < rows.size(); ++t) x[pcols[t]] = -rows[t][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace gpi
