#include "monomials.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace gpi {

std::string dv_str(const DegreeVector& dv) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < dv.n.size(); ++i) {
    if (i) os << ',';
    os << dv.n[i];
  }
  os << ')';
  return os.str();
}

std::vector<DegreeVector> enumerate_degree_vectors(unsigned n, unsigned k) {
  std::vector<DegreeVector> out;
  std::vector<unsigned> acc(k, 0);
  // Lexicographically decreasing: first slot from n down to 0, recursively.
  struct Rec {
    unsigned k;
    std::vector<DegreeVector>& out;
    std::vector<unsigned>& acc;
    void go(unsigned slot, unsigned left) {
      if (slot + 1 == k) {
        acc[slot] = left;
        out.push_back(DegreeVector{acc});
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        acc[slot] = v;
        go(slot + 1, left - v);
      }
    }
  } rec{k, out, acc};
  if (k == 0) return out;
  rec.go(0, n);
  return out;
}

namespace {

std::vector<Shape> build_shapes(unsigned n) {
  if (n == 1) {
    return {Shape{1, {}}};
  }
  std::vector<Shape> out;
  for (unsigned s = n - 1; s >= 1; --s) {
    std::vector<Shape> lefts = build_shapes(s);
    std::vector<Shape> rights = build_shapes(n - s);
    for (const auto& L : lefts) {
      for (const auto& R : rights) {
        Shape sh;
        sh.n_leaves = n;
        size_t ln = L.nodes.size(), rn = R.nodes.size();
        auto map_left = [&](unsigned c) { return c < s ? c : n + (c - s); };
        auto map_right = [&](unsigned c) { return c < n - s ? s + c : n + ln + (c - (n - s)); };
        for (const auto& [a, b] : L.nodes) sh.nodes.emplace_back(map_left(a), map_left(b));
        for (const auto& [a, b] : R.nodes) sh.nodes.emplace_back(map_right(a), map_right(b));
        unsigned lroot = s == 1 ? 0u : static_cast<unsigned>(n + ln - 1);
        unsigned rroot = n - s == 1 ? s : static_cast<unsigned>(n + ln + rn - 1);
        sh.nodes.emplace_back(lroot, rroot);
        out.push_back(std::move(sh));
      }
    }
  }
  return out;
}

Shape left_normed_shape(unsigned n) {
  Shape sh;
  sh.n_leaves = n;
  if (n == 1) return sh;
  sh.nodes.emplace_back(0u, 1u);
  for (unsigned i = 2; i < n; ++i) {
    sh.nodes.emplace_back(static_cast<unsigned>(n + i - 2), i);
  }
  return sh;
}

std::map<std::pair<unsigned, bool>, std::vector<Shape>> g_shape_cache;
std::mutex g_shape_mu;

}  // namespace

const std::vector<Shape>& enumerate_shapes(unsigned n, bool associative) {
  if (n < 1) throw std::invalid_argument("enumerate_shapes: n must be >= 1");
  std::lock_guard<std::mutex> lk(g_shape_mu);
  auto key = std::make_pair(n, associative);
  auto it = g_shape_cache.find(key);
  if (it != g_shape_cache.end()) return it->second;
  std::vector<Shape> shapes = associative ? std::vector<Shape>{left_normed_shape(n)} : build_shapes(n);
  return g_shape_cache.emplace(key, std::move(shapes)).first->second;
}

size_t catalan(unsigned n) {
  size_t c = 1;
  for (unsigned i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

size_t factorial_sz(unsigned n) {
  size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

size_t perm_rank(const std::vector<unsigned>& perm) {
  unsigned n = static_cast<unsigned>(perm.size());
  size_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::vector<unsigned> perm_unrank(size_t rank, unsigned n) {
  std::vector<size_t> digits(n, 0);
  for (unsigned i = n; i-- > 0;) {
    digits[i] = rank % (n - i);
    rank /= (n - i);
  }
  std::vector<unsigned> pool(n);
  for (unsigned i = 0; i < n; ++i) pool[i] = i;
  std::vector<unsigned> out(n);
  for (unsigned i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<long>(digits[i]));
  }
  return out;
}

size_t MonomialScheme::index_of(size_t shape_idx, const std::vector<unsigned>& leaf_vars) const {
  return shape_idx * factorial_sz(n) + perm_rank(leaf_vars);
}

MonomialScheme make_scheme(const GradedAlgebra& A, const DegreeVector& dv, bool associative,
                           const RunConfig& cfg) {
  MonomialScheme sc;
  sc.algebra = &A;
  sc.dv = dv;
  sc.associative = associative;
  sc.support = A.support();
  if (dv.n.size() != sc.support.size()) {
    throw std::invalid_argument("degree vector length must equal the support size");
  }
  sc.n = dv.total();
  if (sc.n < 1) throw std::invalid_argument("degree vector must have total >= 1");
  unsigned cap = associative ? cfg.cap_n_assoc : cfg.cap_n_nonassoc;
  if (sc.n > cap) {
    throw CapError(associative ? "cap_n_assoc" : "cap_n_nonassoc",
                   "total degree " + std::to_string(sc.n) + " exceeds " + std::to_string(cap));
  }
  for (size_t slot = 0; slot < dv.n.size(); ++slot) {
    for (unsigned t = 0; t < dv.n[slot]; ++t) sc.var_color.push_back(static_cast<unsigned>(slot));
  }
  for (unsigned label : sc.support) sc.comp_basis.push_back(A.component_basis(label));
  sc.shapes = &enumerate_shapes(sc.n, associative);

  size_t count = sc.shapes->size() * factorial_sz(sc.n);
  if (count > cfg.max_monomials) {
    throw CapError("max_monomials", std::to_string(count) + " monomials at degree vector, cap " +
                                        std::to_string(cfg.max_monomials));
  }
  sc.monomial_count = count;
  size_t tuples = 1;
  for (size_t slot = 0; slot < dv.n.size(); ++slot) {
    for (unsigned t = 0; t < dv.n[slot]; ++t) {
      tuples *= sc.comp_basis[slot].size();
      if (tuples > cfg.max_columns) {
        throw CapError("max_columns", "basis tuple count exceeds " + std::to_string(cfg.max_columns));
      }
    }
  }
  sc.tuple_count = tuples;
  sc.cols = tuples * A.dim();
  if (sc.cols > cfg.max_columns) {
    throw CapError("max_columns",
                   std::to_string(sc.cols) + " columns at degree vector, cap " + std::to_string(cfg.max_columns));
  }
  return sc;
}

QVec evaluate_shape(const GradedAlgebra& A, const Shape& shape, const std::vector<unsigned>& leaf_basis) {
  unsigned n = shape.n_leaves;
  unsigned d = A.dim();
  if (n == 1) {
    QVec v(d, Rational(0));
    v[leaf_basis[0]] = 1;
    return v;
  }
  std::vector<QVec> vals(shape.nodes.size());
  auto value_of = [&](unsigned child) -> const QVec& {
    static thread_local QVec leaf;
    if (child < n) {
      leaf.assign(d, Rational(0));
      leaf[leaf_basis[child]] = 1;
      return leaf;
    }
    return vals[child - n];
  };
  for (size_t t = 0; t < shape.nodes.size(); ++t) {
    auto [a, b] = shape.nodes[t];
    // Leaf-leaf and leaf-node products read the structure constants directly.
    if (a < n && b < n) {
      vals[t] = A.product_row(leaf_basis[a], leaf_basis[b]);
    } else {
      QVec left = value_of(a);
      QVec right = value_of(b);
      vals[t] = A.multiply(left, right);
    }
  }
  return vals.back();
}

QVec evaluate_monomial(const MonomialScheme& sc, const Shape& shape,
                       const std::vector<unsigned>& leaf_vars, const std::vector<unsigned>& assignment) {
  const GradedAlgebra& A = *sc.algebra;
  std::vector<unsigned> leaf_basis(shape.n_leaves);
  for (unsigned p = 0; p < shape.n_leaves; ++p) {
    unsigned var = leaf_vars[p];
    unsigned basis = assignment[var];
    if (A.grade(basis) != sc.support[sc.var_color[var]]) {
      throw std::invalid_argument("evaluate_monomial: assignment color mismatch at variable " +
                                  std::to_string(var));
    }
    leaf_basis[p] = basis;
  }
  return evaluate_shape(A, shape, leaf_basis);
}

QVec monomial_row(const MonomialScheme& sc, const Shape& shape, const std::vector<unsigned>& leaf_vars) {
  const GradedAlgebra& A = *sc.algebra;
  unsigned d = A.dim();
  QVec row(sc.cols, Rational(0));
  unsigned n = sc.n;
  std::vector<size_t> digit(n, 0);
  std::vector<unsigned> leaf_basis(n);
  size_t tuple_idx = 0;
  while (true) {
    std::vector<unsigned> assignment(n);
    for (unsigned v = 0; v < n; ++v) assignment[v] = sc.comp_basis[sc.var_color[v]][digit[v]];
    for (unsigned p = 0; p < n; ++p) leaf_basis[p] = assignment[leaf_vars[p]];
    QVec val = evaluate_shape(A, shape, leaf_basis);
    for (unsigned l = 0; l < d; ++l) {
      if (val[l] != 0) row[tuple_idx * d + l] = std::move(val[l]);
    }
    ++tuple_idx;
    // Odometer over variables, last variable fastest.
    unsigned v = n;
    while (v-- > 0) {
      if (++digit[v] < sc.comp_basis[sc.var_color[v]].size()) break;
      digit[v] = 0;
      if (v == 0) return row;
    }
  }
}

}  // namespace gpi
