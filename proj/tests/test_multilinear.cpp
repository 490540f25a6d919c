#include <doctest.h>

#include <numeric>
#include <random>

#include "algebra_io.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "oracles.hpp"

using namespace gpi;

namespace {

RunConfig cfg_default() { return RunConfig{}; }

DegreeVector DV(std::vector<unsigned> n) { return DegreeVector{std::move(n)}; }

}  // namespace

TEST_SUITE_BEGIN("multilinear");

TEST_CASE("monomial counts: bracketings times orderings") {
  auto z2 = builtin("group_algebra:Z_2");
  RunConfig cfg = cfg_default();
  CHECK(make_scheme(z2, DV({1, 0}), false, cfg).monomial_count == 1);
  CHECK(make_scheme(z2, DV({2, 1}), false, cfg).monomial_count == 12);  // catalan(2)*3!
  CHECK(make_scheme(z2, DV({2, 1}), true, cfg).monomial_count == 6);
  CHECK(make_scheme(z2, DV({3, 2}), false, cfg).monomial_count == catalan(4) * 120);
  CHECK(catalan(4) == 14);
  CHECK(make_scheme(z2, DV({1, 1}), false, cfg).cols == 1 * 1 * 2);
}

TEST_CASE("shape enumeration: left-normed first, documented order") {
  const auto& s3 = enumerate_shapes(3, false);
  REQUIRE(s3.size() == 2);
  // first shape is ((01)2): root children are internal 0 and leaf 2
  CHECK(s3[0].nodes.back() == std::pair<unsigned, unsigned>{3u, 2u});
  CHECK(s3[0].nodes.front() == std::pair<unsigned, unsigned>{0u, 1u});
  // second is (0(12))
  CHECK(s3[1].nodes.back() == std::pair<unsigned, unsigned>{0u, 3u});
  const auto& a4 = enumerate_shapes(4, true);
  REQUIRE(a4.size() == 1);
}

TEST_CASE("permutation ranking round-trips") {
  for (unsigned n : {1u, 3u, 5u}) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    size_t rank = 0;
    do {
      CHECK(perm_rank(perm) == rank);
      CHECK(perm_unrank(rank, n) == perm);
      ++rank;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(rank == factorial_sz(n));
  }
}

TEST_CASE("monomial evaluation: examples") {
  RunConfig cfg = cfg_default();
  {
    auto f = builtin("field");
    auto sc = make_scheme(f, DV({3}), false, cfg);
    for (const auto& shape : *sc.shapes) {
      QVec v = evaluate_monomial(sc, shape, {0, 1, 2}, {0, 0, 0});
      CHECK(v == QVec{Rational(1)});
    }
  }
  {
    auto nil = builtin("nilpotent_1");
    auto sc = make_scheme(nil, DV({2}), false, cfg);
    QVec v = evaluate_monomial(sc, (*sc.shapes)[0], {0, 1}, {0, 0});
    CHECK(is_zero_vec(v));
  }
  {
    // x^(1)_1 (x^(2)_1 x^(2)_2) at (e, g, g) evaluates to e.
    auto z2 = builtin("group_algebra:Z_2");
    auto sc = make_scheme(z2, DV({1, 2}), false, cfg);
    const Shape& right_combed = (*sc.shapes)[1];  // (0(12))
    QVec v = evaluate_monomial(sc, right_combed, {0, 1, 2}, {0, 1, 1});
    CHECK(v == QVec{Rational(1), Rational(0)});
    // color mismatch: assigning g to the color-0 variable
    CHECK_THROWS_AS(evaluate_monomial(sc, right_combed, {0, 1, 2}, {1, 1, 1}), std::invalid_argument);
  }
}

TEST_CASE("partial codimension: examples with the brute-force oracle") {
  RunConfig cfg = cfg_default();
  auto f = builtin("field");
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(partial_codimension(f, DV({n}), false, cfg) == 1);
    CHECK(oracle::naive_partial_codimension(f, DV({n}), false) == 1);
  }
  auto nil = builtin("nilpotent_1");
  CHECK(partial_codimension(nil, DV({1}), false, cfg) == 1);
  CHECK(partial_codimension(nil, DV({2}), false, cfg) == 0);
  CHECK(partial_codimension(nil, DV({3}), false, cfg) == 0);

  auto z2 = builtin("group_algebra:Z_2");
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned n1 = 0; n1 <= n; ++n1) {
      CHECK(partial_codimension(z2, DV({n1, n - n1}), false, cfg) == 1);
    }
  }
}

TEST_CASE("partial codimension agrees with the independent path on every builtin") {
  RunConfig cfg = cfg_default();
  for (const auto& [name, desc] : builtin_catalog()) {
    auto A = builtin(name);
    unsigned k = static_cast<unsigned>(A.support().size());
    for (unsigned n = 1; n <= 3; ++n) {
      for (const auto& dv : enumerate_degree_vectors(n, k)) {
        for (bool assoc : {false, true}) {
          CHECK(partial_codimension(A, dv, assoc, cfg) ==
                oracle::naive_partial_codimension(A, dv, assoc));
        }
      }
    }
  }
}

TEST_CASE("associative and nonassociative ranks agree on associative algebras") {
  RunConfig cfg = cfg_default();
  for (const char* name : {"group_algebra:Z_2", "M2_Z2"}) {
    auto A = builtin(name);
    REQUIRE(A.is_associative());
    unsigned k = static_cast<unsigned>(A.support().size());
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& dv : enumerate_degree_vectors(n, k)) {
        CHECK(partial_codimension(A, dv, false, cfg) == partial_codimension(A, dv, true, cfg));
      }
    }
  }
}

TEST_CASE("left-normed mode restricts the span on a nonassociative algebra") {
  RunConfig cfg = cfg_default();
  auto A = parse_algebra_text(
      "name: nonassoc_demo\n"
      "labels: e\n"
      "table: e\n"
      "basis: x@e y@e\n"
      "prod: x*x = y\n"
      "prod: y*x = x\n");
  REQUIRE(!A.is_associative());
  CHECK(partial_codimension(A, DV({3}), false, cfg) == 6);
  CHECK(partial_codimension(A, DV({3}), true, cfg) == 3);
  CHECK(oracle::naive_partial_codimension(A, DV({3}), false) == 6);
  CHECK(partial_codimension(A, DV({4}), false, cfg) == 14);
  CHECK(partial_codimension(A, DV({4}), true, cfg) == 4);
}

TEST_CASE("rank bound and invariance under a grading automorphism") {
  RunConfig cfg = cfg_default();
  auto z3 = builtin("group_algebra:Z_3");
  // inversion g -> g^-1 is an algebra automorphism covering the label swap 1 <-> 2
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& dv : enumerate_degree_vectors(n, 3)) {
      DegreeVector swapped = DV({dv.n[0], dv.n[2], dv.n[1]});
      CHECK(partial_codimension(z3, dv, false, cfg) == partial_codimension(z3, swapped, false, cfg));
    }
  }
  auto m2 = builtin("M2_Z2");
  for (const auto& dv : {DV({2, 1}), DV({1, 2}), DV({2, 2})}) {
    size_t rank = partial_codimension(m2, dv, false, cfg);
    auto sc = make_scheme(m2, dv, false, cfg);
    CHECK(rank <= sc.monomial_count);
    CHECK(rank <= sc.cols);
  }
}

TEST_CASE("rank is invariant under relabeling same-color variables") {
  RunConfig cfg = cfg_default();
  auto m2 = builtin("M2_Z2");
  DegreeVector dv = DV({2, 1});
  auto sc = make_scheme(m2, dv, false, cfg);
  std::mt19937_64 rng(99);
  std::vector<unsigned> sigma = {1, 0, 2};  // swap the two color-0 variables
  StreamingRank plain(sc.cols), permuted(sc.cols);
  for (size_t si = 0; si < sc.shapes->size(); ++si) {
    std::vector<unsigned> perm(sc.n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      plain.add_row(monomial_row(sc, (*sc.shapes)[si], perm));
      std::vector<unsigned> image(perm);
      for (auto& v : image) v = sigma[v];
      permuted.add_row(monomial_row(sc, (*sc.shapes)[si], image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  CHECK(plain.rank() == permuted.rank());
}

TEST_CASE("resource caps are explicit errors naming the cap") {
  auto m2 = builtin("M2_Z2");
  RunConfig tiny = cfg_default();
  tiny.max_monomials = 5;
  try {
    partial_codimension(m2, DV({2, 1}), false, tiny);
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(e.cap == "max_monomials");
  }
  RunConfig degree_capped = cfg_default();
  try {
    make_scheme(m2, DV({4, 3}), false, degree_capped);  // n = 7 > 6
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(e.cap == "cap_n_nonassoc");
  }
  RunConfig cols_capped = cfg_default();
  cols_capped.max_columns = 10;
  try {
    make_scheme(m2, DV({2, 1}), false, cols_capped);
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(e.cap == "max_columns");
  }
}

TEST_CASE("generic element span: examples and closed-form bound") {
  RunConfig cfg = cfg_default();
  auto f = builtin("field");
  CHECK(generic_space_dimension(f, DV({2}), {1}, cfg) == 1);
  auto z2 = builtin("group_algebra:Z_2");
  CHECK(generic_space_dimension(z2, DV({1, 1}), {1, 1}, cfg) == 1);
  for (const auto& [name, desc] : builtin_catalog()) {
    auto A = builtin(name);
    unsigned k = static_cast<unsigned>(A.support().size());
    std::vector<unsigned> vc;
    for (unsigned label : A.support()) vc.push_back(A.component_dim(label));
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& dv : enumerate_degree_vectors(n, k)) {
        size_t dim = generic_space_dimension(A, dv, vc, cfg);
        CHECK(Int(static_cast<unsigned long>(dim)) <= generic_space_bound(A, dv));
      }
    }
  }
}

TEST_SUITE_END();
