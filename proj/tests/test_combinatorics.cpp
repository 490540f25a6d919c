#include <doctest.h>

#include <cmath>

#include "characters.hpp"
#include "combinatorial_checks.hpp"
#include "oracles.hpp"
#include "partitions.hpp"

using namespace gpi;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

double log_phi_d(const Partition& nu) { return log_phi(nu.parts()).to_double(); }

}  // namespace

TEST_SUITE_BEGIN("combinatorics");

TEST_CASE("partition enumeration: examples and canonical order") {
  auto p42 = enumerate_partitions(4, 2);
  REQUIRE(p42.size() == 3);
  CHECK(p42[0] == P({4}));
  CHECK(p42[1] == P({3, 1}));
  CHECK(p42[2] == P({2, 2}));

  auto p03 = enumerate_partitions(0, 3);
  REQUIRE(p03.size() == 1);
  CHECK(p03[0] == Partition());

  auto p51 = enumerate_partitions(5, 1);
  REQUIRE(p51.size() == 1);
  CHECK(p51[0] == P({5}));
}

TEST_CASE("partition enumeration: counts, heights, order, no duplicates") {
  const unsigned expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned m = 0; m <= 10; ++m) {
    auto ps = enumerate_partitions(m, m == 0 ? 1 : m);
    CHECK(ps.size() == expected[m]);
    for (size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].sum() == m);
      if (i > 0) CHECK(ps[i] < ps[i - 1]);  // strictly lex decreasing
    }
  }
  for (const auto& p : enumerate_partitions(9, 3)) CHECK(p.height() <= 3);
}

TEST_CASE("irreducible dimensions: hook formula versus tableau counting") {
  CHECK(dim_irrep(P({7})) == 1);
  CHECK(dim_irrep(P({1, 1, 1})) == 1);
  CHECK(dim_irrep(P({2, 1})) == 2);
  CHECK(dim_irrep(P({3, 2})) == 5);
  for (unsigned m = 1; m <= 6; ++m) {
    for (const auto& lam : enumerate_partitions(m, m)) {
      CHECK(dim_irrep(lam) == oracle::syt_count(lam));
      CHECK(dim_irrep(lam) == dim_irrep(conjugate(lam)));
    }
  }
}

TEST_CASE("sum of squared dimensions is the group order") {
  for (unsigned m = 1; m <= 10; ++m) {
    Int total = 0;
    for (const auto& lam : enumerate_partitions(m, m)) {
      Int d = dim_irrep(lam);
      total += d * d;
    }
    CHECK(total == factorial(m));
  }
}

TEST_CASE("phi: examples") {
  CHECK(std::abs(phi(P({9}), 3).log_as_double()) < 1e-70);
  CHECK(std::abs(phi(P({5, 5}), 2).log_as_double() - std::log(2.0)) < 1e-15);
  CHECK(std::abs(phi(P({2, 1, 1}), 3).log_as_double() - 1.5 * std::log(2.0)) < 1e-15);
  CHECK_THROWS_AS(phi(P({2, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("phi: range and scaling invariance") {
  Real eps = log_slack();
  for (unsigned d = 1; d <= 4; ++d) {
    for (const auto& nu : enumerate_partitions(12, d)) {
      Real lp = log_phi(nu.parts());
      CHECK(lp.to_double() >= -1e-60);
      CHECK(lp.to_double() <= std::log(double(d)) + 1e-12);
      for (unsigned q : {2u, 5u}) {
        Real diff = log_phi(scale(nu, q).parts()) - lp;
        diff.mul_si(diff.to_double() < 0 ? -1 : 1);
        CHECK(diff <= eps);
      }
    }
  }
}

TEST_CASE("dimension versus phi-power bounds") {
  CHECK(check_dim_phi_bounds(P({100}), 1).status == BoundStatus::Holds);
  CHECK(check_dim_phi_bounds(P({50, 50}), 2).status == BoundStatus::Holds);
  CHECK(check_dim_phi_bounds(P({34, 33, 33}), 3).status == BoundStatus::Holds);
  CHECK_THROWS_AS(check_dim_phi_bounds(P({50, 49}), 2), std::invalid_argument);  // m = 99 < 100
}

TEST_CASE("push down one box: arithmetic and diagram validity") {
  CHECK(push_down_box(P({3, 1}), 1, 2, 2) == P({2, 2}));
  CHECK(push_down_box(P({4, 2, 1}), 1, 3, 3) == P({3, 2, 2}));
  CHECK(push_down_box(P({5}), 1, 2, 2) == P({4, 1}));
  CHECK_THROWS_AS(push_down_box(P({2, 2}), 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(push_down_box(P({3, 1}), 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(push_down_box(P({3}), 2, 3, 3), std::invalid_argument);  // row 2 empty
}

TEST_CASE("push monotonicity: examples and a small sweep") {
  {
    auto vs = check_push_monotone(P({7}), 2);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].rho == P({6, 1}));
    CHECK(vs[0].status != BoundStatus::Fails);
  }
  {
    auto vs = check_push_monotone(P({3, 1}), 2);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].rho == P({2, 2}));
    CHECK(vs[0].status == BoundStatus::Holds);
    CHECK(std::abs((log_phi_d(P({2, 2})) - log_phi_d(P({3, 1}))) - vs[0].margin) < 1e-12);
  }
  for (unsigned m = 6; m <= 12; ++m) {
    for (unsigned d = 2; d <= 4; ++d) {
      for (const auto& nu : enumerate_partitions(m, d)) {
        for (const auto& v : check_push_monotone(nu, d)) {
          CHECK(v.status != BoundStatus::Fails);
        }
      }
    }
  }
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(9, {9}) == 1);
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(5, {3, 0, 2}) == 10);
  CHECK_THROWS_AS(multinomial(5, {2, 2}), std::invalid_argument);
}

TEST_CASE("multinomial versus phi-power bounds") {
  CHECK(check_multinomial_phi_bounds({11}).status == BoundStatus::Holds);
  CHECK(check_multinomial_phi_bounds({30, 30}).status == BoundStatus::Holds);
  CHECK(check_multinomial_phi_bounds({20, 20, 20}).status == BoundStatus::Holds);
  CHECK(check_multinomial_phi_bounds({7, 0, 3}).status == BoundStatus::Holds);
  // m = 1: both sides meet exactly, reported marginal rather than anything else
  CHECK(check_multinomial_phi_bounds({1}).status == BoundStatus::Marginal);
}

TEST_CASE("character values: distinguished columns and hand-checked tables") {
  for (unsigned m = 1; m <= 8; ++m) {
    std::vector<unsigned> ones(m, 1);
    for (const auto& lam : enumerate_partitions(m, m)) {
      CHECK(char_value(lam, P(ones)) == dim_irrep(lam));
    }
    // sign character: (-1)^(m - #cycles)
    std::vector<unsigned> col(m, 1);
    for (const auto& c : enumerate_partitions(m, m)) {
      int sign = ((m - c.height()) % 2) ? -1 : 1;
      CHECK(char_value(P(col), c) == sign);
      CHECK(char_value(P({m}), c) == 1);  // trivial character
    }
  }
  CHECK(char_value(P({2, 1}), P({3})) == -1);

  // S_4 table, classes in canonical order (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
  const std::vector<Partition> classes = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
  const std::vector<std::pair<Partition, std::vector<int>>> table = {
      {P({4}), {1, 1, 1, 1, 1}},
      {P({3, 1}), {-1, 0, -1, 1, 3}},
      {P({2, 2}), {0, -1, 2, 0, 2}},
      {P({2, 1, 1}), {1, 0, -1, -1, 3}},
      {P({1, 1, 1, 1}), {-1, 1, 1, -1, 1}},
  };
  for (const auto& [lam, vals] : table) {
    for (size_t c = 0; c < classes.size(); ++c) {
      CHECK(char_value(lam, classes[c]) == vals[c]);
    }
  }
  CHECK_THROWS_AS(char_value(P({2, 1}), P({2, 2})), std::invalid_argument);
}

TEST_CASE("character orthogonality and class sizes") {
  for (unsigned m = 1; m <= 6; ++m) {
    auto classes = conjugacy_classes(m);
    Int total = 0;
    for (const auto& c : classes) total += c.class_size;
    CHECK(total == factorial(m));

    auto lams = enumerate_partitions(m, m);
    for (size_t a = 0; a < lams.size(); ++a) {
      for (size_t b = a; b < lams.size(); ++b) {
        Int inner = 0;
        for (const auto& c : classes) {
          inner += c.class_size * char_value(lams[a], c.cycles) * char_value(lams[b], c.cycles);
        }
        CHECK(inner == (a == b ? factorial(m) : Int(0)));
      }
    }
  }
}

TEST_CASE("scaled product inequality: examples and preconditions") {
  CHECK(check_scaled_product_bound({100}, {P({100})}, 100, 1).status == BoundStatus::Holds);
  CHECK(check_scaled_product_bound({50, 50}, {P({50}), P({50})}, 100, 2).status == BoundStatus::Holds);
  CHECK(check_scaled_product_bound({50, 50}, {P({25, 25}), P({25, 25})}, 100, 2).status ==
        BoundStatus::Holds);
  CHECK_THROWS_AS(check_scaled_product_bound({50}, {P({50})}, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_scaled_product_bound({100}, {P({100})}, 99, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_scaled_product_bound({100}, {P({50, 50})}, 100, 1), std::invalid_argument);
}

TEST_SUITE_END();
