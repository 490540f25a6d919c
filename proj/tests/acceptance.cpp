// Acceptance suite: every criterion prints one PASS/FAIL line and the binary
// exits nonzero when any criterion fails. Tolerances are pinned here: all
// integer comparisons are exact, all log-space comparisons use 256-bit
// precision with slack 2^-64.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "characters.hpp"
#include "combinatorial_checks.hpp"
#include "errors.hpp"
#include "oracles.hpp"

extern "C" {
#include "gradedpi.h"
}

using namespace gpi;

namespace {

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> run;
};

const std::vector<std::string> kCrosscheckAlgebras = {
    "field", "group_algebra:Z_2", "group_algebra:Z_3", "M2_Z2", "nilpotent_1", "dual_numbers"};

std::vector<std::string> all_builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, desc] : builtin_catalog()) names.push_back(name);
  return names;
}

bool crosspath_exactness(std::string& detail) {
  RunConfig cfg;
  size_t cases = 0;
  for (const auto& name : kCrosscheckAlgebras) {
    auto A = builtin(name);
    unsigned k = static_cast<unsigned>(A.support().size());
    for (bool assoc : {false, true}) {
      unsigned n_hi = assoc ? 5 : 4;
      for (unsigned n = 1; n <= n_hi; ++n) {
        for (const auto& dv : enumerate_degree_vectors(n, k)) {
          auto r = verify_rank_vs_character(A, dv, assoc, cfg);
          ++cases;
          if (!r.equal) {
            detail = name + " dv=" + dv_str(dv) + (assoc ? " assoc" : " nonassoc") +
                     ": rank=" + std::to_string(r.rank) + " character_sum=" + int_str(r.character_sum);
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(cases) + " (algebra, degree vector, mode) cases, all exactly equal";
  return true;
}

bool z2_sequence(std::string& detail) {
  RunConfig cfg;
  cfg.n_max = 5;
  cfg.associative = false;
  auto A = builtin("group_algebra:Z_2");
  auto rep = compute_report(A, cfg, true, false);
  if (rep.rows.size() != 5) {
    detail = "expected 5 rows";
    return false;
  }
  Int want = 1;
  for (unsigned n = 1; n <= 5; ++n) {
    want *= 2;
    const auto& row = rep.rows[n - 1];
    if (row.c_gr != want) {
      detail = "c_" + std::to_string(n) + " = " + int_str(row.c_gr) + ", want " + int_str(want);
      return false;
    }
    if (!row.root_exact || row.root_exact_value != 2) {
      detail = "root at n=" + std::to_string(n) + " not exactly 2";
      return false;
    }
    if (n <= 4 && (!row.l_gr || *row.l_gr != n + 1)) {
      detail = "l_" + std::to_string(n) + " != n+1";
      return false;
    }
  }
  if (!rep.estimates || rep.estimates->tail_min != 2.0 || rep.estimates->tail_max != 2.0) {
    detail = "tail estimates not both exactly 2";
    return false;
  }
  detail = "c_n = 2^n (n=1..5), r_n = 2 exactly, l_n = n+1 (n=1..4), tail estimates (2, 2)";
  return true;
}

bool exponential_bound(std::string& detail) {
  RunConfig cfg;
  cfg.n_max = 4;
  size_t cases = 0;
  for (const auto& name : all_builtin_names()) {
    auto A = builtin(name);
    auto rep = compute_report(A, cfg, false, false);
    for (const auto& line : verify_codim_exponential_bound(A, rep.rows)) {
      ++cases;
      if (line.outcome != CheckOutcome::Pass) {
        detail = line.subject + ": " + line.detail;
        return false;
      }
    }
  }
  detail = std::to_string(cases) + " exact comparisons c_n <= d^(n+1)";
  return true;
}

bool colength_bound(std::string& detail) {
  RunConfig cfg;
  cfg.n_max = 4;
  size_t cases = 0;
  for (const auto& name : all_builtin_names()) {
    auto A = builtin(name);
    auto rep = compute_report(A, cfg, true, false);
    for (const auto& line : verify_colength_polynomial_bound(A, rep.rows)) {
      ++cases;
      if (line.outcome != CheckOutcome::Pass) {
        detail = line.subject + ": " + line.detail;
        return false;
      }
    }
  }
  detail = std::to_string(cases) + " exact comparisons l_n <= d(n+1)^(k+sum d_i^2+sum d_i)";
  return true;
}

bool dim_phi_bounds(std::string& detail) {
  size_t cases = 0;
  for (unsigned m : {100u, 101u}) {
    for (const auto& nu : enumerate_partitions(m, 2)) {
      auto v = check_dim_phi_bounds(nu, 2, 256);
      ++cases;
      if (v.status == BoundStatus::Fails) {
        detail = "nu=" + nu.str() + " d=2 fails on the " + v.failed_side + " side";
        return false;
      }
    }
  }
  std::mt19937_64 rng(20200713);
  unsigned sampled = 0;
  while (sampled < 200) {
    unsigned m = (rng() % 2) ? 100 : 101;
    unsigned a = 34 + static_cast<unsigned>(rng() % (m - 35));  // a in [34, m-2]
    unsigned rest = m - a;
    if (rest < 2) continue;
    unsigned b = 1 + static_cast<unsigned>(rng() % (rest - 1));
    unsigned c = rest - b;
    if (b < c) std::swap(b, c);
    if (a < b || c < 1) continue;
    auto v = check_dim_phi_bounds(Partition({a, b, c}), 3, 256);
    ++sampled;
    ++cases;
    if (v.status == BoundStatus::Fails) {
      detail = "sampled nu=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
               ") d=3 fails";
      return false;
    }
  }
  detail = std::to_string(cases) + " partitions (heights <= 2 exhaustive at m=100,101; 200 sampled at height 3)";
  return true;
}

bool push_monotonicity(std::string& detail) {
  size_t pushes = 0;
  for (unsigned m = 1; m <= 20; ++m) {
    for (const auto& nu : enumerate_partitions(m, 5)) {
      for (const auto& v : check_push_monotone(nu, 5, 256)) {
        ++pushes;
        if (v.status == BoundStatus::Fails) {
          detail = "nu=" + nu.str() + " push(" + std::to_string(v.i) + "," + std::to_string(v.j) +
                   ") margin " + std::to_string(v.margin);
          return false;
        }
      }
    }
  }
  detail = std::to_string(pushes) + " single-box pushes, all with Phi(rho) >= Phi(nu)";
  return true;
}

bool stirling_bounds(std::string& detail) {
  size_t cases = 0;
  for (unsigned m = 1; m <= 40; ++m) {
    for (unsigned a = 0; a <= m; ++a) {
      // k = 1
      if (a == m) {
        auto v = check_multinomial_phi_bounds({m}, 256);
        ++cases;
        if (v.status == BoundStatus::Fails) {
          detail = "[m] case m=" + std::to_string(m);
          return false;
        }
      }
      // k = 2
      {
        auto v = check_multinomial_phi_bounds({a, m - a}, 256);
        ++cases;
        if (v.status == BoundStatus::Fails) {
          detail = "(" + std::to_string(a) + "," + std::to_string(m - a) + ")";
          return false;
        }
      }
      // k = 3
      for (unsigned b = 0; a + b <= m; ++b) {
        auto v = check_multinomial_phi_bounds({a, b, m - a - b}, 256);
        ++cases;
        if (v.status == BoundStatus::Fails) {
          detail = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(m - a - b) + ")";
          return false;
        }
      }
    }
  }
  detail = std::to_string(cases) + " compositions of m <= 40 into k <= 3 parts";
  return true;
}

bool scaled_product_grid(std::string& detail) {
  struct Case {
    std::vector<unsigned> n_parts;
    std::vector<Partition> lambdas;
  };
  std::vector<Case> grid;
  for (const auto& lam : {Partition({100}), Partition({50, 50}), Partition({99, 1})}) {
    grid.push_back({{100}, {lam}});
  }
  const std::vector<Partition> lam50 = {Partition({50}), Partition({25, 25}), Partition({49, 1})};
  for (const auto& l1 : lam50) {
    for (const auto& l2 : lam50) {
      grid.push_back({{50, 50}, {l1, l2}});
    }
  }
  size_t cases = 0;
  for (unsigned q : {100u, 128u}) {
    for (const auto& c : grid) {
      auto v = check_scaled_product_bound(c.n_parts, c.lambdas, q, 2, 256);
      ++cases;
      if (v.status == BoundStatus::Fails) {
        detail = "q=" + std::to_string(q) + " case " + c.lambdas[0].str() + " margin " +
                 std::to_string(v.margin);
        return false;
      }
    }
  }
  detail = std::to_string(cases) + " grid cases (n=100, q in {100,128}, k <= 2, heights <= 2)";
  return true;
}

bool ratio_bound(std::string& detail) {
  RunConfig cfg;
  cfg.n_max = 5;
  cfg.associative = true;  // the three algebras are associative; cross-path equality is criterion 1
  size_t cases = 0;
  for (const char* name : {"group_algebra:Z_2", "group_algebra:Z_3", "M2_Z2"}) {
    auto A = builtin(name);
    if (!A.is_associative()) {
      detail = std::string(name) + " unexpectedly nonassociative";
      return false;
    }
    if (annihilator_full(A).dim() != 0) {
      detail = std::string(name) + " has a nonzero annihilator";
      return false;
    }
    auto rep = compute_report(A, cfg, false, false);
    for (const auto& line : verify_codim_ratio_bound(A, rep.rows, 3)) {
      if (line.outcome == CheckOutcome::Skipped) {
        detail = line.subject + " skipped";
        return false;
      }
      // criterion covers computed n >= 3
      if (line.subject.find("n=1") != std::string::npos ||
          line.subject.find("n=2") != std::string::npos) {
        continue;
      }
      ++cases;
      if (line.outcome != CheckOutcome::Pass) {
        detail = line.subject + ": " + line.detail;
        return false;
      }
    }
  }
  detail = std::to_string(cases) + " consecutive pairs with n >= 3, all satisfy c_(n+1) > c_n/(8k n^k)";
  return true;
}

bool representation_integrality(std::string& detail) {
  RunConfig cfg;
  size_t tables = 0;
  for (const auto& name : all_builtin_names()) {
    auto A = builtin(name);
    unsigned k = static_cast<unsigned>(A.support().size());
    auto supp = A.support();
    for (unsigned n = 1; n <= 4; ++n) {
      for (const auto& dv : enumerate_degree_vectors(n, k)) {
        try {
          auto M = build_evaluation_matrix(A, dv, false, cfg);
          auto t = multiplicities(M);  // integrality asserted inside
          ++tables;
          for (const auto& [mp, m] : t.entries) {
            if (m <= 0) {
              detail = name + " dv=" + dv_str(dv) + ": nonpositive stored multiplicity";
              return false;
            }
            for (size_t i = 0; i < mp.lambda.size(); ++i) {
              if (mp.lambda[i].height() > A.component_dim(supp[i])) {
                detail = name + " dv=" + dv_str(dv) + ": height violation at " + mp.lambda[i].str();
                return false;
              }
            }
          }
        } catch (const IntegrityError& e) {
          detail = name + " dv=" + dv_str(dv) + ": " + e.what();
          return false;
        }
      }
    }
  }
  detail = std::to_string(tables) + " multiplicity tables, all integral with admissible heights";
  return true;
}

bool combinatorics_identities(std::string& detail) {
  for (unsigned m = 1; m <= 10; ++m) {
    Int total = 0;
    for (const auto& lam : enumerate_partitions(m, m)) {
      Int d = dim_irrep(lam);
      total += d * d;
    }
    if (total != factorial(m)) {
      detail = "sum of squared dimensions at n=" + std::to_string(m);
      return false;
    }
  }
  for (unsigned m = 1; m <= 8; ++m) {
    auto classes = conjugacy_classes(m);
    auto lams = enumerate_partitions(m, m);
    for (size_t a = 0; a < lams.size(); ++a) {
      for (size_t b = a; b < lams.size(); ++b) {
        Int inner = 0;
        for (const auto& c : classes) {
          inner += c.class_size * char_value(lams[a], c.cycles) * char_value(lams[b], c.cycles);
        }
        if (inner != (a == b ? factorial(m) : Int(0))) {
          detail = "orthogonality fails at " + lams[a].str() + ", " + lams[b].str();
          return false;
        }
      }
    }
  }
  detail = "dimension identity (n <= 10) and character orthogonality (n <= 8), exact";
  return true;
}

bool determinism(std::string& detail) {
  gp_algebra* a = nullptr;
  if (gp_algebra_builtin("group_algebra:Z_2", &a) != GP_OK) {
    detail = "builtin load failed";
    return false;
  }
  gp_config cfg;
  gp_config_defaults(&cfg);
  cfg.n_max = 3;
  cfg.seed = 424242;
  char* j1 = nullptr;
  char* j2 = nullptr;
  int hf = 0, tr = 0;
  bool ok = gp_verify_json(a, &cfg, &j1, &hf, &tr) == GP_OK &&
            gp_verify_json(a, &cfg, &j2, &hf, &tr) == GP_OK && std::string(j1) == std::string(j2);
  if (ok) {
    detail = "two verify runs with seed 424242, byte-identical JSON (" +
             std::to_string(std::string(j1).size()) + " bytes)";
  } else {
    detail = "verify JSON differed between runs";
  }
  gp_string_free(j1);
  gp_string_free(j2);
  gp_algebra_free(a);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"cross-path exactness: rank-computed partial codimension equals the character-side sum "
       "(n <= 4 all bracketings, n <= 5 left-normed)",
       crosspath_exactness},
      {"Z_2 group algebra sequence: c_n = 2^n, r_n = 2 exactly, l_n = n+1, tail estimates (2,2)",
       z2_sequence},
      {"exponential bound c_n <= d^(n+1) on every builtin, exact", exponential_bound},
      {"polynomial colength bound l_n <= d(n+1)^(k+sum d_i^2+sum d_i), exact", colength_bound},
      {"dimension vs phi-power bounds at m in {100,101} (256-bit logs, slack 2^-64)", dim_phi_bounds},
      {"push-down monotonicity Phi(rho) >= Phi(nu), exhaustive m <= 20 heights <= 5",
       push_monotonicity},
      {"multinomial vs phi-power bounds, all compositions m <= 40 into k <= 3 parts",
       stirling_bounds},
      {"scaled product inequality on the documented grid", scaled_product_grid},
      {"consecutive ratio bound for the zero-annihilator builtins at computed n >= 3", ratio_bound},
      {"multiplicity integrality and height admissibility on every builtin, n <= 4",
       representation_integrality},
      {"symmetric group identities: dimension sum and orthogonality, exact",
       combinatorics_identities},
      {"byte-identical verify JSON under a fixed seed", determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%2zu/%zu] %s  %s\n        %s\n", i + 1, criteria.size(), ok ? "PASS" : "FAIL",
                criteria[i].label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("RESULT: all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("RESULT: %d of %zu acceptance criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
