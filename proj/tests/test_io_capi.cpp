#include <doctest.h>

#include <string>

#include <json.hpp>

#include "algebra_io.hpp"
#include "errors.hpp"

extern "C" {
#include "gradedpi.h"
}

using namespace gpi;

TEST_SUITE_BEGIN("io");

TEST_CASE("export-import round trip is the identity") {
  for (const auto& [name, desc] : builtin_catalog()) {
    auto A = builtin(name);
    std::string text = export_algebra(A);
    auto B = parse_algebra_text(text);
    CHECK(B.dim() == A.dim());
    CHECK(B.table().labels() == A.table().labels());
    CHECK(B.basis_names() == A.basis_names());
    for (unsigned i = 0; i < A.dim(); ++i) {
      CHECK(B.grade(i) == A.grade(i));
      for (unsigned j = 0; j < A.dim(); ++j) {
        CHECK(B.product_row(i, j) == A.product_row(i, j));
      }
    }
    CHECK(export_algebra(B) == text);  // byte-identical re-export
  }
}

TEST_CASE("exact rationals survive the round trip") {
  auto A = parse_algebra_text(
      "labels: e\n"
      "table: e\n"
      "basis: b1@e b2@e\n"
      "prod: b1*b1 = 1/3 b2\n"
      "prod: b2*b1 = -2/7 b1 + 5 b2\n");
  CHECK(A.sc(0, 0, 1) == Rational(1, 3));
  CHECK(A.sc(1, 0, 0) == Rational(-2, 7));
  std::string text = export_algebra(A);
  CHECK(text.find("1/3 b2") != std::string::npos);
  CHECK(text.find("-2/7 b1") != std::string::npos);
  auto B = parse_algebra_text(text);
  CHECK(B.sc(0, 0, 1) == Rational(1, 3));
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_algebra_text("labels: e\ntable: e\nbasis: b@e\nprod: b*b = q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("unknown basis name 'q'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_text("table: e\n"), ParseError);                      // table before labels
  CHECK_THROWS_AS(parse_algebra_text("labels: e\ntable: e\n"), ParseError);           // missing basis
  CHECK_THROWS_AS(parse_algebra_text("labels: e\ntable: e e\nbasis: b@e\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text("labels: e\ntable: e\nbasis: b@e\nprod: b*b = 1/0 b\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_algebra_text("labels: e\ntable: e\nbasis: b@e\nprod: b*b = b\nprod: b*b = 0\n"),
      ParseError);  // duplicate product
}

TEST_CASE("grading violations are validation errors naming the triple") {
  try {
    parse_algebra_text(
        "labels: 0 1\n"
        "table: 0 1 / 1 0\n"
        "basis: e@0 g@1\n"
        "prod: g*g = g\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("g*g -> g") != std::string::npos);
  }
}

TEST_CASE("comments, blank lines, unspecified products") {
  auto A = parse_algebra_text(
      "# a comment\n"
      "name: with comments\n"
      "\n"
      "labels: e\n"
      "table: e  # trailing comment\n"
      "basis: b@e\n");
  CHECK(A.dim() == 1);
  CHECK(is_zero_vec(A.product_row(0, 0)));
  CHECK(A.name() == "with comments");
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("capi");

namespace {

struct Handle {
  gp_algebra* a = nullptr;
  ~Handle() { gp_algebra_free(a); }
};

struct Str {
  char* s = nullptr;
  ~Str() { gp_string_free(s); }
};

}  // namespace

TEST_CASE("handles, status codes and error messages") {
  Handle h;
  CHECK(gp_algebra_builtin("group_algebra:Z_2", &h.a) == GP_OK);
  CHECK(gp_algebra_dim(h.a) == 2);
  CHECK(gp_algebra_support_size(h.a) == 2);

  Handle bad;
  CHECK(gp_algebra_builtin("nope", &bad.a) == GP_ERR_UNKNOWN_BUILTIN);
  CHECK(std::string(gp_last_error()).find("nope") != std::string::npos);

  Handle f;
  CHECK(gp_algebra_from_file("/definitely/not/here.alg", &f.a) == GP_ERR_IO);

  Handle t;
  CHECK(gp_algebra_from_text("labels: e\n", &t.a) == GP_ERR_PARSE);
  Handle v;
  CHECK(gp_algebra_from_text("labels: 0 1\ntable: 0 1 / 1 0\nbasis: e@0 g@1\nprod: g*g = g\n",
                             &v.a) == GP_ERR_VALIDATION);
}

TEST_CASE("export through the C surface round-trips") {
  Handle h;
  REQUIRE(gp_algebra_builtin("M2_Z2", &h.a) == GP_OK);
  Str text;
  REQUIRE(gp_algebra_export_text(h.a, &text.s) == GP_OK);
  Handle back;
  REQUIRE(gp_algebra_from_text(text.s, &back.a) == GP_OK);
  Str text2;
  REQUIRE(gp_algebra_export_text(back.a, &text2.s) == GP_OK);
  CHECK(std::string(text.s) == std::string(text2.s));
}

TEST_CASE("codim report through the C surface") {
  Handle h;
  REQUIRE(gp_algebra_builtin("group_algebra:Z_2", &h.a) == GP_OK);
  gp_config cfg;
  gp_config_defaults(&cfg);
  cfg.n_max = 3;
  Str out;
  REQUIRE(gp_codim_json(h.a, &cfg, &out.s) == GP_OK);
  std::string json(out.s);
  CHECK(json.find("\"c_gr\": \"8\"") != std::string::npos);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("verify JSON is byte-identical across runs with a fixed seed") {
  Handle h;
  REQUIRE(gp_algebra_builtin("group_algebra:Z_2", &h.a) == GP_OK);
  gp_config cfg;
  gp_config_defaults(&cfg);
  cfg.n_max = 2;
  cfg.seed = 20240101;
  Str a, b;
  int hf1 = -1, tr1 = -1, hf2 = -1, tr2 = -1;
  REQUIRE(gp_verify_json(h.a, &cfg, &a.s, &hf1, &tr1) == GP_OK);
  Handle h2;
  REQUIRE(gp_algebra_builtin("group_algebra:Z_2", &h2.a) == GP_OK);
  REQUIRE(gp_verify_json(h2.a, &cfg, &b.s, &hf2, &tr2) == GP_OK);
  CHECK(std::string(a.s) == std::string(b.s));
  CHECK(hf1 == 0);
  CHECK(hf1 == hf2);
}

TEST_CASE("report JSON includes the applicability block and echoes the seed") {
  Handle h;
  REQUIRE(gp_algebra_builtin("direct_sum_Z2", &h.a) == GP_OK);
  gp_config cfg;
  gp_config_defaults(&cfg);
  cfg.n_max = 2;
  cfg.seed = 7;
  Str out;
  REQUIRE(gp_report_json(h.a, &cfg, &out.s) == GP_OK);
  std::string json(out.s);
  CHECK(json.find("\"existence_by_simple\": false") != std::string::npos);
  CHECK(json.find("\"seed\": \"7\"") != std::string::npos);
  CHECK(json.find("no existence guarantee") != std::string::npos);
}

TEST_CASE("builtin catalog string") {
  Str out;
  REQUIRE(gp_builtin_catalog(&out.s) == GP_OK);
  std::string s(out.s);
  CHECK(s.find("M2_Z2") != std::string::npos);
  CHECK(s.find("group_algebra:Z_2") != std::string::npos);
}

TEST_CASE("report JSON schema is stable across all builtins") {
  gp_config cfg;
  gp_config_defaults(&cfg);
  cfg.n_max = 2;
  Str catalog;
  REQUIRE(gp_builtin_catalog(&catalog.s) == GP_OK);
  std::string names(catalog.s);
  size_t pos = 0;
  while (pos < names.size()) {
    size_t colon = names.find(':', pos);
    size_t eol = names.find('\n', pos);
    if (eol == std::string::npos) break;
    // the group_algebra names themselves contain a colon; split on ": "
    size_t sep = names.find(": ", pos);
    REQUIRE(sep != std::string::npos);
    (void)colon;
    std::string name = names.substr(pos, sep - pos);
    pos = eol + 1;

    Handle h;
    REQUIRE(gp_algebra_builtin(name.c_str(), &h.a) == GP_OK);
    Str out;
    REQUIRE(gp_report_json(h.a, &cfg, &out.s) == GP_OK);
    auto j = nlohmann::json::parse(out.s);
    CHECK(j["schema"] == 1);
    for (const char* key : {"algebra", "config", "rows", "checks", "applicability", "truncated"}) {
      CHECK(j.contains(key));
    }
    for (const auto& row : j["rows"]) {
      for (const char* key : {"n", "c_gr", "l_gr", "l_bound", "root", "root_exact", "dvs"}) {
        CHECK(row.contains(key));
      }
      CHECK(row["c_gr"].is_string());  // exact integers travel as strings
    }
    const auto& ap = j["applicability"];
    for (const char* key :
         {"table_kind", "graded_simple", "simple", "existence_by_graded_simple_commutative",
          "existence_by_simple", "seed", "summary"}) {
      CHECK(ap.contains(key));
    }
  }
}

TEST_SUITE_END();
