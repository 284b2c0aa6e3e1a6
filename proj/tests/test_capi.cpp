#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "narayana/narayana.h"

namespace {

// Wraps a char** result so every path frees it.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  nara_string_free(s);
  return out;
}

struct PolyHandle {
  nara_poly* p = nullptr;
  ~PolyHandle() { nara_poly_free(p); }
};

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::string(nara_version()) == "0.1.0");
  CHECK(nara_last_error() != nullptr);
}

TEST_CASE("family construction and queries") {
  PolyHandle a3;
  REQUIRE(nara_family("A", 3, 0, 0, nullptr, nullptr, &a3.p) == NARA_OK);
  CHECK(nara_poly_degree(a3.p) == 3);

  char* c = nullptr;
  REQUIRE(nara_poly_coeff(a3.p, 1, &c) == NARA_OK);
  CHECK(take(c) == "6");
  REQUIRE(nara_poly_coeff(a3.p, 9, &c) == NARA_OK);
  CHECK(take(c) == "0");

  char* s = nullptr;
  REQUIRE(nara_poly_to_string(a3.p, &s) == NARA_OK);
  CHECK(take(s) == "1 + 6*x + 6*x^2 + x^3");

  char* v = nullptr;
  REQUIRE(nara_poly_eval(a3.p, "1/2", &v) == NARA_OK);
  CHECK(take(v) == "45/8");  // 1 + 3 + 3/2 + 1/8

  PolyHandle f;
  REQUIRE(nara_family("F", 4, 0, 0, "1", "-19/10", &f.p) == NARA_OK);
  int rr = -1;
  REQUIRE(nara_is_real_rooted(f.p, &rr) == NARA_OK);
  CHECK(rr == 0);

  nara_poly* d = nullptr;
  CHECK(nara_family("F", 4, 0, 0, "x", nullptr, &d) == NARA_EINVAL);
  CHECK(d == nullptr);
}

TEST_CASE("coefficient lists round trip") {
  const char* coeffs[] = {"-1", "0", "1"};  // x^2 - 1
  PolyHandle p;
  REQUIRE(nara_poly_from_coeffs(coeffs, 3, &p.p) == NARA_OK);
  CHECK(nara_poly_degree(p.p) == 2);

  int roots = 0;
  REQUIRE(nara_count_real_roots(p.p, &roots) == NARA_OK);
  CHECK(roots == 2);
  int sc = 0;
  REQUIRE(nara_sign_changes(p.p, &sc) == NARA_OK);
  CHECK(sc == 1);

  const char* bad[] = {"1", "2/0"};
  nara_poly* q = nullptr;
  CHECK(nara_poly_from_coeffs(bad, 2, &q) != NARA_OK);
  CHECK(q == nullptr);
  CHECK(std::string(nara_last_error()).size() > 0);
}

TEST_CASE("ring operations") {
  const char* one_one[] = {"1", "1"};  // 1 + x
  const char* one_minus[] = {"-2", "1"};  // x - 2
  PolyHandle a, b, sum, prod, diff, der;
  REQUIRE(nara_poly_from_coeffs(one_one, 2, &a.p) == NARA_OK);
  REQUIRE(nara_poly_from_coeffs(one_minus, 2, &b.p) == NARA_OK);

  REQUIRE(nara_poly_add(a.p, b.p, &sum.p) == NARA_OK);
  char* s = nullptr;
  REQUIRE(nara_poly_to_string(sum.p, &s) == NARA_OK);
  CHECK(take(s) == "-1 + 2*x");

  REQUIRE(nara_poly_mul(a.p, b.p, &prod.p) == NARA_OK);
  REQUIRE(nara_poly_to_string(prod.p, &s) == NARA_OK);
  CHECK(take(s) == "-2 - x + x^2");

  REQUIRE(nara_poly_sub(a.p, a.p, &diff.p) == NARA_OK);
  CHECK(nara_poly_degree(diff.p) == -1);

  REQUIRE(nara_poly_derivative(prod.p, &der.p) == NARA_OK);
  REQUIRE(nara_poly_to_string(der.p, &s) == NARA_OK);
  CHECK(take(s) == "-1 + 2*x");
}

TEST_CASE("root isolation as json") {
  const char* coeffs[] = {"0", "-1", "0", "1"};  // x(x-1)(x+1)
  PolyHandle p;
  REQUIRE(nara_poly_from_coeffs(coeffs, 4, &p.p) == NARA_OK);
  char* js = nullptr;
  REQUIRE(nara_isolate_roots(p.p, &js) == NARA_OK);
  const auto arr = nlohmann::json::parse(take(js));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 3);
  for (const auto& e : arr) {
    CHECK((e["type"] == "point" || e["type"] == "interval"));
    CHECK(e["multiplicity"] == 1);
  }
}

TEST_CASE("interlacing across the boundary") {
  PolyHandle g, f;
  REQUIRE(nara_family("A", 4, 0, 0, nullptr, nullptr, &g.p) == NARA_OK);
  REQUIRE(nara_family("A", 5, 0, 0, nullptr, nullptr, &f.p) == NARA_OK);
  char* rel = nullptr;
  char* wit = nullptr;
  REQUIRE(nara_interlaces(g.p, f.p, &rel, &wit) == NARA_OK);
  CHECK(take(rel) == "StrictlyInterlaces");
  CHECK(take(wit).empty());

  // witness_out is optional
  REQUIRE(nara_interlaces(g.p, f.p, &rel, nullptr) == NARA_OK);
  CHECK(take(rel) == "StrictlyInterlaces");
}

TEST_CASE("log-concavity folds") {
  const char* coeffs[] = {"1", "1", "1"};
  PolyHandle p;
  REQUIRE(nara_poly_from_coeffs(coeffs, 3, &p.p) == NARA_OK);
  int max_ok = -2, ffold = -2, fidx = -2;
  REQUIRE(nara_log_concave_folds(p.p, 5, &max_ok, &ffold, &fidx) == NARA_OK);
  CHECK(max_ok == 1);
  CHECK(ffold == 2);
  CHECK(fidx == 1);

  PolyHandle a5;
  REQUIRE(nara_family("A", 5, 0, 0, nullptr, nullptr, &a5.p) == NARA_OK);
  REQUIRE(nara_log_concave_folds(a5.p, 3, &max_ok, &ffold, &fidx) == NARA_OK);
  CHECK(max_ok == 3);
  CHECK(ffold == -1);
  CHECK(fidx == -1);

  const char* neg[] = {"-1", "1"};
  PolyHandle q;
  REQUIRE(nara_poly_from_coeffs(neg, 2, &q.p) == NARA_OK);
  CHECK(nara_log_concave_folds(q.p, 2, &max_ok, &ffold, &fidx) == NARA_EDOMAIN);
}

TEST_CASE("recurrence checks") {
  int verified = 0;
  REQUIRE(nara_check_recurrence("f", 0, 5, &verified) == NARA_OK);
  CHECK(verified == 1);
  REQUIRE(nara_check_recurrence("overline", 3, 4, &verified) == NARA_OK);
  CHECK(verified == 1);
  REQUIRE(nara_check_recurrence("underline", 0, 2, &verified) == NARA_OK);
  CHECK(verified == 1);
  CHECK(nara_check_recurrence("sideways", 0, 2, &verified) == NARA_EINVAL);
  CHECK(nara_check_recurrence("f", 0, 1, &verified) == NARA_EDOMAIN);
}

TEST_CASE("whole commands through the boundary") {
  char* out = nullptr;
  int code = -1;
  REQUIRE(nara_run_command(
              R"({"command":"gen","family":"A","n":3,"format":"json"})", &out,
              &code) == NARA_OK);
  CHECK(code == 0);
  const auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["records"][0]["coefficients"].size() == 4);

  CHECK(nara_run_command("{not json", &out, &code) == NARA_EINVAL);
  CHECK(nara_run_command(R"({"command":"gen"})", &out, &code) == NARA_EINVAL);
}

TEST_CASE("status codes and argument guards") {
  nara_poly* p = nullptr;
  CHECK(nara_family("Z", 1, 0, 0, nullptr, nullptr, &p) == NARA_EINVAL);
  CHECK(p == nullptr);
  CHECK(std::string(nara_last_error()).find("unknown family") !=
        std::string::npos);

  CHECK(nara_family("D", 1, 0, 0, nullptr, nullptr, &p) == NARA_EDOMAIN);
  CHECK(nara_family(nullptr, 1, 0, 0, nullptr, nullptr, &p) == NARA_EINVAL);
  CHECK(nara_family("A", 1, 0, 0, nullptr, nullptr, nullptr) == NARA_EINVAL);
  CHECK(nara_poly_degree(nullptr) == -1);
  CHECK(nara_poly_coeff(nullptr, 0, nullptr) == NARA_EINVAL);

  int dummy = 0;
  CHECK(nara_is_real_rooted(nullptr, &dummy) == NARA_EINVAL);

  nara_poly_free(nullptr);       // must be safe
  nara_string_free(nullptr);     // must be safe
}
