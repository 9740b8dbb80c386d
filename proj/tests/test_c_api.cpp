#include <doctest.h>

#include <cstring>
#include <string>

#include "tqdh.h"

namespace {

std::string problem(const char* name) { return std::string(TQDH_PROBLEM_DIR) + "/" + name; }

struct Report {
  char* text = nullptr;
  ~Report() { tqdh_string_free(text); }
  bool has(const char* needle) const { return text && std::strstr(text, needle) != nullptr; }
};

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(tqdh_version()).size() > 0);
  tqdh_problem* p = nullptr;
  CHECK(tqdh_problem_load_file(problem("missing.json").c_str(), &p) == TQDH_IO);
  CHECK(p == nullptr);
  CHECK(std::string(tqdh_last_error()).find("missing.json") != std::string::npos);
  CHECK(tqdh_problem_load_file(nullptr, &p) == TQDH_USAGE);
  tqdh_problem_free(nullptr);
  tqdh_string_free(nullptr);
}

TEST_CASE("loading problems") {
  tqdh_problem* p = nullptr;
  CHECK(tqdh_problem_load_file(problem("bad_cocycle.json").c_str(), &p) == TQDH_VALIDATION);
  CHECK(std::string(tqdh_last_error()).find("cocycle") == 0);
  CHECK(tqdh_problem_load_string("{ nope", &p) == TQDH_VALIDATION);
  CHECK(p == nullptr);

  REQUIRE(tqdh_problem_load_string(R"({"n": 2, "group": "trivial", "q": "all:1",
                                       "action": {"type": "matrices", "matrices": []}})",
                                   &p) == TQDH_OK);
  Report r;
  CHECK(tqdh_parameter_space(p, "direct", &r.text) == TQDH_OK);
  CHECK(r.has("\"dimension\": 1"));
  Report bad;
  CHECK(tqdh_parameter_space(p, "guess", &bad.text) == TQDH_USAGE);
  CHECK(bad.text == nullptr);
  tqdh_problem_free(p);
}

TEST_CASE("commands through the C interface") {
  tqdh_problem* p = nullptr;
  REQUIRE(tqdh_problem_load_file(problem("klein3_twisted.json").c_str(), &p) == TQDH_OK);
  Report ext, both, cc, diag, at;
  CHECK(tqdh_check_extension(p, &ext.text) == TQDH_OK);
  CHECK(ext.has("\"exterior\": true"));
  CHECK(tqdh_parameter_space(p, "both", &both.text) == TQDH_OK);
  CHECK(both.has("\"spans_equal\": true"));
  CHECK(tqdh_constant_cocycles(p, &cc.text) == TQDH_OK);
  CHECK(tqdh_classify_diagonal(p, &diag.text) == TQDH_OK);
  CHECK(tqdh_alpha_table(p, &at.text) == TQDH_OK);
  CHECK(at.has("\"cocycle_identity\": true"));

  Report check;
  CHECK(tqdh_pbw_check(p, both.text, 1, &check.text) == TQDH_OK);
  CHECK(check.has("\"all_hold\": true"));
  CHECK(check.has("\"oracles_agree\": true"));
  Report junk;
  CHECK(tqdh_pbw_check(p, "[1, 2]", 0, &junk.text) == TQDH_VALIDATION);
  CHECK(tqdh_pbw_check(p, nullptr, 0, &junk.text) == TQDH_USAGE);
  tqdh_problem_free(p);

  Report sym, cover;
  CHECK(tqdh_classify_symmetric(4, 1, &sym.text) == TQDH_OK);
  CHECK(sym.has("\"dimension\": 3"));
  CHECK(tqdh_verify_cover(4, 50, 2, &cover.text) == TQDH_OK);
  CHECK(cover.has("\"passed\": true"));
  Report small;
  CHECK(tqdh_verify_cover(2, 50, 2, &small.text) == TQDH_VALIDATION);
  CHECK(tqdh_classify_diagonal(nullptr, &small.text) == TQDH_USAGE);
}
