#include <doctest.h>

#include <string>

#include "tqdh/commands.hpp"
#include "tqdh/errors.hpp"

using namespace tqdh;

namespace {

std::string path(const char* name) { return std::string(TQDH_PROBLEM_DIR) + "/" + name; }

std::string error_of(const std::string& text) {
  try {
    parse_problem_text(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

bool feeds_back(const ProblemSpec& spec, const Json& report) {
  CommandResult r = cmd_pbw_check(spec, report, false);
  return r.status == kOk && r.report.at("all_hold").get<bool>();
}

}  // namespace

TEST_CASE("bundled problems load") {
  ProblemSpec w = parse_problem_file(path("weyl2.json"));
  CHECK(w.n == 2);
  CHECK(w.group->size() == 1);
  CHECK(cmd_parameter_space(w, "direct").report.at("dimension") == 1);

  ProblemSpec s5 = parse_problem_file(path("s5_spin.json"));
  CHECK(s5.group->size() == 120);
  CHECK(s5.alpha.name() == "spin(5)");
  CHECK(s5.n == 5);

  ProblemSpec s3 = parse_problem_file(path("s3.json"));
  CHECK(s3.n == 3);  // taken from the permutation degree
}

TEST_CASE("invalid problems are rejected with a location") {
  std::string bad;
  try {
    parse_problem_file(path("bad_cocycle.json"));
  } catch (const ValidationError& e) {
    bad = e.what();
  }
  CHECK(bad.find("cocycle") == 0);
  CHECK(bad.find("triple") != std::string::npos);

  CHECK(error_of(R"({"group": "trivial", "n": 2, "q": "all:1", "action": {"type": "spin"}})").find("action") == 0);
  CHECK(error_of(R"({"group": {"type": "dihedral"}, "n": 2, "q": "all:1", "action": "natural-permutation"})")
            .find("group") == 0);
  CHECK(error_of(R"({"group": "trivial", "n": 2, "q": "all:2", "action": {"type": "matrices", "matrices": []}})")
            .find("q") == 0);
  CHECK(error_of(R"({"group": "trivial", "n": 2, "q": [["1", "x"], ["1", "1"]],
                     "action": {"type": "matrices", "matrices": []}})")
            .find("q") == 0);
  CHECK(error_of(R"({"group": {"type": "cyclic", "orders": [2]}, "n": 2, "q": "all:1",
                     "action": {"type": "matrices", "matrices": [[["0", "1"], ["-1", "-1"]]]}})")
            .find("action") == 0);
  CHECK(error_of(R"({"group": {"type": "symmetric", "degree": 3}, "n": 4, "q": "all:-1",
                     "action": "natural-permutation"})")
            .find("action") == 0);
  CHECK_THROWS(parse_problem_text("{ not json"));
  CHECK_THROWS_AS(parse_problem_file(path("missing.json")), ValidationError);
}

TEST_CASE("group and cocycle formats") {
  ProblemSpec t = parse_problem_text(R"({
    "n": 2, "q": "all:1",
    "group": {"type": "table", "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "generators": [1]},
    "action": {"type": "diagonal", "lambda": [["1*z3^1", "1*z3^2"]]},
    "cocycle": {"type": "table", "values": [["1", "1", "1"], ["1", "1", "1"], ["1", "1", "1"]]}})");
  CHECK(t.group->size() == 3);
  CHECK(t.action.is_diagonal());

  ProblemSpec b = parse_problem_file(path("klein2_twisted.json"));
  int e1 = b.group->find("(1,0)"), e2 = b.group->find("(0,1)");
  CHECK(b.alpha(e2, e1) == Cyclotomic(-1));
  CHECK(b.alpha(e1, e2) == Cyclotomic(1));
}

TEST_CASE("kappa serialization") {
  ProblemSpec s3 = parse_problem_file(path("s3.json"));
  auto basis = solve_parameter_space(s3.data());
  for (const auto& k : basis) {
    Json j = kappa_to_json(k, *s3.group);
    CHECK(kappa_from_json(j, s3).coordinates() == k.coordinates());
  }
  // a record for (j, i) is read through kappa(v_j, v_i) = -q_ji kappa(v_i, v_j)
  Json rev = Json::parse(R"js([{"i": 2, "j": 1, "coefficients": {"()": "3"}}])js");
  Json fwd = Json::parse(R"js([{"i": 1, "j": 2, "coefficients": {"()": "3"}}])js");
  KappaMap a = kappa_from_json(rev, s3), b = kappa_from_json(fwd, s3);
  CHECK(a.coordinates() == b.coordinates());
  CHECK_THROWS_AS(kappa_from_json(Json::parse(R"([{"i": 1, "j": 1, "coefficients": {}}])"), s3), ValidationError);
  CHECK_THROWS_AS(kappa_from_json(Json::parse(R"js([{"i": 1, "j": 2, "coefficients": {"(1 5)": "1"}}])js"), s3),
                  ValidationError);
}

TEST_CASE("reports are deterministic") {
  ProblemSpec s4 = parse_problem_file(path("s4_spin.json"));
  CHECK(cmd_parameter_space(s4, "both").report.dump() == cmd_parameter_space(s4, "both").report.dump());
  CHECK(cmd_constant_cocycles(s4).report.dump() == cmd_constant_cocycles(s4).report.dump());
  CHECK(cmd_classify_symmetric(4, true).report.dump() == cmd_classify_symmetric(4, true).report.dump());
  CHECK(cmd_alpha_table_symmetric(4).report.dump() == cmd_alpha_table_symmetric(4).report.dump());
}

TEST_CASE("emitted kappa maps pass the checker") {
  for (const char* name : {"weyl3.json", "z2_negation.json", "klein2_twisted.json", "klein3_twisted.json", "s3.json",
                           "s4_spin.json", "s5_untwisted.json", "z3_generic_q.json"}) {
    ProblemSpec spec = parse_problem_file(path(name));
    for (const char* m : {"direct", "cohomology", "both"}) {
      CommandResult r = cmd_parameter_space(spec, m);
      CHECK(r.status == kOk);
      CHECK_MESSAGE(feeds_back(spec, r.report), name);
    }
    if (spec.action.is_diagonal()) {
      CommandResult d = cmd_classify_diagonal(spec);
      CHECK_MESSAGE(d.status == kOk, name);
      CHECK(feeds_back(spec, d.report));
    }
  }
  ProblemSpec s5 = parse_problem_file(path("s5_spin.json"));
  CommandResult c = cmd_classify_symmetric(5, true);
  CHECK(c.status == kOk);
  CHECK(c.report.at("dimension") == 2);
  CHECK(c.report.at("spans_reference") == true);
  CHECK(feeds_back(s5, c.report));
}

TEST_CASE("command reports") {
  ProblemSpec s3 = parse_problem_file(path("s3.json"));
  Json ext = cmd_check_extension(s3).report;
  CHECK(ext.at("symmetric") == true);

  Json cover = cmd_verify_cover(4, 500, 1).report;
  CHECK(cover.at("passed") == true);

  Json at = cmd_alpha_table_symmetric(3).report;
  CHECK(at.at("elements").size() == 6);
  CHECK(at.at("elements")[0] == Json::parse("[1, 2, 3]"));
  CHECK(at.at("values")[0][0] == "1");

  CHECK_THROWS_AS(cmd_parameter_space(s3, "guess"), ValidationError);
  CHECK_THROWS_AS(cmd_classify_diagonal(s3), ValidationError);

  // a map off the parameter space is reported, not rejected
  Json off = Json::parse(R"js([{"i": 1, "j": 2, "coefficients": {"(1 2)": "1"}}])js");
  CommandResult r = cmd_pbw_check(s3, off, true);
  CHECK(r.status == kOk);
  CHECK(r.report.at("all_hold") == false);
  CHECK(r.report.at("oracles_agree") == true);
  CHECK_FALSE(r.report.at("results")[0].at("violations").empty());
}
