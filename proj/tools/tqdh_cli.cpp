#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tqdh.h"

namespace {

long samples_from_env() {
  const char* s = std::getenv("TQDH_SAMPLES");
  if (!s || !*s) return 500;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v <= 0) {
    std::fprintf(stderr, "warning: ignoring TQDH_SAMPLES=%s\n", s);
    return 500;
  }
  return v;
}

int finish(tqdh_status st, char* report) {
  if (report) {
    std::fputs(report, stdout);
    std::fputc('\n', stdout);
    tqdh_string_free(report);
  }
  if (st != TQDH_OK) std::fprintf(stderr, "error: %s\n", tqdh_last_error());
  return static_cast<int>(st);
}

// Loads the problem and runs f on it; the handle is released before returning.
template <class F>
int with_problem(const std::string& path, F&& f) {
  tqdh_problem* p = nullptr;
  tqdh_status st = tqdh_problem_load_file(path.c_str(), &p);
  if (st != TQDH_OK) {
    std::fprintf(stderr, "error: %s\n", tqdh_last_error());
    return static_cast<int>(st);
  }
  char* report = nullptr;
  st = f(p, &report);
  tqdh_problem_free(p);
  return finish(st, report);
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for twisted quantum Drinfeld Hecke algebras"};
  app.set_version_flag("--version", std::string(tqdh_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized verification")->capture_default_str();

  std::string problem, kappa_path, method = "direct", alpha_arg;
  bool ambiguities = false, twisted = false;
  int n = 0;

  auto* ext = app.add_subcommand("check-extension", "does the action extend to S_q(V) and the q-exterior algebra");
  ext->add_option("problem", problem, "problem file")->required();

  auto* pbw = app.add_subcommand("pbw-check", "test kappa maps against the PBW conditions");
  pbw->add_option("problem", problem, "problem file")->required();
  pbw->add_option("--kappa", kappa_path, "kappa file")->required();
  pbw->add_flag("--ambiguities", ambiguities, "also resolve overlap ambiguities by rewriting");

  auto* ps = app.add_subcommand("parameter-space", "basis of all kappa maps giving a PBW deformation");
  ps->add_option("problem", problem, "problem file")->required();
  ps->add_option("--method", method, "direct, cohomology or both")
      ->check(CLI::IsMember({"direct", "cohomology", "both"}))
      ->capture_default_str();

  auto* cc = app.add_subcommand("constant-cocycles", "constant Hochschild 2-cocycles per group element");
  cc->add_option("problem", problem, "problem file")->required();

  auto* cd = app.add_subcommand("classify-diagonal", "closed-form classification for diagonal actions");
  cd->add_option("problem", problem, "problem file")->required();

  auto* cs = app.add_subcommand("classify-symmetric", "natural representation of S_n");
  cs->add_option("--n", n, "degree")->required()->check(CLI::Range(2, 7));
  cs->add_flag("--twisted", twisted, "use the spin-cover cocycle");

  auto* at = app.add_subcommand("alpha-table", "cocycle table; an integer n selects spin(n) on S_n");
  at->add_option("target", alpha_arg, "n or problem file")->required();

  auto* vc = app.add_subcommand("verify-cover", "check the Clifford model of the Schur cover");
  vc->add_option("--n", n, "degree")->required()->check(CLI::Range(2, 9));

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : TQDH_USAGE;
  }

  const long samples = samples_from_env();

  if (*ext) return with_problem(problem, [](tqdh_problem* p, char** r) { return tqdh_check_extension(p, r); });
  if (*pbw) {
    std::ifstream in(kappa_path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open %s\n", kappa_path.c_str());
      return TQDH_IO;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return with_problem(problem, [&](tqdh_problem* p, char** r) {
      return tqdh_pbw_check(p, text.c_str(), ambiguities ? 1 : 0, r);
    });
  }
  if (*ps)
    return with_problem(problem, [&](tqdh_problem* p, char** r) { return tqdh_parameter_space(p, method.c_str(), r); });
  if (*cc) return with_problem(problem, [](tqdh_problem* p, char** r) { return tqdh_constant_cocycles(p, r); });
  if (*cd) return with_problem(problem, [](tqdh_problem* p, char** r) { return tqdh_classify_diagonal(p, r); });

  char* report = nullptr;
  tqdh_status status = TQDH_USAGE;
  if (*cs) {
    status = tqdh_classify_symmetric(n, twisted ? 1 : 0, &report);
  } else if (*at) {
    if (!all_digits(alpha_arg))
      return with_problem(alpha_arg, [](tqdh_problem* p, char** r) { return tqdh_alpha_table(p, r); });
    status = tqdh_alpha_table_symmetric(std::atoi(alpha_arg.c_str()), &report);
  } else if (*vc) {
    status = tqdh_verify_cover(n, samples, seed, &report);
  } else if (*st) {
    status = tqdh_selftest(samples, seed, &report);
  }
  if (report || status != TQDH_USAGE) return finish(status, report);
  return TQDH_USAGE;
}
