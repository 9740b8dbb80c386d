#include "tqdh.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "tqdh/commands.hpp"
#include "tqdh/errors.hpp"

struct tqdh_problem {
  tqdh::ProblemSpec spec;
};

namespace {

thread_local std::string g_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
tqdh_status guarded(F&& f) {
  g_error.clear();
  try {
    return f();
  } catch (const tqdh::ValidationError& e) {
    g_error = e.what();
    return TQDH_VALIDATION;
  } catch (const tqdh::DivisionByZeroError& e) {
    g_error = e.what();
    return TQDH_VALIDATION;
  } catch (const tqdh::MismatchError& e) {
    g_error = e.what();
    return TQDH_MISMATCH;
  } catch (const tqdh::Json::exception& e) {
    g_error = std::string("json: ") + e.what();
    return TQDH_VALIDATION;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return TQDH_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return TQDH_INTERNAL;
  }
}

tqdh_status emit(const tqdh::CommandResult& r, char** report) {
  *report = dup(r.report.dump(2));
  if (!*report) {
    g_error = "out of memory";
    return TQDH_INTERNAL;
  }
  if (r.status == tqdh::kMismatch) g_error = "oracle mismatch; see report";
  return static_cast<tqdh_status>(r.status);
}

bool bad_args(const void* a, char** report) {
  if (report) *report = nullptr;
  if (!a || !report) {
    g_error = "null argument";
    return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* tqdh_version(void) { return "1.0.0"; }

const char* tqdh_last_error(void) { return g_error.c_str(); }

void tqdh_string_free(char* s) { std::free(s); }

tqdh_status tqdh_problem_load_file(const char* path, tqdh_problem** out) {
  if (!path || !out) {
    g_error = "null argument";
    return TQDH_USAGE;
  }
  *out = nullptr;
  {
    std::ifstream probe(path);
    if (!probe) {
      g_error = std::string("cannot open ") + path;
      return TQDH_IO;
    }
  }
  return guarded([&] {
    *out = new tqdh_problem{tqdh::parse_problem_file(path)};
    return TQDH_OK;
  });
}

tqdh_status tqdh_problem_load_string(const char* json, tqdh_problem** out) {
  if (!json || !out) {
    g_error = "null argument";
    return TQDH_USAGE;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new tqdh_problem{tqdh::parse_problem_text(json)};
    return TQDH_OK;
  });
}

void tqdh_problem_free(tqdh_problem* p) { delete p; }

tqdh_status tqdh_check_extension(const tqdh_problem* p, char** report) {
  if (bad_args(p, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_check_extension(p->spec), report); });
}

tqdh_status tqdh_pbw_check(const tqdh_problem* p, const char* kappa_json, int ambiguities, char** report) {
  if (bad_args(p, report) || bad_args(kappa_json, report)) return TQDH_USAGE;
  return guarded([&] {
    return emit(tqdh::cmd_pbw_check(p->spec, tqdh::Json::parse(kappa_json), ambiguities != 0), report);
  });
}

tqdh_status tqdh_parameter_space(const tqdh_problem* p, const char* method, char** report) {
  if (bad_args(p, report)) return TQDH_USAGE;
  std::string m = method ? method : "direct";
  if (m != "direct" && m != "cohomology" && m != "both") {
    g_error = "unknown method \"" + m + "\"";
    return TQDH_USAGE;
  }
  return guarded([&] { return emit(tqdh::cmd_parameter_space(p->spec, m), report); });
}

tqdh_status tqdh_constant_cocycles(const tqdh_problem* p, char** report) {
  if (bad_args(p, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_constant_cocycles(p->spec), report); });
}

tqdh_status tqdh_classify_diagonal(const tqdh_problem* p, char** report) {
  if (bad_args(p, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_classify_diagonal(p->spec), report); });
}

tqdh_status tqdh_alpha_table(const tqdh_problem* p, char** report) {
  if (bad_args(p, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_alpha_table(p->spec), report); });
}

tqdh_status tqdh_alpha_table_symmetric(int n, char** report) {
  if (bad_args(report, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_alpha_table_symmetric(n), report); });
}

tqdh_status tqdh_classify_symmetric(int n, int twisted, char** report) {
  if (bad_args(report, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_classify_symmetric(n, twisted != 0), report); });
}

tqdh_status tqdh_verify_cover(int n, long samples, uint64_t seed, char** report) {
  if (bad_args(report, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_verify_cover(n, samples, seed), report); });
}

tqdh_status tqdh_selftest(long samples, uint64_t seed, char** report) {
  if (bad_args(report, report)) return TQDH_USAGE;
  return guarded([&] { return emit(tqdh::cmd_selftest(samples, seed), report); });
}

}  // extern "C"
