#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqdh/cocycle.hpp"
#include "tqdh/kappa.hpp"
#include "tqdh/koszul.hpp"
#include "tqdh/quantum_algebra.hpp"

namespace tqdh {

using Json = nlohmann::ordered_json;

/// A validated quadruple (G, V, q, alpha) loaded from a problem file.
struct ProblemSpec {
  std::string name;
  int n = 0;
  GroupPtr group;
  QMatrix q;
  GroupAction action;
  Cocycle alpha;
  [[nodiscard]] PbwData data() const { return PbwData{action, q, alpha}; }
};

/// Throws ValidationError with a location prefix such as "cocycle: ...".
ProblemSpec parse_problem(const Json& doc, const std::string& fallback_name = "problem");
ProblemSpec parse_problem_text(const std::string& text, const std::string& fallback_name = "problem");
ProblemSpec parse_problem_file(const std::string& path);

Cyclotomic parse_scalar_json(const Json& v, const std::string& where);

/// kappa as records {i, j, coefficients: {label: scalar}}, 1-based, i < j.
Json kappa_to_json(const KappaMap& kappa, const FiniteGroup& group);
KappaMap kappa_from_json(const Json& records, const ProblemSpec& spec);
/// Accepts a record list, {"kappa": records} or {"basis": [records, ...]}.
std::vector<KappaMap> kappas_from_document(const Json& doc, const ProblemSpec& spec);

Json tga_to_json(const TgaElement& x, const FiniteGroup& group);
/// Constant 2-cochain as terms {g, r, s, value}.
Json cochain_to_json(const CochainVector& x, const FiniteGroup& group);

}  // namespace tqdh
