#include "tqdh/problem.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tqdh/errors.hpp"
#include "tqdh/spin_cover.hpp"

namespace tqdh {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ValidationError(where + ": " + what); }

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

int require_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

// "(1 2)(3 4 5)" or "(1,2)"; 1-based points.
Permutation parse_cycles(const std::string& text, int degree, const std::string& where) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(where, "bad cycle notation \"" + text + "\"");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail(where, "bad cycle notation \"" + text + "\"");
      int pt = std::stoi(text.substr(start, pos - start)) - 1;
      if (pt < 0 || pt >= degree || used[pt]) fail(where, "bad point in \"" + text + "\"");
      used[pt] = true;
      cyc.push_back(pt);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip();
  }
  return p;
}

Permutation parse_permutation(const Json& v, int degree, const std::string& where) {
  if (v.is_string()) return parse_cycles(v.get<std::string>(), degree, where);
  if (!v.is_array() || static_cast<int>(v.size()) != degree) fail(where, "expected an image array of length " + std::to_string(degree));
  Permutation p;
  for (const auto& x : v) p.push_back(require_int(x, where) - 1);
  return p;
}

struct GroupParse {
  GroupPtr group;
  std::vector<int> listed;  // generator list of the file, as element indices
};

GroupParse parse_group(const Json& g) {
  const std::string where = "group";
  std::string type = g.is_string() ? g.get<std::string>() : require(g, "type", where).get<std::string>();
  GroupParse out;
  if (type == "trivial") {
    out.group = FiniteGroup::from_table({{0}});
  } else if (type == "cyclic") {
    std::vector<int> orders;
    for (const auto& o : require(g, "orders", where)) orders.push_back(require_int(o, where + ".orders"));
    if (orders.empty()) fail(where, "orders must be non-empty");
    out.group = FiniteGroup::cyclic_product(orders);
    out.listed = out.group->generators();
  } else if (type == "symmetric") {
    int d = require_int(require(g, "degree", where), where + ".degree");
    if (d < 1) fail(where, "degree must be positive");
    out.group = FiniteGroup::symmetric(d);
    out.listed = out.group->generators();
  } else if (type == "permutations") {
    int d = require_int(require(g, "degree", where), where + ".degree");
    std::vector<Permutation> gens;
    std::size_t k = 0;
    for (const auto& x : require(g, "generators", where))
      gens.push_back(parse_permutation(x, d, where + ".generators[" + std::to_string(k++) + "]"));
    out.group = FiniteGroup::from_permutations(d, gens);
    for (const auto& p : gens) out.listed.push_back(out.group->find_permutation(p));
  } else if (type == "table") {
    std::vector<std::vector<int>> table;
    for (const auto& row : require(g, "table", where)) {
      std::vector<int> r;
      for (const auto& x : row) r.push_back(require_int(x, where + ".table"));
      table.push_back(std::move(r));
    }
    std::vector<int> gens;
    if (g.contains("generators"))
      for (const auto& x : g.at("generators")) gens.push_back(require_int(x, where + ".generators"));
    out.group = FiniteGroup::from_table(table, gens);
    out.listed = out.group->generators();
  } else {
    fail(where, "unknown group type \"" + type + "\"");
  }
  return out;
}

QMatrix parse_q(const Json& v, int n) {
  const std::string where = "q";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.rfind("all:", 0) != 0) fail(where, "expected \"all:<scalar>\" or a table");
    Cyclotomic c = Cyclotomic::parse(s.substr(4));
    if (!(c * c).is_one()) fail(where, "a constant q-matrix needs q_ij = 1 or -1");
    return QMatrix::constant(n, c);
  }
  if (!v.is_array() || static_cast<int>(v.size()) != n) fail(where, "expected an n x n table");
  std::vector<Cyclotomic> t;
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != n) fail(where, "expected an n x n table");
    for (int j = 0; j < n; ++j)
      t.push_back(parse_scalar_json(v[i][j], where + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
  }
  try {
    return QMatrix(n, std::move(t));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

std::vector<std::vector<Cyclotomic>> parse_matrix(const Json& m, int n, const std::string& where) {
  if (!m.is_array() || static_cast<int>(m.size()) != n) fail(where, "expected an n x n matrix");
  std::vector<std::vector<Cyclotomic>> out(n);
  for (int i = 0; i < n; ++i) {
    if (!m[i].is_array() || static_cast<int>(m[i].size()) != n) fail(where, "expected an n x n matrix");
    for (int k = 0; k < n; ++k) out[i].push_back(parse_scalar_json(m[i][k], where));
  }
  return out;
}

GroupAction parse_action(const Json& v, const GroupParse& gp, int n) {
  const std::string where = "action";
  const FiniteGroup& grp = *gp.group;
  std::string type = v.is_string() ? v.get<std::string>() : require(v, "type", where).get<std::string>();
  if (type == "natural-permutation") {
    if (grp.kind() != FiniteGroup::Kind::Permutation) fail(where, "natural-permutation needs a permutation group");
    if (grp.degree() != n) fail(where, "n must equal the permutation degree");
    return GroupAction::natural_permutation(gp.group);
  }
  // per listed generator matrices, realigned to the group's own generator list
  std::vector<std::vector<std::vector<Cyclotomic>>> listed_mats;
  if (type == "diagonal") {
    const Json& lam = require(v, "lambda", where);
    if (!lam.is_array() || lam.size() != gp.listed.size())
      fail(where, "expected one lambda row per generator (" + std::to_string(gp.listed.size()) + ")");
    for (std::size_t s = 0; s < lam.size(); ++s) {
      if (!lam[s].is_array() || static_cast<int>(lam[s].size()) != n) fail(where, "lambda row has the wrong length");
      std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n));
      for (int i = 0; i < n; ++i) m[i][i] = parse_scalar_json(lam[s][i], where + ".lambda");
      listed_mats.push_back(std::move(m));
    }
  } else if (type == "matrices") {
    const Json& mats = require(v, "matrices", where);
    if (!mats.is_array() || mats.size() != gp.listed.size())
      fail(where, "expected one matrix per generator (" + std::to_string(gp.listed.size()) + ")");
    for (std::size_t s = 0; s < mats.size(); ++s)
      listed_mats.push_back(parse_matrix(mats[s], n, where + ".matrices[" + std::to_string(s) + "]"));
  } else {
    fail(where, "unknown action type \"" + type + "\"");
  }
  std::vector<std::vector<std::vector<Cyclotomic>>> aligned;
  for (int gen : grp.generators()) {
    auto it = std::find(gp.listed.begin(), gp.listed.end(), gen);
    aligned.push_back(listed_mats[static_cast<std::size_t>(it - gp.listed.begin())]);
  }
  GroupAction act;
  try {
    act = GroupAction::from_generators(gp.group, n, aligned);
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  for (std::size_t s = 0; s < gp.listed.size(); ++s)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!(act.entry(gp.listed[s], i, k) == listed_mats[s][i][k]))
          fail(where, "matrix for generator " + std::to_string(s + 1) + " is inconsistent with the group law");
  return act;
}

Cocycle parse_cocycle(const Json& v, const GroupPtr& group) {
  const std::string where = "cocycle";
  const FiniteGroup& grp = *group;
  Cocycle alpha;
  std::string type = v.is_string() ? v.get<std::string>() : require(v, "type", where).get<std::string>();
  if (type == "trivial") {
    alpha = Cocycle::trivial(group);
  } else if (type.rfind("spin(", 0) == 0 && type.back() == ')') {
    int m = std::stoi(type.substr(5, type.size() - 6));
    long order = 1;
    for (int i = 2; i <= m; ++i) order *= i;
    if (grp.kind() != FiniteGroup::Kind::Permutation || grp.degree() != m || grp.size() != order)
      fail(where, type + " needs the group to be the full symmetric group S_" + std::to_string(m));
    alpha = spin_cocycle(group);
  } else if (type == "bicharacter") {
    if (grp.kind() != FiniteGroup::Kind::CyclicProduct) fail(where, "bicharacter needs a cyclic product group");
    std::vector<std::vector<int>> e;
    for (const auto& row : require(v, "exponents", where)) {
      std::vector<int> r;
      for (const auto& x : row) r.push_back(require_int(x, where + ".exponents"));
      e.push_back(std::move(r));
    }
    try {
      alpha = Cocycle::bicharacter(group, e);
    } catch (const ValidationError& ex) {
      fail(where, ex.what());
    }
  } else if (type == "table") {
    const Json& vals = require(v, "values", where);
    int n = grp.size();
    if (!vals.is_array() || static_cast<int>(vals.size()) != n) fail(where, "expected a |G| x |G| table");
    std::vector<Cyclotomic> t;
    for (int a = 0; a < n; ++a) {
      if (!vals[a].is_array() || static_cast<int>(vals[a].size()) != n) fail(where, "expected a |G| x |G| table");
      for (int b = 0; b < n; ++b) t.push_back(parse_scalar_json(vals[a][b], where + ".values"));
    }
    alpha = Cocycle(group, std::move(t), "table");
  } else {
    fail(where, "unknown cocycle type \"" + type + "\"");
  }
  CocycleReport rep = validate_cocycle(alpha, false);
  if (!rep.nonzero) fail(where, "contains a zero value");
  if (!rep.normalized) fail(where, "not normalized at element " + grp.label(rep.bad_normalization.value_or(0)));
  if (!rep.cocycle) {
    auto t = rep.bad_triple.value_or(std::array<int, 3>{0, 0, 0});
    fail(where, "2-cocycle identity fails on the triple (" + grp.label(t[0]) + ", " + grp.label(t[1]) + ", " +
                    grp.label(t[2]) + ")");
  }
  return alpha;
}

}  // namespace

Cyclotomic parse_scalar_json(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return Cyclotomic::parse(v.get<std::string>());
    if (v.is_number_integer()) return Cyclotomic(v.get<std::int64_t>());
  } catch (const ValidationError& e) {
    fail(where, e.what());
  } catch (const DivisionByZeroError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string");
}

ProblemSpec parse_problem(const Json& doc, const std::string& fallback_name) {
  if (!doc.is_object()) throw ValidationError("problem: expected a JSON object");
  ProblemSpec spec;
  spec.name = doc.contains("name") ? doc.at("name").get<std::string>() : fallback_name;
  GroupParse gp = parse_group(require(doc, "group", "problem"));
  spec.group = gp.group;
  const Json& action = require(doc, "action", "problem");
  if (doc.contains("n")) {
    spec.n = require_int(doc.at("n"), "n");
  } else if (spec.group->kind() == FiniteGroup::Kind::Permutation) {
    spec.n = spec.group->degree();
  } else {
    fail("problem", "missing field \"n\"");
  }
  if (spec.n < 1 || spec.n > 31) fail("n", "must be between 1 and 31");
  spec.q = parse_q(require(doc, "q", "problem"), spec.n);
  spec.action = parse_action(action, gp, spec.n);
  spec.alpha = parse_cocycle(doc.contains("cocycle") ? doc.at("cocycle") : Json("trivial"), spec.group);
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text, const std::string& fallback_name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("parse error: ") + e.what());
  }
  try {
    return parse_problem(doc, fallback_name);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("problem: ") + e.what());
  }
}

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str(), std::filesystem::path(path).stem().string());
}

Json tga_to_json(const TgaElement& x, const FiniteGroup& group) {
  Json out = Json::object();
  for (const auto& [g, c] : x) out[group.label(g)] = c.to_string();
  return out;
}

Json kappa_to_json(const KappaMap& kappa, const FiniteGroup& group) {
  Json out = Json::array();
  for (int i = 0; i < kappa.n(); ++i)
    for (int j = i + 1; j < kappa.n(); ++j) {
      const TgaElement& v = kappa.upper(i, j);
      if (v.empty()) continue;
      out.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"coefficients", tga_to_json(v, group)}});
    }
  return out;
}

KappaMap kappa_from_json(const Json& records, const ProblemSpec& spec) {
  const std::string where = "kappa";
  if (!records.is_array()) fail(where, "expected a list of records");
  KappaMap k(spec.n, spec.group->size());
  for (const auto& rec : records) {
    int i = require_int(require(rec, "i", where), where + ".i") - 1;
    int j = require_int(require(rec, "j", where), where + ".j") - 1;
    if (i < 0 || j < 0 || i >= spec.n || j >= spec.n || i == j) fail(where, "bad index pair");
    const Json& coeffs = require(rec, "coefficients", where);
    if (!coeffs.is_object()) fail(where, "coefficients must be an object keyed by group element");
    TgaElement v = k.upper(std::min(i, j), std::max(i, j));
    for (const auto& [label, val] : coeffs.items()) {
      int g = 0;
      try {
        g = spec.group->find(label);
      } catch (const ValidationError& e) {
        fail(where, e.what());
      }
      Cyclotomic c = parse_scalar_json(val, where + ".coefficients");
      // kappa(v_j, v_i) = -q_ji kappa(v_i, v_j)
      if (i > j) c = -(spec.q(j, i) * c);
      tga_add_term(v, g, c);
    }
    k.set_upper(std::min(i, j), std::max(i, j), std::move(v));
  }
  return k;
}

std::vector<KappaMap> kappas_from_document(const Json& doc, const ProblemSpec& spec) {
  if (doc.is_array()) return {kappa_from_json(doc, spec)};
  if (doc.is_object() && doc.contains("kappa")) return {kappa_from_json(doc.at("kappa"), spec)};
  for (const char* key : {"basis", "kappa_basis"}) {
    if (!doc.is_object() || !doc.contains(key)) continue;
    std::vector<KappaMap> out;
    for (const auto& b : doc.at(key)) out.push_back(kappa_from_json(b.is_object() && b.contains("kappa") ? b.at("kappa") : b, spec));
    return out;
  }
  fail("kappa", "expected a record list, {\"kappa\": ...} or {\"basis\": [...]}");
}

Json cochain_to_json(const CochainVector& x, const FiniteGroup& group) {
  Json out = Json::array();
  for (const auto& [key, c] : x.terms()) {
    Wedge b = std::get<2>(key);
    Json t{{"g", group.label(std::get<1>(key))}};
    Json idx = Json::array();
    for (int i = 0; i < 32; ++i)
      if (b >> i & 1) idx.push_back(i + 1);
    t["wedge"] = idx;
    if (!x.is_constant()) t["monomial"] = exponent_to_string(std::get<0>(key));
    t["value"] = c.to_string();
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace tqdh
