#include "tqdh/commands.hpp"

#include <set>

#include "tqdh/acceptance.hpp"
#include "tqdh/classification.hpp"
#include "tqdh/errors.hpp"
#include "tqdh/spin_cover.hpp"

namespace tqdh {

namespace {

Json basis_json(const std::vector<KappaMap>& basis, const FiniteGroup& g) {
  Json out = Json::array();
  for (const auto& k : basis) out.push_back(kappa_to_json(k, g));
  return out;
}

Json header(const char* command, const ProblemSpec& spec) {
  return Json{{"command", command}, {"problem", spec.name}, {"n", spec.n}, {"group_order", spec.group->size()},
              {"cocycle", spec.alpha.name()}};
}

}  // namespace

CommandResult cmd_check_extension(const ProblemSpec& spec) {
  ExtensionReport r = check_action_extends(spec.action, spec.q, 10);
  Json out = header("check-extension", spec);
  out["symmetric"] = r.symmetric;
  out["exterior"] = r.exterior;
  out["witnesses"] = r.witnesses;
  return {kOk, out};
}

CommandResult cmd_pbw_check(const ProblemSpec& spec, const Json& kappa_doc, bool ambiguities) {
  const FiniteGroup& g = *spec.group;
  std::vector<KappaMap> kappas = kappas_from_document(kappa_doc, spec);
  Json out = header("pbw-check", spec);
  Json results = Json::array();
  bool all = true, agree = true;
  for (const auto& k : kappas) {
    PbwReport r = check_pbw_conditions(k, spec.data());
    Json item{{"condition1", r.condition1}, {"condition2", r.condition2}, {"holds", r.holds()},
              {"violation_count", r.violation_count}};
    Json viol = Json::array();
    for (const auto& v : r.violations) {
      Json e{{"condition", v.condition}, {"g", g.label(v.g)}};
      if (v.condition == 1) e["h"] = g.label(v.h);
      e["i"] = v.i + 1;
      e["j"] = v.j + 1;
      if (v.condition == 2) e["k"] = v.k + 1;
      e["defect"] = v.defect;
      viol.push_back(std::move(e));
    }
    item["violations"] = std::move(viol);
    if (ambiguities) {
      AmbiguityReport a = verify_ambiguities(k, spec.data());
      Json w = Json::array();
      for (const auto& x : a.witnesses)
        w.push_back(Json{{"family", x.family}, {"word", word_to_string(x.word, g)}, {"difference", x.difference}});
      item["ambiguities"] = Json{{"resolvable", a.resolvable}, {"checked", a.checked}, {"failures", a.failures},
                                 {"witnesses", std::move(w)}};
      agree = agree && a.resolvable == r.holds();
    }
    all = all && r.holds();
    results.push_back(std::move(item));
  }
  out["count"] = kappas.size();
  out["all_hold"] = all;
  if (ambiguities) out["oracles_agree"] = agree;
  out["results"] = std::move(results);
  return {agree ? kOk : kMismatch, out};
}

CommandResult cmd_parameter_space(const ProblemSpec& spec, const std::string& method) {
  const FiniteGroup& g = *spec.group;
  Json out = header("parameter-space", spec);
  out["method"] = method;
  if (method == "direct") {
    auto b = solve_parameter_space(spec.data());
    out["dimension"] = b.size();
    out["basis"] = basis_json(b, g);
    return {kOk, out};
  }
  if (method == "cohomology") {
    auto b = cohomological_parameter_space(spec.action, spec.q, spec.alpha);
    out["dimension"] = b.size();
    out["basis"] = basis_json(b, g);
    return {kOk, out};
  }
  if (method == "both") {
    auto d = solve_parameter_space(spec.data());
    auto c = cohomological_parameter_space(spec.action, spec.q, spec.alpha);
    bool same = d.size() == c.size() && same_kappa_span(d, c);
    out["dimension"] = d.size();
    out["direct_dimension"] = d.size();
    out["cohomology_dimension"] = c.size();
    out["spans_equal"] = same;
    out["basis"] = basis_json(d, g);
    return {same ? kOk : kMismatch, out};
  }
  throw ValidationError("unknown method \"" + method + "\" (direct, cohomology or both)");
}

CommandResult cmd_constant_cocycles(const ProblemSpec& spec) {
  const FiniteGroup& g = *spec.group;
  require_koszul_extension(spec.action, spec.q);
  Json out = header("constant-cocycles", spec);
  Json groups = Json::array();
  std::size_t total = 0;
  for (int x = 0; x < g.size(); ++x) {
    auto b = constant_cocycle_basis_for(x, spec.action, spec.q);
    total += b.size();
    if (b.empty()) continue;
    Json list = Json::array();
    for (const auto& c : b) list.push_back(cochain_to_json(c, g));
    groups.push_back(Json{{"g", g.label(x)}, {"dimension", b.size()}, {"basis", std::move(list)}});
  }
  out["dimension"] = total;
  out["invariant_dimension"] = invariant_constant_cocycles(spec.action, spec.q, spec.alpha).size();
  out["by_group_element"] = std::move(groups);
  return {kOk, out};
}

CommandResult cmd_classify_diagonal(const ProblemSpec& spec) {
  const FiniteGroup& g = *spec.group;
  Json out = header("classify-diagonal", spec);
  auto triples = diagonal_constant_basis(spec.action, spec.q);
  Json tj = Json::array();
  for (const auto& t : triples) tj.push_back(Json{{"g", g.label(t.g)}, {"r", t.r + 1}, {"s", t.s + 1}});
  out["constant_basis"] = std::move(tj);

  // the kernel of d_3^* must consist of exactly these basis vectors
  std::set<DiagonalTriple> from_kernel;
  bool kernel_is_monomial = true;
  for (const auto& c : constant_cocycle_basis(spec.action, spec.q)) {
    if (c.terms().size() != 1) {
      kernel_is_monomial = false;
      continue;
    }
    const auto& key = c.terms().begin()->first;
    Wedge b = std::get<2>(key);
    int r = -1, s = -1;
    for (int i = 0; i < spec.n; ++i)
      if (b >> i & 1) (r < 0 ? r : s) = i;
    from_kernel.insert({std::get<1>(key), r, s});
  }
  bool constants_agree = kernel_is_monomial && from_kernel == std::set<DiagonalTriple>(triples.begin(), triples.end());

  auto fs = diagonal_kappa_basis(spec.action, spec.q, spec.alpha);
  std::vector<KappaMap> maps;
  Json kj = Json::array();
  for (const auto& f : fs) {
    kj.push_back(Json{{"a", g.label(f.a)}, {"r", f.r + 1}, {"s", f.s + 1}, {"kappa", kappa_to_json(f.kappa, g)}});
    maps.push_back(f.kappa);
  }
  auto direct = solve_parameter_space(spec.data());
  bool spans = direct.size() == maps.size() && same_kappa_span(direct, maps);
  out["dimension"] = maps.size();
  out["kappa_basis"] = std::move(kj);
  out["direct_dimension"] = direct.size();
  out["constant_basis_matches_kernel"] = constants_agree;
  out["spans_equal"] = spans;
  return {spans && constants_agree ? kOk : kMismatch, out};
}

CommandResult cmd_classify_symmetric(int n, bool twisted) {
  SymmetricReport r = symmetric_natural_classify(n, twisted);
  GroupPtr sn = FiniteGroup::symmetric(n);
  Json out{{"command", "classify-symmetric"}, {"n", n}, {"twisted", twisted},
           {"constant_cocycles", r.constant_cocycles}, {"invariant_cocycles", r.invariant_cocycles},
           {"dimension", r.basis.size()}, {"basis", basis_json(r.basis, *sn)}};
  out["spans_reference"] = r.spans_reference ? Json(*r.spans_reference) : Json(nullptr);
  Json images = Json::object();
  bool ok = r.spans_reference.value_or(true);
  for (const auto& img : r.images) {
    Json idx = Json::array();
    for (int i : img.representative.indices) idx.push_back(i + 1);
    Json e{{"group_element", sn->label(img.representative.group_element)},
           {"indices", idx},
           {"eta", cochain_to_json(img.representative.cochain, *sn)},
           {"image_v1_v2", tga_to_json(img.value12, *sn)}};
    e["matches_closed_form"] = img.matches ? Json(*img.matches) : Json(nullptr);
    if (!img.mismatches.empty()) e["mismatches"] = img.mismatches;
    ok = ok && img.matches.value_or(true);
    images[std::to_string(img.family)] = std::move(e);
  }
  out["lemma_image"] = std::move(images);
  return {ok ? kOk : kMismatch, out};
}

namespace {

Json alpha_report(const Cocycle& alpha, Json out) {
  const FiniteGroup& g = *alpha.group();
  CocycleReport r = validate_cocycle(alpha, true);
  out["normalized"] = r.normalized;
  out["cocycle_identity"] = r.cocycle;
  Json labels = Json::array();
  for (int a = 0; a < g.size(); ++a) {
    if (g.degree() > 0) {
      Json img = Json::array();
      for (int x : g.permutation(a)) img.push_back(x + 1);
      labels.push_back(std::move(img));
    } else {
      labels.push_back(g.label(a));
    }
  }
  out["elements"] = std::move(labels);
  Json rows = Json::array();
  for (int a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(alpha(a, b).to_string());
    rows.push_back(std::move(row));
  }
  out["values"] = std::move(rows);
  Json comm = Json::array();
  for (const auto& c : r.commuting)
    comm.push_back(Json{{"g", g.label(c.g)}, {"h", g.label(c.h)}, {"beta", c.beta.to_string()}});
  out["commuting_pairs"] = std::move(comm);
  return out;
}

}  // namespace

CommandResult cmd_alpha_table(const ProblemSpec& spec) {
  return {kOk, alpha_report(spec.alpha, header("alpha-table", spec))};
}

CommandResult cmd_alpha_table_symmetric(int n) {
  if (n < 1) throw ValidationError("alpha-table: n must be positive");
  GroupPtr sn = FiniteGroup::symmetric(n);
  Cocycle alpha = spin_cocycle(sn);
  return {kOk, alpha_report(alpha, Json{{"command", "alpha-table"}, {"n", n}, {"group_order", sn->size()},
                                         {"cocycle", alpha.name()}})};
}

CommandResult cmd_verify_cover(int n, long samples, std::uint64_t seed) {
  CoverReport r = verify_cover(n, samples, seed);
  Json fams = Json::array();
  bool ok = true;
  for (const auto& f : r.families) {
    fams.push_back(Json{{"name", f.name}, {"checked", f.checked}, {"failed", f.failed}, {"witnesses", f.witnesses}});
    ok = ok && f.passed();
  }
  Json out{{"command", "verify-cover"}, {"n", n}, {"exhaustive", r.exhaustive}, {"samples", r.samples},
           {"seed", r.seed}, {"passed", ok}, {"families", std::move(fams)}};
  return {ok ? kOk : kMismatch, out};
}

CommandResult cmd_selftest(long samples, std::uint64_t seed) {
  AcceptanceOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  Json list = Json::array();
  bool ok = true;
  for (const auto& c : run_acceptance(opt)) {
    list.push_back(Json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
    ok = ok && c.passed;
  }
  return {ok ? kOk : kMismatch, Json{{"command", "selftest"}, {"passed", ok}, {"criteria", std::move(list)}}};
}

}  // namespace tqdh
