#include "tqdh/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "tqdh/classification.hpp"
#include "tqdh/errors.hpp"
#include "tqdh/koszul.hpp"
#include "tqdh/spin_cover.hpp"

namespace tqdh {

NamedInstance weyl_instance(int n) {
  GroupPtr g = FiniteGroup::from_table({{0}});
  return {"weyl" + std::to_string(n), g, GroupAction::from_generators(g, n, {}), QMatrix::constant(n, Cyclotomic(1)),
          Cocycle::trivial(g)};
}

NamedInstance z2_negation_instance() {
  GroupPtr g = FiniteGroup::cyclic_product({2});
  return {"z2-negation", g, GroupAction::diagonal(g, {{Cyclotomic(-1), Cyclotomic(-1)}}),
          QMatrix::constant(2, Cyclotomic(1)), Cocycle::trivial(g)};
}

namespace {

NamedInstance klein(bool twisted, std::vector<std::vector<Cyclotomic>> lambda, const std::string& name) {
  GroupPtr g = FiniteGroup::cyclic_product({2, 2});
  int n = static_cast<int>(lambda[0].size());
  Cocycle a = twisted ? Cocycle::bicharacter(g, {{0, 0}, {1, 0}}) : Cocycle::trivial(g);
  return {name + (twisted ? "-twisted" : "-trivial"), g, GroupAction::diagonal(g, lambda),
          QMatrix::constant(n, Cyclotomic(1)), a};
}

}  // namespace

NamedInstance klein_diagonal_instance(bool twisted) {
  Cyclotomic p(1), m(-1);
  return klein(twisted, {{m, p}, {p, m}}, "klein2");
}

NamedInstance klein_diagonal3_instance(bool twisted) {
  Cyclotomic p(1), m(-1);
  return klein(twisted, {{m, m, p}, {p, m, m}}, "klein3");
}

NamedInstance symmetric_instance(int n, bool twisted, int q_sign) {
  GroupPtr g = FiniteGroup::symmetric(n);
  return {"S" + std::to_string(n) + (twisted ? "-spin" : "-trivial") + (q_sign < 0 ? "" : "-q1"), g,
          GroupAction::natural_permutation(g), QMatrix::constant(n, Cyclotomic(q_sign)),
          twisted ? spin_cocycle(g) : Cocycle::trivial(g)};
}

KappaMap random_kappa(const std::vector<KappaMap>& basis, int n, int group_size, std::mt19937_64& rng, int mode) {
  std::uniform_int_distribution<int> coef(-3, 3);
  KappaMap k(n, group_size);
  if (mode != 1)
    for (const auto& b : basis) {
      int c = coef(rng);
      if (c == 0) continue;
      KappaMap t = b;
      t *= Cyclotomic(c);
      k += t;
    }
  if (mode != 0 && n >= 2) {
    std::uniform_int_distribution<int> gi(0, group_size - 1), pi(0, n - 1);
    int terms = mode == 1 ? 1 + static_cast<int>(rng() % 4) : 1;
    for (int t = 0; t < terms; ++t) {
      int i = pi(rng), j = pi(rng);
      if (i == j) j = (i + 1) % n;
      if (i > j) std::swap(i, j);
      int c = coef(rng);
      if (c == 0) c = 1;
      TgaElement v = k.upper(i, j);
      tga_add_term(v, gi(rng), Cyclotomic(c));
      k.set_upper(i, j, std::move(v));
    }
  }
  return k;
}

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, std::string title, const std::function<bool(std::string&)>& body) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {id, std::move(title), ok, std::move(detail), secs};
}

bool cover_all_pass(const CoverReport& r, std::string& bad) {
  bool ok = true;
  for (const auto& f : r.families)
    if (!f.passed()) {
      ok = false;
      bad += " " + f.name + " (" + std::to_string(f.failed) + " failures)";
    }
  return ok;
}

// Every basis cochain v^gamma t_g (x) beta with |gamma| <= 2 and |beta| = m - 1.
bool d_squared_zero(const NamedInstance& inst, std::size_t& checked) {
  const int n = inst.action.n();
  for (int m = 1; m + 1 <= n; ++m)
    for (Wedge b = 0; b < (Wedge{1} << n); ++b) {
      if (wedge_weight(b) != m - 1) continue;
      for (int deg = 0; deg <= 2; ++deg)
        for (const auto& gamma : monomials_of_degree(n, deg))
          for (int g = 0; g < inst.group->size(); ++g) {
            CochainVector x(n, m - 1);
            x.add(gamma, g, b, Cyclotomic(1));
            ++checked;
            if (!apply_dm_star(apply_dm_star(x, inst.action, inst.q), inst.action, inst.q).is_zero()) return false;
          }
    }
  return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;

  SymmetricReport s5;
  out.push_back(timed(1, "S5 twisted classification: dimension 2, span {kappa1, kappa2}", [&](std::string& d) {
    s5 = symmetric_natural_classify(5, true);
    d = "dimension " + std::to_string(s5.basis.size()) + ", span equality " +
        (s5.spans_reference && *s5.spans_reference ? "exact" : "fails");
    return s5.basis.size() == 2 && s5.spans_reference.value_or(false);
  }));

  out.push_back(timed(2, "family images at n = 5 (1/20 t_1; 0; 0; 0; 1/60 sum(2t_(ijk) + t_(ikj)))", [&](std::string& d) {
    if (s5.images.size() != 5) {
      d = "classification did not run";
      return false;
    }
    bool ok = true;
    for (const auto& img : s5.images) {
      bool m = img.matches.value_or(false);
      ok = ok && m;
      d += "a=" + std::to_string(img.family) + (m ? ":ok " : ":MISMATCH ");
    }
    return ok;
  }));

  out.push_back(timed(3, "spin(4) is a normalized 2-cocycle with alpha((1 2),(3 4))/alpha((3 4),(1 2)) = -1",
                      [&](std::string& d) {
                        GroupPtr s4 = FiniteGroup::symmetric(4);
                        Cocycle a = spin_cocycle(s4);
                        CocycleReport r = validate_cocycle(a, false);
                        int x = s4->find("(1 2)"), y = s4->find("(3 4)");
                        Cyclotomic beta = a(x, y) / a(y, x);
                        d = std::string("normalized ") + (r.normalized ? "yes" : "no") + ", identity on 24^3 triples " +
                            (r.cocycle ? "yes" : "no") + ", beta = " + beta.to_string();
                        return r.normalized && r.cocycle && beta == Cyclotomic(-1);
                      }));

  out.push_back(timed(4, "cover relations and section properties: n = 4 exhaustive, n = 5 sampled", [&](std::string& d) {
    CoverReport r4 = verify_cover(4, opt.samples, opt.seed);
    CoverReport r5 = verify_cover(5, opt.samples, opt.seed);
    std::string bad;
    bool ok4 = r4.exhaustive && cover_all_pass(r4, bad);
    bool ok5 = cover_all_pass(r5, bad);
    d = std::to_string(r4.families.size()) + " families at n = 4, " + std::to_string(r5.families.size()) +
        " at n = 5 with " + std::to_string(opt.samples) + " samples" + (bad.empty() ? "" : "; failing:" + bad);
    return ok4 && ok5;
  }));

  out.push_back(timed(5, "PBW condition checker agrees with ambiguity resolution on random kappa", [&](std::string& d) {
    std::vector<NamedInstance> insts = {symmetric_instance(3, false), klein_diagonal3_instance(false),
                                        klein_diagonal3_instance(true)};
    std::mt19937_64 rng(opt.seed);
    int total = 0, agree = 0, holds = 0;
    for (std::size_t k = 0; k < insts.size(); ++k) {
      const auto& inst = insts[k];
      PbwData data = inst.data();
      auto basis = solve_parameter_space(data);
      int per = (opt.random_kappas + static_cast<int>(insts.size()) - 1) / static_cast<int>(insts.size());
      for (int t = 0; t < per; ++t) {
        KappaMap kap = random_kappa(basis, inst.action.n(), inst.group->size(), rng, t % 3);
        bool a = check_pbw_conditions(kap, data).holds();
        bool b = verify_ambiguities(kap, data).resolvable;
        ++total;
        if (a == b) ++agree;
        if (a) ++holds;
      }
    }
    d = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(holds) + " satisfy PBW)";
    return total >= 100 && agree == total && holds > 0 && holds < total;
  }));

  out.push_back(timed(6, "direct, cohomological and diagonal parameter spaces coincide", [&](std::string& d) {
    std::vector<std::pair<NamedInstance, bool>> insts;
    for (int n = 1; n <= 3; ++n) insts.emplace_back(weyl_instance(n), true);
    insts.emplace_back(z2_negation_instance(), true);
    insts.emplace_back(klein_diagonal_instance(false), true);
    insts.emplace_back(klein_diagonal_instance(true), true);
    insts.emplace_back(klein_diagonal3_instance(true), true);
    for (int n = 4; n <= 5; ++n)
      for (bool tw : {false, true}) insts.emplace_back(symmetric_instance(n, tw), false);
    bool ok = true;
    for (const auto& [inst, diag] : insts) {
      PbwData data = inst.data();
      auto direct = solve_parameter_space(data);
      auto coh = cohomological_parameter_space(inst.action, inst.q, inst.alpha);
      bool same = same_kappa_span(direct, coh) && direct.size() == coh.size();
      std::string extra;
      if (diag) {
        std::vector<KappaMap> f;
        for (auto& x : diagonal_kappa_basis(inst.action, inst.q, inst.alpha)) f.push_back(std::move(x.kappa));
        bool sd = same_kappa_span(direct, f) && static_cast<int>(f.size()) == kappa_rank(f);
        same = same && sd;
        extra = "/" + std::to_string(f.size());
      }
      ok = ok && same;
      d += inst.name + ":" + std::to_string(direct.size()) + "/" + std::to_string(coh.size()) + extra +
           (same ? "" : "(MISMATCH)") + " ";
    }
    return ok;
  }));

  out.push_back(timed(7, "d*_{m+1} d*_m = 0 on all n = 3 basis cochains", [&](std::string& d) {
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    GroupPtr c3 = FiniteGroup::cyclic_product({3});
    QMatrix qg(3, {Cyclotomic(1), z3, Cyclotomic(-1), z3.inverse(), Cyclotomic(1), Cyclotomic::root_of_unity(4, 1),
                   Cyclotomic(-1), Cyclotomic::root_of_unity(4, 3), Cyclotomic(1)});
    NamedInstance c3inst{"Z3-diagonal", c3, GroupAction::diagonal(c3, {{z3, z3 * z3, Cyclotomic(1)}}), qg,
                         Cocycle::trivial(c3)};
    std::vector<NamedInstance> insts = {weyl_instance(3), symmetric_instance(3, false), symmetric_instance(3, false, 1),
                                        klein_diagonal3_instance(true), c3inst};
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& inst : insts) {
      bool z = d_squared_zero(inst, checked);
      if (!z) d += inst.name + " fails; ";
      ok = ok && z;
    }
    d += std::to_string(checked) + " cochains over " + std::to_string(insts.size()) + " instances";
    return ok;
  }));

  out.push_back(timed(8, "constant cocycle kernels: 35 at n = 4 containing every eta family, 85 at n = 5",
                      [&](std::string& d) {
                        bool ok = true;
                        for (int n : {4, 5}) {
                          NamedInstance inst = symmetric_instance(n, false);
                          auto kernel = constant_cocycle_basis(inst.action, inst.q);
                          auto etas = eta_family_basis(inst.group);
                          bool inside = true;
                          std::vector<SparseVec> rows;
                          for (const auto& e : etas) {
                            inside = inside && apply_dm_star(e.cochain, inst.action, inst.q).is_zero();
                            rows.push_back(e.cochain.constant_coordinates());
                          }
                          int rank = matrix_rank(rows, inst.group->size() * pair_count(n));
                          std::size_t want = n == 4 ? 35 : 85;
                          bool good = kernel.size() == want && etas.size() == want && inside &&
                                      rank == static_cast<int>(want);
                          ok = ok && good;
                          d += "n=" + std::to_string(n) + ": kernel " + std::to_string(kernel.size()) + ", families " +
                               std::to_string(etas.size()) + " (rank " + std::to_string(rank) + ")" +
                               (inside ? "" : " not all in kernel") + "; ";
                        }
                        return ok;
                      }));

  out.push_back(timed(9, "untwisted S5 parameter space is larger than 2", [&](std::string& d) {
    NamedInstance inst = symmetric_instance(5, false);
    auto coh = cohomological_parameter_space(inst.action, inst.q, inst.alpha);
    d = "untwisted dimension " + std::to_string(coh.size()) + " vs twisted " + std::to_string(s5.basis.size());
    return coh.size() > 2;
  }));

  return out;
}

}  // namespace tqdh
