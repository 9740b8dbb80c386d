#include "tqdh/classification.hpp"

#include <algorithm>
#include <random>

#include "tqdh/errors.hpp"
#include "tqdh/spin_cover.hpp"

namespace tqdh {

namespace {

void require_diagonal(const GroupAction& action) {
  if (!action.is_diagonal()) throw ValidationError("action is not diagonal");
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool cg_membership(const std::vector<int>& gamma, int g, const GroupAction& action, const QMatrix& q) {
  require_diagonal(action);
  const int n = action.n();
  if (static_cast<int>(gamma.size()) != n) throw ValidationError("gamma has the wrong length");
  for (int e : gamma)
    if (e < -1) throw ValidationError("gamma entries must be >= -1");
  for (int i = 0; i < n; ++i) {
    if (gamma[i] == -1) continue;
    Cyclotomic p(1);
    for (int s = 0; s < n; ++s)
      if (gamma[s] != 0) p *= q.power(i, s, gamma[s]);
    if (!(p == action.lambda(g, i))) return false;
  }
  return true;
}

std::vector<DiagonalTriple> diagonal_constant_basis(const GroupAction& action, const QMatrix& q) {
  require_diagonal(action);
  const int n = action.n();
  std::vector<DiagonalTriple> out;
  for (int g = 0; g < action.group()->size(); ++g)
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        bool ok = true;
        for (int t = 0; t < n && ok; ++t)
          if (t != r && t != s) ok = q(r, t) * q(s, t) == action.lambda(g, t);
        if (ok) out.push_back({g, r, s});
      }
  return out;
}

std::vector<DiagonalKappa> diagonal_kappa_basis(const GroupAction& action, const QMatrix& q, const Cocycle& alpha,
                                                std::optional<std::uint64_t> seed) {
  require_diagonal(action);
  const FiniteGroup& grp = *action.group();
  const int n = action.n();
  std::mt19937_64 rng(seed.value_or(0));
  std::vector<DiagonalKappa> out;
  for (const auto& cls : grp.conjugacy_classes()) {
    int a = cls.front();
    std::vector<int> cent = grp.centralizer(a);
    // conjugate -> elements g with g a g^-1 equal to it
    std::map<int, std::vector<int>> cosets;
    for (int g = 0; g < grp.size(); ++g) cosets[grp.conj(g, a)].push_back(g);
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        bool ok = true;
        for (int t = 0; t < n && ok; ++t)
          if (t != r && t != s) ok = q(r, t) * q(s, t) == action.lambda(a, t);
        for (std::size_t k = 0; k < cent.size() && ok; ++k) {
          int h = cent[k];
          ok = action.lambda(h, r) * action.lambda(h, s) == alpha(h, a) / alpha(a, h);
        }
        if (!ok) continue;
        TgaElement value;
        for (const auto& [c, reps] : cosets) {
          int g = reps.front();
          if (seed) g = reps[std::uniform_int_distribution<std::size_t>(0, reps.size() - 1)(rng)];
          Cyclotomic f = twisted_conjugate_factor(g, a, alpha) / (action.lambda(g, r) * action.lambda(g, s));
          tga_add_term(value, c, f);
        }
        KappaMap k(n, grp.size());
        k.set_upper(r, s, std::move(value));
        out.push_back({a, r, s, std::move(k)});
      }
  }
  return out;
}

int symmetric_element(const FiniteGroup& sn, const std::vector<std::vector<int>>& cycles) {
  Permutation p(sn.degree());
  for (int i = 0; i < sn.degree(); ++i) p[i] = i;
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k]] = c[(k + 1) % c.size()];
  int idx = sn.find_permutation(p);
  if (idx < 0) throw InternalError("permutation not in group");
  return idx;
}

std::size_t eta_family_count(int n) {
  return static_cast<std::size_t>(2 * binom(n, 2) + (n - 2) * binom(n, 2) + 3 * binom(n, 4) + 2 * binom(n, 3));
}

std::vector<EtaFamilyElement> eta_family_basis(const GroupPtr& sn) {
  const int n = sn->degree();
  long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (sn->kind() != FiniteGroup::Kind::Permutation || sn->size() != order)
    throw ValidationError("expected a full symmetric group");
  if (n < 4) throw ValidationError("the eta families need n >= 4");
  QMatrix q = QMatrix::constant(n, Cyclotomic(-1));
  std::vector<EtaFamilyElement> out;
  auto make = [&](int family, std::vector<int> idx, int g, const std::vector<std::pair<int, int>>& wedges) {
    CochainVector x(n, 2);
    for (auto [a, b] : wedges) x.add_constant(g, a, b, Cyclotomic(1), q);
    out.push_back({family, std::move(idx), g, std::move(x)});
  };
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) make(1, {r, s}, 0, {{r, s}});
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) make(2, {r, s}, symmetric_element(*sn, {{r, s}}), {{r, s}});
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (t != r && t != s) make(3, {r, s, t}, symmetric_element(*sn, {{r, s}}), {{r, t}, {s, t}});
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int t = r + 1; t < n; ++t)
        for (int u = t + 1; u < n; ++u) {
          if (t == s || u == s) continue;
          make(4, {r, s, t, u}, symmetric_element(*sn, {{r, s}, {t, u}}), {{r, t}, {r, u}, {s, t}, {s, u}});
        }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int t = r + 1; t < n; ++t)
        if (t != s) make(5, {r, s, t}, symmetric_element(*sn, {{r, s, t}}), {{r, s}, {s, t}, {r, t}});
  return out;
}

KappaMap symmetric_kappa1(const GroupPtr& sn) {
  const int n = sn->degree();
  KappaMap k(n, sn->size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) k.set_upper(i, j, tga_basis(0));
  return k;
}

KappaMap symmetric_kappa2(const GroupPtr& sn) {
  const int n = sn->degree();
  KappaMap k(n, sn->size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      TgaElement v;
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        tga_add_term(v, symmetric_element(*sn, {{i, j, m}}), Cyclotomic(1));
        tga_add_term(v, symmetric_element(*sn, {{i, m, j}}), Cyclotomic(1));
      }
      k.set_upper(i, j, std::move(v));
    }
  return k;
}

std::optional<TgaElement> expected_family_image(const GroupPtr& sn, int family, int i, int j) {
  const int n = sn->degree();
  switch (family) {
    case 1:
      return tga_basis(0, Cyclotomic(Rational(1, n * (n - 1))));
    case 2:
    case 4:
      return TgaElement{};
    case 3:
      if (n >= 5) return TgaElement{};
      return std::nullopt;
    case 5: {
      TgaElement v;
      Cyclotomic c(Rational(1, n * (n - 1) * (n - 2)));
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        tga_add_term(v, symmetric_element(*sn, {{i, j, k}}), c * Cyclotomic(2));
        tga_add_term(v, symmetric_element(*sn, {{i, k, j}}), c);
      }
      return v;
    }
    default:
      return std::nullopt;
  }
}

SymmetricReport symmetric_natural_classify(int n, bool twisted) {
  if (n < 4) throw ValidationError("classify-symmetric needs n >= 4");
  GroupPtr sn = FiniteGroup::symmetric(n);
  Cocycle alpha = twisted ? spin_cocycle(sn) : Cocycle::trivial(sn);
  GroupAction action = GroupAction::natural_permutation(sn);
  QMatrix q = QMatrix::constant(n, Cyclotomic(-1));
  SymmetricReport rep;
  rep.n = n;
  rep.twisted = twisted;
  rep.constant_cocycles = constant_cocycle_basis(action, q).size();
  rep.invariant_cocycles = invariant_constant_cocycles(action, q, alpha).size();
  rep.basis = cohomological_parameter_space(action, q, alpha);
  if (twisted && n >= 5)
    rep.spans_reference = rep.basis.size() == 2 &&
                          same_kappa_span(rep.basis, {symmetric_kappa1(sn), symmetric_kappa2(sn)});

  // representatives (1 2), (1 2), (1 2) with r' = 3, (1 2)(3 4), (1 2 3)
  std::vector<EtaFamilyElement> all = eta_family_basis(sn);
  const std::vector<std::vector<int>> reps = {{0, 1}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2}};
  for (int a = 1; a <= 5; ++a) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const EtaFamilyElement& e) { return e.family == a && e.indices == reps[a - 1]; });
    if (it == all.end()) throw InternalError("missing eta representative");
    FamilyImage img{a, *it, {}, std::nullopt, {}};
    PairTable mu = induced_cocycle_table(it->cochain, action, q, alpha, false);
    img.value12 = mu[0][1];
    if (twisted) {
      bool ok = true;
      bool known = true;
      for (int i = 0; i < n && known; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          auto want = expected_family_image(sn, a, i, j);
          if (!want) {
            known = false;
            break;
          }
          if (!tga_equal(*want, mu[i][j])) {
            ok = false;
            if (img.mismatches.size() < 5)
              img.mismatches.push_back("i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
          }
        }
      if (known) img.matches = ok;
    }
    rep.images.push_back(std::move(img));
  }
  return rep;
}

}  // namespace tqdh
