#include "tqdh/koszul.hpp"

#include <bit>

#include "tqdh/errors.hpp"

namespace tqdh {

int wedge_weight(Wedge b) { return std::popcount(b); }

Wedge wedge_of(std::initializer_list<int> indices) {
  Wedge b = 0;
  for (int i : indices) b |= Wedge{1} << i;
  return b;
}

std::string wedge_to_string(Wedge b) {
  std::string out;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1) {
      if (!out.empty()) out += "^";
      out += "v" + std::to_string(i + 1) + "*";
    }
  return out.empty() ? "1" : out;
}

bool CochainVector::is_constant() const {
  for (const auto& [key, c] : terms_)
    for (int e : std::get<0>(key))
      if (e != 0) return false;
  return true;
}

void CochainVector::add(const Exponent& gamma, int g, Wedge beta, const Cyclotomic& c) {
  if (c.is_zero()) return;
  if (wedge_weight(beta) != degree_) throw InternalError("wedge weight does not match cochain degree");
  auto [it, inserted] = terms_.try_emplace(Key{gamma, g, beta}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CochainVector::add_constant(int g, int r, int s, const Cyclotomic& c, const QMatrix& q) {
  if (r == s) return;
  // v_r^* ^ v_s^* = -q_sr v_s^* ^ v_r^* in Lambda_{q^-1}(V^*)
  if (r < s) add(Exponent(n_, 0), g, wedge_of({r, s}), c);
  else add(Exponent(n_, 0), g, wedge_of({r, s}), -(q(s, r) * c));
}

Cyclotomic CochainVector::constant_coefficient(int g, int r, int s) const {
  auto it = terms_.find(Key{Exponent(n_, 0), g, wedge_of({r, s})});
  return it == terms_.end() ? Cyclotomic() : it->second;
}

SparseVec CochainVector::constant_coordinates() const {
  std::vector<std::pair<int, Cyclotomic>> out;
  int p = pair_count(n_);
  for (const auto& [key, c] : terms_) {
    Wedge b = std::get<2>(key);
    int r = std::countr_zero(b);
    int s = 31 - std::countl_zero(b);
    out.emplace_back(std::get<1>(key) * p + pair_index(n_, r, s), c);
  }
  return make_sparse(std::move(out));
}

CochainVector CochainVector::from_constant_coordinates(int n, const DenseVec& v) {
  CochainVector x(n, 2);
  int p = pair_count(n);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    int g = static_cast<int>(idx) / p;
    int pi = static_cast<int>(idx) % p;
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s)
        if (pair_index(n, r, s) == pi) x.add(Exponent(n, 0), g, wedge_of({r, s}), v[idx]);
  }
  return x;
}

std::string CochainVector::to_string(const FiniteGroup& group) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + exponent_to_string(std::get<0>(key)) + "*t" + group.label(std::get<1>(key)) +
           " (x) " + wedge_to_string(std::get<2>(key));
  }
  return out;
}

void require_koszul_extension(const GroupAction& action, const QMatrix& q) {
  if (q.n() != action.n()) throw ValidationError("q-matrix size does not match the action");
  ExtensionReport ext = check_action_extends(action, q, 1);
  if (!ext.symmetric || !ext.exterior)
    throw ValidationError(std::string("action does not extend to ") + (!ext.symmetric ? "S_q(V)" : "Lambda_q(V)") +
                          (ext.witnesses.empty() ? std::string() : ": " + ext.witnesses.front()));
}

CochainVector apply_dm_star(const CochainVector& x, const GroupAction& action, const QMatrix& q) {
  const int n = x.n();
  CochainVector out(n, x.degree() + 1);
  for (const auto& [key, c] : x.terms()) {
    const auto& [gamma, g, beta] = key;
    for (int i = 0; i < n; ++i) {
      if (beta >> i & 1) continue;
      Wedge nb = beta | (Wedge{1} << i);
      Cyclotomic left(1), right(1);
      for (int s = 0; s < n; ++s) {
        if (!(beta >> s & 1)) continue;
        if (s < i) left *= q(s, i);
        else right *= q(i, s);
      }
      Cyclotomic base = (wedge_weight(beta & ((Wedge{1} << i) - 1)) % 2 == 0) ? c : -c;
      Exponent ei = unit_exponent(n, i);
      Exponent up = gamma;
      ++up[i];
      out.add(up, g, nb, base * left * qsym_factor(q, ei, gamma));
      for (const auto& [k, gk] : action.row(g, i)) {
        Exponent e = gamma;
        ++e[k];
        out.add(e, g, nb, -(base * right * gk * qsym_factor(q, gamma, unit_exponent(n, k))));
      }
    }
  }
  return out;
}

std::vector<CochainVector> constant_cocycle_basis_for(int g, const GroupAction& action, const QMatrix& q) {
  const int n = action.n();
  const int p = pair_count(n);
  std::map<CochainVector::Key, std::vector<std::pair<int, Cyclotomic>>> rows;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      CochainVector x(n, 2);
      x.add(Exponent(n, 0), g, wedge_of({j, k}), Cyclotomic(1));
      CochainVector dx = apply_dm_star(x, action, q);
      for (const auto& [key, c] : dx.terms()) rows[key].emplace_back(pair_index(n, j, k), c);
    }
  SparseMatrix m;
  m.cols = p;
  for (auto& [key, terms] : rows) m.add_row(make_sparse(std::move(terms)));
  std::vector<CochainVector> out;
  for (const auto& v : kernel_basis(m)) {
    CochainVector x(n, 2);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) x.add(Exponent(n, 0), g, wedge_of({j, k}), v[pair_index(n, j, k)]);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CochainVector> constant_cocycle_basis(const GroupAction& action, const QMatrix& q) {
  require_koszul_extension(action, q);
  std::vector<CochainVector> out;
  for (int g = 0; g < action.group()->size(); ++g)
    for (auto& x : constant_cocycle_basis_for(g, action, q)) out.push_back(std::move(x));
  return out;
}

namespace {

// eta(v_k ^ v_l) for all k, l, using v_k ^ v_l = -q_kl v_l ^ v_k.
std::vector<std::vector<TgaElement>> eta_table(const CochainVector& eta, const QMatrix& q) {
  if (eta.degree() != 2 || !eta.is_constant()) throw ValidationError("expected a constant 2-cochain");
  const int n = eta.n();
  std::vector<std::vector<TgaElement>> t(n, std::vector<TgaElement>(n));
  for (const auto& [key, c] : eta.terms()) {
    Wedge b = std::get<2>(key);
    int r = std::countr_zero(b);
    int s = 31 - std::countl_zero(b);
    tga_add_term(t[r][s], std::get<1>(key), c);
    tga_add_term(t[s][r], std::get<1>(key), -(q(s, r) * c));
  }
  return t;
}

// sum_{k,l} (h^-1)^i_k (h^-1)^j_l eta(v_k ^ v_l), optionally only over k < l.
TgaElement pulled_back(const std::vector<std::vector<TgaElement>>& t, int hinv, int i, int j, const GroupAction& action,
                       bool ordered_only) {
  TgaElement acc;
  for (const auto& [k, ck] : action.row(hinv, i))
    for (const auto& [l, cl] : action.row(hinv, j)) {
      if (k == l || (ordered_only && k > l)) continue;
      Cyclotomic c = ck * cl;
      for (const auto& [g, v] : t[k][l]) tga_add_term(acc, g, c * v);
    }
  return acc;
}

}  // namespace

CochainVector act_on_cochain(int h, const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                             const Cocycle& alpha) {
  const int n = eta.n();
  auto t = eta_table(eta, q);
  int hinv = action.group()->inv(h);
  CochainVector out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [g, c] : twisted_conjugate(h, pulled_back(t, hinv, i, j, action, false), alpha))
        out.add(Exponent(n, 0), g, wedge_of({i, j}), c);
  return out;
}

CochainVector reynolds_project(const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                               const Cocycle& alpha) {
  const int n = eta.n();
  const int size = action.group()->size();
  auto t = eta_table(eta, q);
  std::vector<std::vector<TgaElement>> acc(n, std::vector<TgaElement>(n));
  for (int h = 0; h < size; ++h) {
    int hinv = action.group()->inv(h);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (const auto& [g, c] : twisted_conjugate(h, pulled_back(t, hinv, i, j, action, false), alpha))
          tga_add_term(acc[i][j], g, c);
  }
  Cyclotomic scale = Cyclotomic(Rational(1, size));
  CochainVector out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (const auto& [g, c] : acc[i][j]) out.add(Exponent(n, 0), g, wedge_of({i, j}), c * scale);
  return out;
}

bool is_invariant(const CochainVector& eta, const GroupAction& action, const QMatrix& q, const Cocycle& alpha) {
  for (int h : action.group()->generators())
    if (!(act_on_cochain(h, eta, action, q, alpha) == eta)) return false;
  return true;
}

TgaElement induced_cocycle_eval(const CochainVector& eta, int i, int j, const GroupAction& action, const QMatrix& q,
                                const Cocycle& alpha, bool require_invariant) {
  if (require_invariant && !is_invariant(eta, action, q, alpha))
    throw ValidationError("cochain is not invariant under the group");
  auto t = eta_table(eta, q);
  const int size = action.group()->size();
  TgaElement acc;
  for (int g = 0; g < size; ++g) {
    TgaElement inner = pulled_back(t, action.group()->inv(g), i, j, action, true);
    for (const auto& [h, c] : twisted_conjugate(g, inner, alpha)) tga_add_term(acc, h, c);
  }
  return tga_scale(acc, Cyclotomic(Rational(1, size)));
}

PairTable induced_cocycle_table(const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                                const Cocycle& alpha, bool require_invariant) {
  if (require_invariant && !is_invariant(eta, action, q, alpha))
    throw ValidationError("cochain is not invariant under the group");
  const int n = eta.n();
  PairTable mu(n, std::vector<TgaElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mu[i][j] = induced_cocycle_eval(eta, i, j, action, q, alpha, false);
  return mu;
}

KappaMap skew_symmetrize(const PairTable& mu, const QMatrix& q, int group_size) {
  const int n = q.n();
  KappaMap k(n, group_size);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) k.set_upper(i, j, tga_sum(mu[i][j], tga_scale(mu[j][i], -q(i, j))));
  return k;
}

std::vector<CochainVector> invariant_constant_cocycles(const GroupAction& action, const QMatrix& q, const Cocycle& alpha) {
  std::vector<CochainVector> out;
  const int n = action.n();
  EchelonBasis span(action.group()->size() * pair_count(n));
  for (const auto& eta : constant_cocycle_basis(action, q)) {
    CochainVector r = reynolds_project(eta, action, q, alpha);
    if (r.is_zero()) continue;
    if (span.add(r.constant_coordinates())) out.push_back(std::move(r));
  }
  return out;
}

std::vector<KappaMap> cohomological_parameter_space(const GroupAction& action, const QMatrix& q, const Cocycle& alpha) {
  std::vector<KappaMap> out;
  const int size = action.group()->size();
  EchelonBasis span(size * pair_count(action.n()));
  for (const auto& eta : invariant_constant_cocycles(action, q, alpha)) {
    KappaMap k = skew_symmetrize(induced_cocycle_table(eta, action, q, alpha, false), q, size);
    if (!k.is_zero() && span.add(k.sparse_coordinates())) out.push_back(std::move(k));
  }
  return out;
}

namespace {

std::vector<int> letters_of(const SkewMonomial& m) {
  std::vector<int> w;
  for (std::size_t i = 0; i < m.gamma.size(); ++i)
    for (int e = 0; e < m.gamma[i]; ++e) w.push_back(static_cast<int>(i));
  if (m.g != 0) w.push_back(ReductionWord::group(m.g));
  return w;
}

int degree_of(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

struct Split {
  SkewSum top;    // degree d
  SkewSum first;  // degree d - 2
  bool clean = true;
};

Split product_parts(const SkewMonomial& a, const SkewMonomial& b, const KappaMap& kappa, const PbwData& d) {
  std::vector<int> w = letters_of(a);
  std::vector<int> wb = letters_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  WordSum s;
  s.emplace(w, Cyclotomic(1));
  int deg = degree_of(a.gamma) + degree_of(b.gamma);
  Split out;
  for (const auto& [key, c] : normal_form_reduce(s, kappa, d)) {
    int e = degree_of(key.first);
    if (e == deg) out.top.emplace(key, c);
    else if (e == deg - 2) out.first.emplace(key, c);
    else if (e > deg || (deg - e) % 2 != 0) out.clean = false;
  }
  return out;
}

SkewSum mu_bilinear(const SkewSum& x, const SkewSum& y, const KappaMap& kappa, const PbwData& d) {
  SkewSum out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Cyclotomic c = cx * cy;
      for (const auto& [k, v] : product_parts({kx.first, kx.second}, {ky.first, ky.second}, kappa, d).first)
        skew_add_term(out, k.first, k.second, c * v);
    }
  return out;
}

SkewSum single(const SkewMonomial& m) { return SkewSum{{{m.gamma, m.g}, Cyclotomic(1)}}; }

void accumulate(SkewSum& acc, const SkewSum& x, const Cyclotomic& c) {
  for (const auto& [k, v] : x) skew_add_term(acc, k.first, k.second, c * v);
}

}  // namespace

SkewSum deformation_mu1(const SkewMonomial& a, const SkewMonomial& b, const KappaMap& kappa, const PbwData& d) {
  return product_parts(a, b, kappa, d).first;
}

HochschildReport check_hochschild_identity(const KappaMap& kappa, const PbwData& d, int max_degree,
                                           const std::vector<int>& group_elements, std::size_t max_witnesses) {
  const int n = d.action.n();
  const FiniteGroup& grp = *d.action.group();
  std::vector<SkewMonomial> monos;
  for (int deg = 0; deg <= max_degree; ++deg)
    for (const auto& e : monomials_of_degree(n, deg))
      for (int g : group_elements) monos.push_back({e, g});
  HochschildReport rep;
  auto mul = [&](const SkewSum& x, const SkewSum& y) { return skew_multiply(x, y, d.action, d.q, d.alpha); };

  for (const auto& a : monos)
    for (const auto& b : monos) {
      int dab = degree_of(a.gamma) + degree_of(b.gamma);
      if (dab > max_degree) continue;
      Split ab = product_parts(a, b, kappa, d);
      SkewSum ab0 = mul(single(a), single(b));
      if (!ab.clean || ab.top != ab0) ++rep.degree_failures;
      for (const auto& c : monos) {
        if (dab + degree_of(c.gamma) > max_degree) continue;
        ++rep.triples;
        SkewSum bc0 = mul(single(b), single(c));
        SkewSum lhs = mul(single(a), mu_bilinear(single(b), single(c), kappa, d));
        accumulate(lhs, mu_bilinear(single(a), bc0, kappa, d), Cyclotomic(1));
        accumulate(lhs, mu_bilinear(ab0, single(c), kappa, d), Cyclotomic(-1));
        accumulate(lhs, mul(ab.first, single(c)), Cyclotomic(-1));
        if (!lhs.empty()) {
          ++rep.failures;
          if (rep.witnesses.size() < max_witnesses)
            rep.witnesses.push_back("a=" + exponent_to_string(a.gamma) + "*t" + grp.label(a.g) +
                                    " b=" + exponent_to_string(b.gamma) + "*t" + grp.label(b.g) +
                                    " c=" + exponent_to_string(c.gamma) + "*t" + grp.label(c.g) +
                                    " defect " + skew_to_string(lhs, grp));
        }
      }
    }
  return rep;
}

}  // namespace tqdh
