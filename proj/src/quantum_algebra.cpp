#include "tqdh/quantum_algebra.hpp"

#include <algorithm>
#include <deque>

#include "tqdh/errors.hpp"

namespace tqdh {

QMatrix::QMatrix(int n, std::vector<Cyclotomic> table) : n_(n), q_(std::move(table)) {
  if (n < 1) throw ValidationError("dimension must be positive");
  if (q_.size() != static_cast<std::size_t>(n) * n) throw ValidationError("q table has wrong dimensions");
  for (int i = 0; i < n; ++i) {
    if (!(*this)(i, i).is_one()) throw ValidationError("q_ii must be 1 (i = " + std::to_string(i + 1) + ")");
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j).is_zero()) throw ValidationError("q entries must be nonzero");
      if (!((*this)(i, j) * (*this)(j, i)).is_one())
        throw ValidationError("q_ji must equal 1/q_ij (i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1) + ")");
    }
  }
}

QMatrix QMatrix::constant(int n, const Cyclotomic& value) {
  std::vector<Cyclotomic> t(static_cast<std::size_t>(n) * n, value);
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i) * n + i] = Cyclotomic(1);
  return QMatrix(n, std::move(t));
}

Cyclotomic QMatrix::power(int i, int j, long e) const {
  const Cyclotomic& x = (*this)(i, j);
  if (e == 0 || x.is_one()) return Cyclotomic(1);
  if (x.is_rational() && x.rational() == Rational(-1)) return Cyclotomic((e % 2 == 0) ? 1 : -1);
  return x.pow(e);
}

bool QMatrix::all_equal(const Cyclotomic& value) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !((*this)(i, j) == value)) return false;
  return true;
}

void poly_add_term(Poly& p, const Exponent& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

void skew_add_term(SkewSum& p, const Exponent& e, int g, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(e, g);
  auto it = p.find(key);
  if (it == p.end()) {
    p.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Exponent unit_exponent(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

Poly variable(int n, int i) { return Poly{{unit_exponent(n, i), Cyclotomic(1)}}; }

Cyclotomic qsym_factor(const QMatrix& q, const Exponent& gamma, const Exponent& delta) {
  Cyclotomic f(1);
  int n = static_cast<int>(gamma.size());
  for (int i = 0; i < n; ++i) {
    if (gamma[i] == 0) continue;
    for (int j = 0; j < i; ++j)
      if (delta[j] != 0) f *= q.power(i, j, static_cast<long>(gamma[i]) * delta[j]);
  }
  return f;
}

Poly qsym_multiply(const Poly& a, const Poly& b, const QMatrix& q) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      poly_add_term(out, e, qsym_factor(q, ea, eb) * ca * cb);
    }
  return out;
}

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

GroupAction GroupAction::from_generators(GroupPtr group, int n,
                                         const std::vector<std::vector<std::vector<Cyclotomic>>>& mats) {
  const auto& gens = group->generators();
  if (mats.size() != gens.size())
    throw ValidationError("expected " + std::to_string(gens.size()) + " action matrices, got " + std::to_string(mats.size()));
  for (const auto& m : mats) {
    if (static_cast<int>(m.size()) != n) throw ValidationError("action matrix has wrong size");
    for (const auto& r : m)
      if (static_cast<int>(r.size()) != n) throw ValidationError("action matrix has wrong size");
  }
  GroupAction a;
  a.group_ = group;
  a.n_ = n;
  int size = group->size();
  using Dense = std::vector<Cyclotomic>;
  std::vector<Dense> m(size);
  std::vector<bool> have(size, false);
  Dense id(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = Cyclotomic(1);
  m[0] = id;
  have[0] = true;
  auto product = [n](const Dense& x, const Dense& y) {  // row-major x*y
    Dense out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Cyclotomic& xik = x[static_cast<std::size_t>(i) * n + k];
        if (xik.is_zero()) continue;
        for (int l = 0; l < n; ++l) {
          const Cyclotomic& ykl = y[static_cast<std::size_t>(k) * n + l];
          if (!ykl.is_zero()) out[static_cast<std::size_t>(i) * n + l] += xik * ykl;
        }
      }
    return out;
  };
  std::vector<Dense> gm;
  for (const auto& mat : mats) {
    Dense d;
    for (const auto& r : mat) d.insert(d.end(), r.begin(), r.end());
    gm.push_back(std::move(d));
  }
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = group->mul(x, gens[s]);
      Dense my = product(gm[s], m[x]);
      if (!have[y]) {
        have[y] = true;
        m[y] = std::move(my);
        todo.push_back(y);
      } else if (m[y] != my) {
        throw ValidationError("action matrices do not define a group action (conflict at element " + group->label(y) + ")");
      }
    }
  }
  for (int g = 0; g < size; ++g)
    if (!have[g]) throw ValidationError("generators do not reach every group element");
  a.dense_.reserve(static_cast<std::size_t>(size) * n * n);
  for (int g = 0; g < size; ++g) a.dense_.insert(a.dense_.end(), m[g].begin(), m[g].end());
  a.finish();
  return a;
}

GroupAction GroupAction::natural_permutation(GroupPtr group) {
  if (group->kind() != FiniteGroup::Kind::Permutation)
    throw ValidationError("the natural permutation action needs a permutation group");
  GroupAction a;
  a.group_ = group;
  int n = group->degree();
  a.n_ = n;
  a.dense_.assign(static_cast<std::size_t>(group->size()) * n * n, Cyclotomic());
  for (int g = 0; g < group->size(); ++g) {
    const auto& p = group->permutation(g);
    for (int i = 0; i < n; ++i) a.dense_[(static_cast<std::size_t>(g) * n + i) * n + p[i]] = Cyclotomic(1);
  }
  a.finish();
  return a;
}

GroupAction GroupAction::diagonal(GroupPtr group, const std::vector<std::vector<Cyclotomic>>& lambda) {
  if (lambda.empty() && !group->generators().empty()) throw ValidationError("diagonal action needs eigenvalues");
  int n = lambda.empty() ? 0 : static_cast<int>(lambda[0].size());
  std::vector<std::vector<std::vector<Cyclotomic>>> mats;
  for (const auto& row : lambda) {
    if (static_cast<int>(row.size()) != n) throw ValidationError("eigenvalue rows have different lengths");
    std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i) m[i][i] = row[i];
    mats.push_back(std::move(m));
  }
  return from_generators(std::move(group), n, mats);
}

void GroupAction::finish() {
  int size = group_->size();
  rows_.assign(static_cast<std::size_t>(size) * n_, SparseVec());
  diagonal_ = true;
  monomial_ = true;
  for (int g = 0; g < size; ++g)
    for (int i = 0; i < n_; ++i) {
      auto& r = rows_[static_cast<std::size_t>(g) * n_ + i];
      for (int k = 0; k < n_; ++k) {
        const Cyclotomic& c = entry(g, i, k);
        if (c.is_zero()) continue;
        r.emplace_back(k, c);
        if (k != i) diagonal_ = false;
      }
      if (r.size() != 1 || !r[0].second.is_one()) monomial_ = false;
      if (r.empty()) throw ValidationError("action matrix of " + group_->label(g) + " is singular");
    }
}

Poly GroupAction::act_variable(int g, int i) const {
  Poly out;
  for (const auto& [k, c] : row(g, i)) poly_add_term(out, unit_exponent(n_, k), c);
  return out;
}

Poly GroupAction::act(int g, const Poly& p, const QMatrix& q) const {
  Poly out;
  for (const auto& [e, c] : p) {
    Poly term{{Exponent(n_, 0), c}};
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      Poly gv = act_variable(g, i);
      for (int r = 0; r < e[i]; ++r) term = qsym_multiply(term, gv, q);
    }
    for (const auto& [e2, c2] : term) poly_add_term(out, e2, c2);
  }
  return out;
}

SkewSum skew_multiply(const SkewSum& a, const SkewSum& b, const GroupAction& action, const QMatrix& q,
                      const Cocycle& alpha) {
  const auto& grp = *action.group();
  SkewSum out;
  for (const auto& [ka, ca] : a) {
    const auto& [ea, g] = ka;
    Poly left{{ea, ca}};
    for (const auto& [kb, cb] : b) {
      const auto& [eb, h] = kb;
      Poly gb = action.act(g, Poly{{eb, cb}}, q);
      Poly prod = qsym_multiply(left, gb, q);
      int gh = grp.mul(g, h);
      const Cyclotomic& al = alpha(g, h);
      for (const auto& [e, c] : prod) skew_add_term(out, e, gh, al * c);
    }
  }
  return out;
}

ExtensionReport check_action_extends(const GroupAction& action, const QMatrix& q, std::size_t max_witnesses) {
  ExtensionReport rep;
  const auto& grp = *action.group();
  int n = action.n();
  for (int g = 0; g < grp.size(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly gi = action.act_variable(g, i);
        Poly gj = action.act_variable(g, j);
        Poly lhs = qsym_multiply(gi, gj, q);
        Poly rhs = qsym_multiply(gj, gi, q);
        for (const auto& [e, c] : rhs) poly_add_term(lhs, e, -(q(i, j) * c));
        if (!lhs.empty()) {
          rep.symmetric = false;
          if (rep.witnesses.size() < max_witnesses)
            rep.witnesses.push_back("symmetric: g=" + grp.label(g) + " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
        }
      }
  for (int g = 0; g < grp.size(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            Cyclotomic a = action.entry(g, i, k) * action.entry(g, j, l);
            Cyclotomic b = action.entry(g, i, l) * action.entry(g, j, k);
            if (a.is_zero() && b.is_zero()) continue;
            Cyclotomic v = (Cyclotomic(1) - q(i, j) * q(l, k)) * a + (q(i, j) - q(l, k)) * b;
            if (!v.is_zero()) {
              rep.exterior = false;
              if (rep.witnesses.size() < max_witnesses)
                rep.witnesses.push_back("exterior: g=" + grp.label(g) + " i=" + std::to_string(i + 1) + " j=" +
                                        std::to_string(j + 1) + " k=" + std::to_string(k + 1) + " l=" + std::to_string(l + 1));
            }
          }
      }
  return rep;
}

Cyclotomic quantum_minor(const GroupAction& action, const QMatrix& q, int g, int i, int j, int k, int l) {
  return action.entry(g, j, l) * action.entry(g, i, k) - q(j, i) * action.entry(g, i, l) * action.entry(g, j, k);
}

}  // namespace tqdh

namespace tqdh {

std::string exponent_to_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "v" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string poly_to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + exponent_to_string(e);
  }
  return out;
}

std::string skew_to_string(const SkewSum& p, const FiniteGroup& group) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + exponent_to_string(key.first) + "*t" + group.label(key.second);
  }
  return out;
}

}  // namespace tqdh
