#include "tqdh/pbw.hpp"

#include <algorithm>
#include <tuple>

#include "tqdh/errors.hpp"

namespace tqdh {

namespace {

struct MinorTerm {
  int k, l;
  Cyclotomic value;
};

// Nonzero ddet_{ijkl}(h) over k < l, found from the supports of rows i and j.
std::vector<MinorTerm> minor_terms(const PbwData& d, int h, int i, int j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, ca] : d.action.row(h, i))
    for (const auto& [b, cb] : d.action.row(h, j))
      if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<MinorTerm> out;
  for (auto [k, l] : pairs) {
    Cyclotomic v = quantum_minor(d.action, d.q, h, i, j, k, l);
    if (!v.is_zero()) out.push_back({k, l, std::move(v)});
  }
  return out;
}

void require_extension(const PbwData& d) {
  if (d.action.group().get() != d.alpha.group().get() && d.action.group()->size() != d.alpha.group()->size())
    throw ValidationError("action and cocycle are defined on different groups");
  if (d.q.n() != d.action.n()) throw ValidationError("q-matrix size does not match the action");
  ExtensionReport ext = check_action_extends(d.action, d.q, 1);
  if (!ext.symmetric)
    throw ValidationError("action does not extend to S_q(V)" +
                          (ext.witnesses.empty() ? std::string() : ": " + ext.witnesses.front()));
}

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

PbwReport check_pbw_conditions(const KappaMap& kappa, const PbwData& d, std::size_t max_violations) {
  require_extension(d);
  const FiniteGroup& grp = *d.action.group();
  const int n = d.action.n();
  const int size = grp.size();
  if (kappa.n() != n || kappa.group_size() != size) throw ValidationError("kappa does not match the problem dimensions");
  const QMatrix& q = d.q;
  std::vector<bool> supp = kappa.support();
  PbwReport rep;
  auto record = [&](PbwViolation v) {
    ++rep.violation_count;
    if (rep.violations.size() < max_violations) rep.violations.push_back(std::move(v));
  };

  for (int g = 0; g < size; ++g) {
    for (int h = 0; h < size; ++h) {
      int c = grp.conj(h, g);
      if (!supp[g] && !supp[c]) continue;
      Cyclotomic ratio = twisted_conjugate_factor(h, g, d.alpha);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Cyclotomic diff = ratio * kappa.component(g, j, i, q);
          for (const auto& t : minor_terms(d, h, i, j)) diff -= t.value * kappa.component(c, t.l, t.k, q);
          if (!diff.is_zero()) {
            rep.condition1 = false;
            record({1, g, h, i, j, -1, diff.to_string()});
          }
        }
      }
    }
  }

  for (int g = 0; g < size; ++g) {
    if (!supp[g]) continue;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          Cyclotomic kkj = kappa.component(g, k, j, q);
          Cyclotomic kki = kappa.component(g, k, i, q);
          Cyclotomic kji = kappa.component(g, j, i, q);
          std::string defect;
          for (int m = 0; m < n; ++m) {
            Cyclotomic a = d.action.entry(g, i, m);
            if (m == i) a -= q(j, i) * q(k, i);
            Cyclotomic b = -(q(j, i) * d.action.entry(g, j, m));
            if (m == j) b += q(k, j);
            Cyclotomic cc = q(k, j) * q(k, i) * d.action.entry(g, k, m);
            if (m == k) cc -= Cyclotomic(1);
            Cyclotomic v = kkj * a + kki * b + kji * cc;
            if (!v.is_zero()) {
              if (!defect.empty()) defect += " + ";
              defect += "(" + v.to_string() + ")*v" + idx(m);
            }
          }
          if (!defect.empty()) {
            rep.condition2 = false;
            record({2, g, -1, i, j, k, defect});
          }
        }
  }
  return rep;
}

SparseMatrix pbw_linear_system(const PbwData& d) {
  require_extension(d);
  const FiniteGroup& grp = *d.action.group();
  const int n = d.action.n();
  const int size = grp.size();
  const QMatrix& q = d.q;
  KappaMap shape(n, size);
  SparseMatrix m;
  m.cols = shape.dimension();

  for (int g = 0; g < size; ++g)
    for (int h = 0; h < size; ++h) {
      int c = grp.conj(h, g);
      Cyclotomic ratio = twisted_conjugate_factor(h, g, d.alpha);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<std::pair<int, Cyclotomic>> terms;
          terms.emplace_back(shape.coordinate(g, i, j), -(ratio * q(j, i)));
          for (const auto& t : minor_terms(d, h, i, j)) terms.emplace_back(shape.coordinate(c, t.k, t.l), t.value * q(t.l, t.k));
          m.add_row(make_sparse(std::move(terms)));
        }
    }

  for (int g = 0; g < size; ++g)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int r = 0; r < n; ++r) {
            Cyclotomic a = d.action.entry(g, i, r);
            if (r == i) a -= q(j, i) * q(k, i);
            Cyclotomic b = -(q(j, i) * d.action.entry(g, j, r));
            if (r == j) b += q(k, j);
            Cyclotomic cc = q(k, j) * q(k, i) * d.action.entry(g, k, r);
            if (r == k) cc -= Cyclotomic(1);
            std::vector<std::pair<int, Cyclotomic>> terms;
            if (!a.is_zero()) terms.emplace_back(shape.coordinate(g, j, k), -(q(k, j) * a));
            if (!b.is_zero()) terms.emplace_back(shape.coordinate(g, i, k), -(q(k, i) * b));
            if (!cc.is_zero()) terms.emplace_back(shape.coordinate(g, i, j), -(q(j, i) * cc));
            m.add_row(make_sparse(std::move(terms)));
          }
  return m;
}

std::vector<KappaMap> solve_parameter_space(const PbwData& d) {
  SparseMatrix m = pbw_linear_system(d);
  std::vector<KappaMap> out;
  for (const auto& v : kernel_basis(m)) out.push_back(KappaMap::from_coordinates(d.action.n(), d.action.group()->size(), v));
  return out;
}

namespace {

void add_word(WordSum& s, std::vector<int> w, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

bool is_redex(int a, int b) {
  if (a < 0) return true;   // t_g v_i or t_g t_h
  return b >= 0 && a > b;   // v_j v_i with j > i
}

std::vector<int> splice(const std::vector<int>& w, std::size_t pos, std::initializer_list<int> mid) {
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), mid);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
  return out;
}

std::vector<int> splice_group(const std::vector<int>& w, std::size_t pos, int g) {
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  if (g != 0) out.push_back(ReductionWord::group(g));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
  return out;
}

}  // namespace

WordSum reduce_at(const std::vector<int>& w, std::size_t pos, const KappaMap& kappa, const PbwData& d, bool& applied) {
  WordSum out;
  applied = false;
  if (pos + 1 >= w.size() || !is_redex(w[pos], w[pos + 1])) return out;
  applied = true;
  int a = w[pos], b = w[pos + 1];
  if (a < 0 && b >= 0) {
    int g = -a - 1;
    for (const auto& [k, c] : d.action.row(g, b)) add_word(out, splice(w, pos, {k, a}), c);
  } else if (a < 0) {
    int g = -a - 1, h = -b - 1;
    add_word(out, splice_group(w, pos, d.action.group()->mul(g, h)), d.alpha(g, h));
  } else {
    int j = a, i = b;
    add_word(out, splice(w, pos, {i, j}), d.q(j, i));
    for (const auto& [g, c] : kappa.value(j, i, d.q)) add_word(out, splice_group(w, pos, g), c);
  }
  return out;
}

SkewSum normal_form_reduce(const WordSum& input, const KappaMap& kappa, const PbwData& d, Strategy strategy) {
  WordSum work = input;
  SkewSum result;
  const int n = d.action.n();
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const std::vector<int>& w = node.key();
    const Cyclotomic& coef = node.mapped();
    std::ptrdiff_t pos = -1;
    if (w.size() >= 2) {
      if (strategy == Strategy::leftmost) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
          if (is_redex(w[p], w[p + 1])) { pos = static_cast<std::ptrdiff_t>(p); break; }
      } else {
        for (std::size_t p = w.size() - 1; p-- > 0;)
          if (is_redex(w[p], w[p + 1])) { pos = static_cast<std::ptrdiff_t>(p); break; }
      }
    }
    if (pos < 0) {
      Exponent e(n, 0);
      int g = 0;
      for (int letter : w) {
        if (letter >= 0) ++e[letter];
        else g = -letter - 1;
      }
      skew_add_term(result, e, g, coef);
      continue;
    }
    bool applied = false;
    for (const auto& [nw, c] : reduce_at(w, static_cast<std::size_t>(pos), kappa, d, applied)) add_word(work, nw, c * coef);
  }
  return result;
}

SkewSum normal_form_reduce(const ReductionWord& w, const KappaMap& kappa, const PbwData& d, Strategy strategy) {
  std::vector<int> letters;
  for (int l : w.letters) {
    if (l >= d.action.n()) throw ValidationError("variable index out of range");
    if (l < 0 && -l - 1 >= d.action.group()->size()) throw ValidationError("group element out of range");
    if (l != ReductionWord::group(0)) letters.push_back(l);
  }
  WordSum s;
  add_word(s, std::move(letters), w.coefficient);
  return normal_form_reduce(s, kappa, d, strategy);
}

std::string word_to_string(const std::vector<int>& word, const FiniteGroup& group) {
  std::string out;
  for (int l : word) {
    if (!out.empty()) out += "*";
    out += l >= 0 ? "v" + std::to_string(l + 1) : "t" + group.label(-l - 1);
  }
  return out.empty() ? "1" : out;
}

AmbiguityReport verify_ambiguities(const KappaMap& kappa, const PbwData& d, const AmbiguityOptions& opt) {
  const FiniteGroup& grp = *d.action.group();
  const int n = d.action.n();
  const int size = grp.size();
  AmbiguityReport rep;

  auto resolve = [&](const char* family, const std::vector<int>& w) {
    ++rep.checked;
    bool applied = false;
    SkewSum left = normal_form_reduce(reduce_at(w, 0, kappa, d, applied), kappa, d, opt.strategy);
    SkewSum right = normal_form_reduce(reduce_at(w, 1, kappa, d, applied), kappa, d, opt.strategy);
    if (left == right) return;
    SkewSum diff = left;
    for (const auto& [key, c] : right) skew_add_term(diff, key.first, key.second, -c);
    if (diff.empty()) return;
    rep.resolvable = false;
    ++rep.failures;
    ++rep.failures_by_family[family];
    if (rep.witnesses.size() < opt.max_witnesses)
      rep.witnesses.push_back({family, w, skew_to_string(diff, grp)});
  };

  using W = ReductionWord;
  if (opt.group_families) {
    for (int g = 1; g < size; ++g)
      for (int h = 1; h < size; ++h) {
        for (int k = 1; k < size; ++k) resolve("ttt", {W::group(g), W::group(h), W::group(k)});
        for (int i = 0; i < n; ++i) resolve("ttv", {W::group(g), W::group(h), W::variable(i)});
      }
  }
  for (int h = 1; h < size; ++h)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) resolve("tvv", {W::group(h), W::variable(j), W::variable(i)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) resolve("vvv", {W::variable(k), W::variable(j), W::variable(i)});
  return rep;
}

}  // namespace tqdh
