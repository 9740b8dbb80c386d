#include "tqdh/kappa.hpp"

#include "tqdh/errors.hpp"

namespace tqdh {

int pair_index(int n, int i, int j) {
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int pair_count(int n) { return n * (n - 1) / 2; }

KappaMap::KappaMap(int n, int group_size) : n_(n), group_size_(group_size), upper_(pair_count(n)) {}

KappaMap KappaMap::from_coordinates(int n, int group_size, const DenseVec& coords) {
  KappaMap k(n, group_size);
  if (static_cast<int>(coords.size()) != k.dimension()) throw InternalError("kappa coordinate vector has wrong length");
  int p = pair_count(n);
  for (int g = 0; g < group_size; ++g)
    for (int idx = 0; idx < p; ++idx) tga_add_term(k.upper_[idx], g, coords[static_cast<std::size_t>(g) * p + idx]);
  return k;
}

void KappaMap::set_upper(int i, int j, TgaElement value) {
  if (i >= j) throw InternalError("set_upper needs i < j");
  upper_[pair_index(n_, i, j)] = std::move(value);
}

TgaElement KappaMap::value(int i, int j, const QMatrix& q) const {
  if (i == j) return {};
  if (i < j) return upper(i, j);
  return tga_scale(upper(j, i), -q(i, j));
}

Cyclotomic KappaMap::component(int g, int i, int j, const QMatrix& q) const {
  if (i == j) return Cyclotomic();
  const TgaElement& u = i < j ? upper(i, j) : upper(j, i);
  auto it = u.find(g);
  if (it == u.end()) return Cyclotomic();
  return i < j ? it->second : -(q(i, j) * it->second);
}

DenseVec KappaMap::coordinates() const {
  DenseVec v(dimension());
  int p = pair_count(n_);
  for (int idx = 0; idx < p; ++idx)
    for (const auto& [g, c] : upper_[idx]) v[static_cast<std::size_t>(g) * p + idx] = c;
  return v;
}

SparseVec KappaMap::sparse_coordinates() const {
  std::vector<std::pair<int, Cyclotomic>> terms;
  int p = pair_count(n_);
  for (int idx = 0; idx < p; ++idx)
    for (const auto& [g, c] : upper_[idx]) terms.emplace_back(g * p + idx, c);
  return make_sparse(std::move(terms));
}

bool KappaMap::is_zero() const {
  for (const auto& u : upper_)
    if (!u.empty()) return false;
  return true;
}

std::vector<bool> KappaMap::support() const {
  std::vector<bool> s(group_size_, false);
  for (const auto& u : upper_)
    for (const auto& [g, c] : u) s[g] = true;
  return s;
}

KappaMap& KappaMap::operator*=(const Cyclotomic& c) {
  for (auto& u : upper_) u = tga_scale(u, c);
  return *this;
}

KappaMap& KappaMap::operator+=(const KappaMap& o) {
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] = tga_sum(upper_[k], o.upper_[k]);
  return *this;
}

bool same_kappa_span(const std::vector<KappaMap>& a, const std::vector<KappaMap>& b) {
  int dim = !a.empty() ? a[0].dimension() : (!b.empty() ? b[0].dimension() : 0);
  std::vector<SparseVec> ra, rb;
  for (const auto& k : a) ra.push_back(k.sparse_coordinates());
  for (const auto& k : b) rb.push_back(k.sparse_coordinates());
  return same_span(ra, rb, dim);
}

int kappa_rank(const std::vector<KappaMap>& a) {
  if (a.empty()) return 0;
  std::vector<SparseVec> rows;
  for (const auto& k : a) rows.push_back(k.sparse_coordinates());
  return matrix_rank(rows, a[0].dimension());
}

}  // namespace tqdh
