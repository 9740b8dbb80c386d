#include "tqdh/exact_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tqdh/errors.hpp"

namespace tqdh {

SparseVec make_sparse(std::vector<std::pair<int, Cyclotomic>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [col, val] : terms) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += val;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!val.is_zero()) {
      out.emplace_back(col, std::move(val));
    }
  }
  return out;
}

SparseVec to_sparse(const DenseVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

void SparseMatrix::add_row(SparseVec row) {
  for (const auto& [c, v] : row)
    if (c < 0 || c >= cols) throw InternalError("sparse row column out of range");
  rows.push_back(std::move(row));
}

DenseVec SparseMatrix::apply(const DenseVec& v) const {
  DenseVec out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, val] : rows[r]) out[r] += val * v[c];
  return out;
}

namespace {

// a - s*b for sorted sparse vectors
SparseVec axpy(const SparseVec& a, const Cyclotomic& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(s * b[j].second));
      ++j;
    } else {
      Cyclotomic v = a[i].second - s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec EchelonBasis::reduce(const SparseVec& row) const {
  SparseVec cur = row;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    auto it = rows_.find(cur[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Cyclotomic s = cur[pos].second;
    // entries before pos are untouched because the pivot row starts at cur[pos].first
    cur = axpy(cur, s, it->second);
  }
  return cur;
}

bool EchelonBasis::add(const SparseVec& row) {
  SparseVec r = reduce(row);
  if (r.empty()) return false;
  // The leading entry of r is not a pivot, but later entries may be; reduce()
  // already cleared every pivot column, so r is in echelon-compatible form.
  Cyclotomic inv = r.front().second.inverse();
  for (auto& [c, v] : r) v *= inv;
  int lead = r.front().first;
  rows_.emplace(lead, std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVec& row) const { return reduce(row).empty(); }

std::vector<DenseVec> EchelonBasis::kernel() const {
  // Back-substitute to reduced row echelon form, last pivot first.
  std::map<int, SparseVec> rref;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec cur = it->second;
    std::size_t pos = 1;
    while (pos < cur.size()) {
      auto p = rref.find(cur[pos].first);
      if (p == rref.end()) {
        ++pos;
        continue;
      }
      Cyclotomic s = cur[pos].second;
      cur = axpy(cur, s, p->second);
    }
    rref.emplace(it->first, std::move(cur));
  }
  std::vector<DenseVec> out;
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [p, r] : rref) is_pivot[p] = true;
  std::vector<std::vector<std::pair<int, Cyclotomic>>> by_free(cols_);
  for (const auto& [p, r] : rref)
    for (std::size_t k = 1; k < r.size(); ++k) by_free[r[k].first].emplace_back(p, r[k].second);
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    DenseVec v(cols_);
    v[f] = Cyclotomic(1);
    for (const auto& [p, c] : by_free[f]) v[p] = -c;
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<std::size_t> sparsest_first(const std::vector<SparseVec>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  return order;
}

}  // namespace

std::vector<DenseVec> kernel_basis(const SparseMatrix& m) {
  EchelonBasis basis(m.cols);
  for (std::size_t idx : sparsest_first(m.rows)) {
    basis.add(m.rows[idx]);
    if (basis.rank() == m.cols) break;
  }
  return basis.kernel();
}

int matrix_rank(const std::vector<SparseVec>& rows, int cols) {
  EchelonBasis basis(cols);
  for (std::size_t idx : sparsest_first(rows)) basis.add(rows[idx]);
  return basis.rank();
}

bool same_span(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b, int cols) {
  EchelonBasis ea(cols);
  for (const auto& r : a) ea.add(r);
  EchelonBasis eb(cols);
  for (const auto& r : b) eb.add(r);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& r : b)
    if (!ea.contains(r)) return false;
  return true;
}

}  // namespace tqdh
