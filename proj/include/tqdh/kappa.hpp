#pragma once

#include <vector>

#include "tqdh/cocycle.hpp"
#include "tqdh/exact_matrix.hpp"
#include "tqdh/quantum_algebra.hpp"

namespace tqdh {

/// Index of the pair i < j among the n(n-1)/2 pairs in lexicographic order.
int pair_index(int n, int i, int j);
int pair_count(int n);

/// Bilinear map kappa: V x V -> C^alpha G, stored on pairs i < j. The value on
/// j > i is kappa(v_j, v_i) = -q_ji kappa(v_i, v_j) and the diagonal is 0.
class KappaMap {
 public:
  KappaMap() = default;
  KappaMap(int n, int group_size);
  /// Coordinates indexed by g * pair_count(n) + pair_index(i, j).
  static KappaMap from_coordinates(int n, int group_size, const DenseVec& coords);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int group_size() const { return group_size_; }
  [[nodiscard]] int dimension() const { return group_size_ * pair_count(n_); }
  [[nodiscard]] int coordinate(int g, int i, int j) const { return g * pair_count(n_) + pair_index(n_, i, j); }

  /// kappa(v_i, v_j) for i < j.
  [[nodiscard]] const TgaElement& upper(int i, int j) const { return upper_[pair_index(n_, i, j)]; }
  void set_upper(int i, int j, TgaElement value);
  /// kappa(v_i, v_j) for any i, j.
  [[nodiscard]] TgaElement value(int i, int j, const QMatrix& q) const;
  /// kappa_g(v_i, v_j) for any i, j.
  [[nodiscard]] Cyclotomic component(int g, int i, int j, const QMatrix& q) const;

  [[nodiscard]] DenseVec coordinates() const;
  [[nodiscard]] SparseVec sparse_coordinates() const;
  [[nodiscard]] bool is_zero() const;
  /// Group elements carrying a nonzero coefficient somewhere.
  [[nodiscard]] std::vector<bool> support() const;

  KappaMap& operator*=(const Cyclotomic& c);
  KappaMap& operator+=(const KappaMap& o);

 private:
  int n_ = 0;
  int group_size_ = 0;
  std::vector<TgaElement> upper_;
};

bool same_kappa_span(const std::vector<KappaMap>& a, const std::vector<KappaMap>& b);
int kappa_rank(const std::vector<KappaMap>& a);

}  // namespace tqdh
