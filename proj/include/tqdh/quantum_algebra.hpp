#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tqdh/cocycle.hpp"
#include "tqdh/cyclotomic.hpp"
#include "tqdh/exact_matrix.hpp"
#include "tqdh/group.hpp"

namespace tqdh {

/// Commutation scalars q_ij with q_ii = 1 and q_ji = 1/q_ij. Indices are 0-based.
class QMatrix {
 public:
  QMatrix() = default;
  /// Throws ValidationError when the table violates q_ii = 1 or q_ji q_ij = 1.
  QMatrix(int n, std::vector<Cyclotomic> table);
  /// Every off-diagonal entry equal to value (which must be 1 or -1).
  static QMatrix constant(int n, const Cyclotomic& value);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Cyclotomic& operator()(int i, int j) const { return q_[static_cast<std::size_t>(i) * n_ + j]; }
  /// q_ij^e, with e possibly negative.
  [[nodiscard]] Cyclotomic power(int i, int j, long e) const;
  [[nodiscard]] bool all_equal(const Cyclotomic& value) const;

 private:
  int n_ = 0;
  std::vector<Cyclotomic> q_;
};

using Exponent = std::vector<int>;
/// Element of S_q(V): normally ordered monomials v^gamma with coefficients.
using Poly = std::map<Exponent, Cyclotomic>;
/// Element of S_q(V) #_alpha G: terms v^gamma t_g.
using SkewSum = std::map<std::pair<Exponent, int>, Cyclotomic>;

void poly_add_term(Poly& p, const Exponent& e, const Cyclotomic& c);
void skew_add_term(SkewSum& p, const Exponent& e, int g, const Cyclotomic& c);
Exponent unit_exponent(int n, int i);
Poly variable(int n, int i);

/// v^gamma v^delta = (prod_{i>j} q_ij^{gamma_i delta_j}) v^{gamma+delta}
Cyclotomic qsym_factor(const QMatrix& q, const Exponent& gamma, const Exponent& delta);
Poly qsym_multiply(const Poly& a, const Poly& b, const QMatrix& q);
/// Monomials as v1^2*v3, "1" for the empty exponent.
std::string exponent_to_string(const Exponent& e);
std::string poly_to_string(const Poly& p);
std::string skew_to_string(const SkewSum& p, const FiniteGroup& group);

/// All exponents of total degree d, in lexicographic order.
std::vector<Exponent> monomials_of_degree(int n, int d);

/// Linear action with g.v_i = sum_k g^i_k v_k, stored for every group element.
class GroupAction {
 public:
  /// One n x n matrix per generator of the group, entry [i][k] = s^i_k.
  /// Extends to all elements with M_{gs} = M_s M_g and throws
  /// ValidationError if two words for the same element disagree.
  static GroupAction from_generators(GroupPtr group, int n, const std::vector<std::vector<std::vector<Cyclotomic>>>& mats);
  /// g.v_i = v_{g(i)} for a permutation group.
  static GroupAction natural_permutation(GroupPtr group);
  /// One eigenvalue row per generator.
  static GroupAction diagonal(GroupPtr group, const std::vector<std::vector<Cyclotomic>>& lambda);

  [[nodiscard]] const GroupPtr& group() const { return group_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Cyclotomic& entry(int g, int i, int k) const {
    return dense_[(static_cast<std::size_t>(g) * n_ + i) * n_ + k];
  }
  /// Nonzero (k, g^i_k).
  [[nodiscard]] const SparseVec& row(int g, int i) const { return rows_[static_cast<std::size_t>(g) * n_ + i]; }
  [[nodiscard]] bool is_diagonal() const { return diagonal_; }
  /// Requires is_diagonal().
  [[nodiscard]] const Cyclotomic& lambda(int g, int i) const { return entry(g, i, i); }
  /// Permutation of the basis when every row has one entry equal to 1, else empty.
  [[nodiscard]] bool is_monomial() const { return monomial_; }

  [[nodiscard]] Poly act_variable(int g, int i) const;
  [[nodiscard]] Poly act(int g, const Poly& p, const QMatrix& q) const;

 private:
  void finish();

  GroupPtr group_;
  int n_ = 0;
  std::vector<Cyclotomic> dense_;
  std::vector<SparseVec> rows_;
  bool diagonal_ = false;
  bool monomial_ = false;
};

/// (a t_g)(b t_h) = alpha(g,h) a (g.b) t_{gh}
SkewSum skew_multiply(const SkewSum& a, const SkewSum& b, const GroupAction& action, const QMatrix& q,
                      const Cocycle& alpha);

struct ExtensionReport {
  bool symmetric = true;
  bool exterior = true;
  std::vector<std::string> witnesses;
};

ExtensionReport check_action_extends(const GroupAction& action, const QMatrix& q, std::size_t max_witnesses = 5);

/// g^j_l g^i_k - q_ji g^i_l g^j_k
Cyclotomic quantum_minor(const GroupAction& action, const QMatrix& q, int g, int i, int j, int k, int l);

}  // namespace tqdh
