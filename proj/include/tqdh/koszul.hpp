#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tqdh/kappa.hpp"
#include "tqdh/pbw.hpp"

namespace tqdh {

/// Subset of {0..n-1} as a bit mask; bit i set means v_i^* occurs.
using Wedge = std::uint32_t;

int wedge_weight(Wedge b);
Wedge wedge_of(std::initializer_list<int> indices);
std::string wedge_to_string(Wedge b);

/// Element of (S_q(V) #_alpha G) (x) Lambda^m_{q^-1}(V^*) as terms
/// v^gamma t_g (x) (v^*)^{wedge beta}.
class CochainVector {
 public:
  using Key = std::tuple<Exponent, int, Wedge>;

  CochainVector() = default;
  CochainVector(int n, int degree) : n_(n), degree_(degree) {}

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::map<Key, Cyclotomic>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// True when every gamma is zero.
  [[nodiscard]] bool is_constant() const;

  void add(const Exponent& gamma, int g, Wedge beta, const Cyclotomic& c);
  /// Adds c t_g (x) v_r^* ^ v_s^*, reordering when r > s.
  void add_constant(int g, int r, int s, const Cyclotomic& c, const QMatrix& q);
  /// Coefficient of t_g (x) v_r^* ^ v_s^*, r < s, in a constant 2-cochain.
  [[nodiscard]] Cyclotomic constant_coefficient(int g, int r, int s) const;

  /// Constant 2-cochains as coordinates g * pair_count(n) + pair_index(r, s).
  [[nodiscard]] SparseVec constant_coordinates() const;
  static CochainVector from_constant_coordinates(int n, const DenseVec& v);

  [[nodiscard]] std::string to_string(const FiniteGroup& group) const;

  bool operator==(const CochainVector& o) const { return n_ == o.n_ && degree_ == o.degree_ && terms_ == o.terms_; }

 private:
  int n_ = 0;
  int degree_ = 0;
  std::map<Key, Cyclotomic> terms_;
};

/// Throws ValidationError unless the action extends to both S_q(V) and Lambda_q(V).
void require_koszul_extension(const GroupAction& action, const QMatrix& q);

/// d_m^* applied to a cochain of degree m-1.
CochainVector apply_dm_star(const CochainVector& x, const GroupAction& action, const QMatrix& q);

/// Kernel of d_3^* on constant 2-cochains, one basis list per group element
/// (concatenated in order of g).
std::vector<CochainVector> constant_cocycle_basis(const GroupAction& action, const QMatrix& q);

/// Same kernel restricted to a single group element g.
std::vector<CochainVector> constant_cocycle_basis_for(int g, const GroupAction& action, const QMatrix& q);

/// g applied to a constant 2-cochain: (g eta)(x) = g.(eta(g^-1 x)), with the
/// group acting on C^alpha G by twisted conjugation.
CochainVector act_on_cochain(int g, const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                             const Cocycle& alpha);

/// (1/|G|) sum_g g.eta on constant 2-cochains.
CochainVector reynolds_project(const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                               const Cocycle& alpha);
bool is_invariant(const CochainVector& eta, const GroupAction& action, const QMatrix& q, const Cocycle& alpha);

/// mu_1(v_i, v_j) = (1/|G|) sum_g g.( sum_{k<l} (g^-1)^i_k (g^-1)^j_l eta(v_k ^ v_l) ).
/// With require_invariant the input must be fixed by reynolds_project.
TgaElement induced_cocycle_eval(const CochainVector& eta, int i, int j, const GroupAction& action, const QMatrix& q,
                                const Cocycle& alpha, bool require_invariant = true);

/// mu_1 on all ordered pairs, indexed [i][j].
using PairTable = std::vector<std::vector<TgaElement>>;
PairTable induced_cocycle_table(const CochainVector& eta, const GroupAction& action, const QMatrix& q,
                                const Cocycle& alpha, bool require_invariant = true);

/// kappa(v_i, v_j) = mu(v_i, v_j) - q_ij mu(v_j, v_i).
KappaMap skew_symmetrize(const PairTable& mu, const QMatrix& q, int group_size);

/// Maximal independent subset of the Reynolds images of the constant cocycle basis.
std::vector<CochainVector> invariant_constant_cocycles(const GroupAction& action, const QMatrix& q, const Cocycle& alpha);

/// Parameter space through the Hochschild pipeline.
std::vector<KappaMap> cohomological_parameter_space(const GroupAction& action, const QMatrix& q, const Cocycle& alpha);

/// Monomial v^gamma t_g of the skew group algebra.
struct SkewMonomial {
  Exponent gamma;
  int g;
};

/// First-order part of the product in H_{q,kappa,alpha}: the component of the
/// normal form of a*b in filtration degree deg(a)+deg(b)-2.
SkewSum deformation_mu1(const SkewMonomial& a, const SkewMonomial& b, const KappaMap& kappa, const PbwData& data);

struct HochschildReport {
  std::size_t triples = 0;
  std::size_t failures = 0;
  std::size_t degree_failures = 0;  // products with terms outside degrees d and d-2
  std::vector<std::string> witnesses;
  [[nodiscard]] bool passed() const { return failures == 0 && degree_failures == 0; }
};

/// Checks a mu(b,c) + mu(a,bc) = mu(ab,c) + mu(a,b) c for mu = deformation_mu1 on
/// all triples of monomials with total polynomial degree <= max_degree, group
/// parts drawn from `group_elements`.
HochschildReport check_hochschild_identity(const KappaMap& kappa, const PbwData& data, int max_degree,
                                           const std::vector<int>& group_elements, std::size_t max_witnesses = 5);

}  // namespace tqdh
