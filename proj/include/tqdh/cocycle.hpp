#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tqdh/cyclotomic.hpp"
#include "tqdh/group.hpp"

namespace tqdh {

/// Dense table of a 2-cocycle alpha: G x G -> Q(zeta)^x.
class Cocycle {
 public:
  Cocycle() = default;
  Cocycle(GroupPtr group, std::vector<Cyclotomic> values, std::string name = "table");

  static Cocycle trivial(GroupPtr group);
  /// alpha(a, b) = prod_{p,q} zeta_{gcd(m_p, m_q)}^{E[p][q] a_p b_q} on a product of cyclic groups.
  static Cocycle bicharacter(GroupPtr group, const std::vector<std::vector<int>>& exponents);

  [[nodiscard]] const GroupPtr& group() const { return group_; }
  [[nodiscard]] const Cyclotomic& operator()(int g, int h) const {
    return values_[static_cast<std::size_t>(g) * group_->size() + h];
  }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// True when every value is 1.
  [[nodiscard]] bool is_trivial() const { return trivial_; }

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
  std::string name_;
  bool trivial_ = false;
};

struct CommutingInvariant {
  int g;
  int h;
  Cyclotomic beta;  // alpha(g,h)/alpha(h,g)
};

struct CocycleReport {
  bool normalized = true;
  bool cocycle = true;
  bool nonzero = true;
  std::optional<int> bad_normalization;
  std::optional<std::array<int, 3>> bad_triple;
  std::vector<CommutingInvariant> commuting;  // pairs g < h that commute
};

CocycleReport validate_cocycle(const Cocycle& alpha, bool with_invariants = true);

/// Sum of c_g t_g in the twisted group algebra.
using TgaElement = std::map<int, Cyclotomic>;

void tga_add_term(TgaElement& x, int g, const Cyclotomic& c);
TgaElement tga_basis(int g, const Cyclotomic& c = Cyclotomic(1));
TgaElement tga_multiply(const TgaElement& x, const TgaElement& y, const Cocycle& alpha);
/// (t_g)^-1 = alpha(g, g^-1)^-1 t_{g^-1}
TgaElement tga_inverse_basis(int g, const Cocycle& alpha);
/// t_g -> alpha(h,g)/alpha(hgh^-1,h) t_{hgh^-1}, extended linearly.
TgaElement twisted_conjugate(int h, const TgaElement& x, const Cocycle& alpha);
/// Scalar such that t_h t_g t_h^-1 = c t_{hgh^-1}.
Cyclotomic twisted_conjugate_factor(int h, int g, const Cocycle& alpha);
TgaElement tga_scale(const TgaElement& x, const Cyclotomic& c);
TgaElement tga_sum(const TgaElement& a, const TgaElement& b);
bool tga_equal(const TgaElement& a, const TgaElement& b);

}  // namespace tqdh
