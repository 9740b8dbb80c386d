#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tqdh/cocycle.hpp"
#include "tqdh/cyclotomic.hpp"
#include "tqdh/group.hpp"

namespace tqdh {

/// Element of the Clifford algebra Cl_n with e_i^2 = 1 and e_i e_j = -e_j e_i.
/// Blades are bitmasks over 0-based generator indices.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n) : n_(n) {}
  static CliffordElement scalar(int n, const Cyclotomic& c);
  /// e_i, 0-based.
  static CliffordElement generator(int n, int i);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::map<std::uint32_t, Cyclotomic>& terms() const { return terms_; }
  void add_term(std::uint32_t blade, const Cyclotomic& c);
  [[nodiscard]] bool is_scalar() const;
  /// Coefficient of the empty blade.
  [[nodiscard]] Cyclotomic scalar_part() const;
  [[nodiscard]] std::string to_string() const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Cyclotomic& c);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Cyclotomic& c) { return a *= c; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

 private:
  int n_ = 0;
  std::map<std::uint32_t, Cyclotomic> terms_;
};

/// Sign of e_S e_T = sign * e_{S xor T}.
int blade_sign(std::uint32_t s, std::uint32_t t);

/// A Clifford element times sqrt(2)^power. Products of transposition lifts
/// stay in this form with rational coefficients, which keeps the spin
/// computations out of Q(zeta_8).
struct SpinElement {
  CliffordElement body;
  int sqrt2_power = 0;

  [[nodiscard]] CliffordElement value() const;
  /// Folds powers of 2 into the body so that sqrt2_power is 0 or -1.
  [[nodiscard]] SpinElement normalized() const;
  friend SpinElement operator*(const SpinElement& a, const SpinElement& b);
  friend bool operator==(const SpinElement& a, const SpinElement& b);
};

SpinElement spin_scalar(int n, int c);
SpinElement spin_z(int n);  // z acts as -1
SpinElement spin_negate(const SpinElement& x);

/// [rs] = (e_r - e_s)/sqrt(2) for distinct 0-based r, s. Throws ValidationError on r = s.
SpinElement transposition_lift(int r, int s, int n);
/// t_r = [r r+1]
SpinElement presentation_generator(int r, int n);
/// [rs] by the recursion [r r+1] = t_r, [rs] = t_r [r+1 s] t_r z (r < s-1), [rs] = [sr] z (r > s).
SpinElement transposition_lift_recursive(int r, int s, int n);
/// u_sigma: per cycle (a1 ... ak) from its least point, [a1 ak] ... [a1 a2]; cycles by least point.
SpinElement section_u(const Permutation& sigma);
/// Reverse product of the same lifts; each lift is an involution.
SpinElement section_u_inverse(const Permutation& sigma);
/// x y x^-1
SpinElement conjugate(const SpinElement& x, const SpinElement& x_inv, const SpinElement& y);

/// Number of the inequalities min{r,s} > min{r',s'}, r > s, r' > s' that hold.
/// Throws ValidationError on repeated indices.
int inequality_count(int r, int s, int rp, int sp);

/// alpha(sigma, tau) from u_sigma u_tau u_{sigma tau}^-1 = +-1; throws
/// InternalError when the product is not a scalar +-1.
int spin_alpha(const Permutation& sigma, const Permutation& tau);
/// Full table on a symmetric group built with FiniteGroup::symmetric(n).
Cocycle spin_cocycle(const GroupPtr& sn);

struct CoverFamily {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> witnesses = {};
  [[nodiscard]] bool passed() const { return failed == 0; }
};

struct CoverReport {
  int n = 0;
  bool exhaustive = false;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<CoverFamily> families;
  [[nodiscard]] bool passed() const;
};

/// Exhaustive for n <= 4, otherwise `samples` random tuples per family.
CoverReport verify_cover(int n, long samples = 500, std::uint64_t seed = 1);

}  // namespace tqdh
