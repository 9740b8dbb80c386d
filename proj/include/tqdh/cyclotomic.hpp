#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tqdh/rational.hpp"

namespace tqdh {

/// Element of the cyclotomic field Q(zeta_N), stored as its remainder modulo
/// the N-th cyclotomic polynomial. Values lying in Q are always stored with
/// N = 1, and N = 2 mod 4 is rewritten to N/2, so the common case of rational
/// arithmetic never touches a polynomial.
///
/// Operands of different orders are combined in Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(std::int64_t value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value) : rat_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients of 1, z, z^2, ... in Q(zeta_order); reduced on construction.
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// zeta_order^k.
  static Cyclotomic root_of_unity(int order, std::int64_t k);
  /// sqrt(2) = zeta_8 - zeta_8^3.
  static const Cyclotomic& sqrt2();

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool is_zero() const { return order_ == 1 && rat_.is_zero(); }
  [[nodiscard]] bool is_one() const { return order_ == 1 && rat_.is_one(); }
  [[nodiscard]] bool is_rational() const { return order_ == 1; }
  /// Only meaningful when is_rational().
  [[nodiscard]] const Rational& rational() const { return rat_; }
  /// Canonical coefficients in Q(zeta_order()), length phi(order()).
  [[nodiscard]] std::vector<Rational> coefficients() const;

  /// Image in Q(zeta_m); m must be a multiple of order().
  [[nodiscard]] std::vector<Rational> embed(int m) const;

  /// Terms "c*zN^k" in increasing k joined by " + ", over the smallest
  /// field containing the value; rationals print as "a/b" or "a".
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string; also accepts "zN^k", "-zN^k", "zN", terms of
  /// mixed N and plain rationals. Throws ValidationError.
  static Cyclotomic parse(std::string_view text);

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  /// Throws DivisionByZeroError.
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  [[nodiscard]] Cyclotomic inverse() const;
  /// Exponent may be negative.
  [[nodiscard]] Cyclotomic pow(std::int64_t e) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void normalize();

  int order_ = 1;
  Rational rat_;               // value when order_ == 1
  std::vector<Rational> poly_;  // length phi(order_) when order_ > 1
};

int euler_phi(int n);

}  // namespace tqdh
