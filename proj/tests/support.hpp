#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "tqdh/cyclotomic.hpp"

namespace testing_support {

using Complex = std::complex<long double>;

// Floating-point image of an exact scalar; used only as an independent check.
inline Complex to_complex(const tqdh::Cyclotomic& x) {
  if (x.is_rational()) return Complex(x.rational().to_mpq().get_d(), 0);
  const auto c = x.coefficients();
  const long double pi = std::acos(-1.0L);
  Complex s = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    s += static_cast<long double>(c[k].to_mpq().get_d()) * std::polar(1.0L, 2 * pi * k / x.order());
  return s;
}

inline bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-9L * (1 + std::abs(a) + std::abs(b)); }

inline tqdh::Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return tqdh::Rational(num(rng), den(rng));
}

// Random element of Q(zeta_order) as a sum of a few scaled roots of unity.
inline tqdh::Cyclotomic random_cyclotomic(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> terms(1, 3), power(0, order - 1);
  tqdh::Cyclotomic x;
  int t = terms(rng);
  for (int i = 0; i < t; ++i) x += tqdh::Cyclotomic::root_of_unity(order, power(rng)) * random_rational(rng);
  return x;
}

}  // namespace testing_support
