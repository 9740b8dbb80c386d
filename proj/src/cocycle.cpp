#include "tqdh/cocycle.hpp"

#include <array>
#include <numeric>

#include "tqdh/errors.hpp"

namespace tqdh {

Cocycle::Cocycle(GroupPtr group, std::vector<Cyclotomic> values, std::string name)
    : group_(std::move(group)), values_(std::move(values)), name_(std::move(name)) {
  std::size_t n = group_->size();
  if (values_.size() != n * n) throw ValidationError("cocycle table has wrong dimensions");
  trivial_ = true;
  for (const auto& v : values_) {
    if (v.is_zero()) throw ValidationError("cocycle takes the value 0");
    if (!v.is_one()) trivial_ = false;
  }
}

Cocycle Cocycle::trivial(GroupPtr group) {
  std::size_t n = group->size();
  return Cocycle(std::move(group), std::vector<Cyclotomic>(n * n, Cyclotomic(1)), "trivial");
}

Cocycle Cocycle::bicharacter(GroupPtr group, const std::vector<std::vector<int>>& exponents) {
  if (group->kind() != FiniteGroup::Kind::CyclicProduct)
    throw ValidationError("a bicharacter cocycle needs a product of cyclic groups");
  const auto& m = group->cyclic_orders();
  std::size_t k = m.size();
  if (exponents.size() != k) throw ValidationError("bicharacter exponent matrix has wrong size");
  for (const auto& row : exponents)
    if (row.size() != k) throw ValidationError("bicharacter exponent matrix has wrong size");
  int n = group->size();
  std::vector<Cyclotomic> values(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto da = group->cyclic_digits(a);
    for (int b = 0; b < n; ++b) {
      auto db = group->cyclic_digits(b);
      Cyclotomic v(1);
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
          int r = std::gcd(m[p], m[q]);
          long e = static_cast<long>(exponents[p][q]) * da[p] * db[q];
          if (r > 1 && e % r != 0) v *= Cyclotomic::root_of_unity(r, e);
        }
      values[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  return Cocycle(std::move(group), std::move(values), "bicharacter");
}

CocycleReport validate_cocycle(const Cocycle& alpha, bool with_invariants) {
  CocycleReport rep;
  const auto& g = *alpha.group();
  int n = g.size();
  for (int a = 0; a < n; ++a) {
    if (!alpha(a, 0).is_one() || !alpha(0, a).is_one()) {
      rep.normalized = false;
      rep.bad_normalization = a;
      break;
    }
  }
  if (!alpha.is_trivial()) {
    bool all_rational = true;
    for (int a = 0; a < n && all_rational; ++a)
      for (int b = 0; b < n; ++b)
        if (!alpha(a, b).is_rational()) {
          all_rational = false;
          break;
        }
    for (int a = 0; a < n && rep.cocycle; ++a)
      for (int b = 0; b < n && rep.cocycle; ++b) {
        int ab = g.mul(a, b);
        const Cyclotomic& x = alpha(a, b);
        for (int c = 0; c < n; ++c) {
          bool ok;
          if (all_rational) {
            ok = x.rational() * alpha(ab, c).rational() == alpha(b, c).rational() * alpha(a, g.mul(b, c)).rational();
          } else {
            ok = x * alpha(ab, c) == alpha(b, c) * alpha(a, g.mul(b, c));
          }
          if (!ok) {
            rep.cocycle = false;
            rep.bad_triple = std::array<int, 3>{a, b, c};
            break;
          }
        }
      }
  }
  if (with_invariants) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.commute(a, b)) rep.commuting.push_back({a, b, alpha(a, b) / alpha(b, a)});
  }
  return rep;
}

void tga_add_term(TgaElement& x, int g, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = x.find(g);
  if (it == x.end()) {
    x.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

TgaElement tga_basis(int g, const Cyclotomic& c) {
  TgaElement x;
  tga_add_term(x, g, c);
  return x;
}

TgaElement tga_multiply(const TgaElement& x, const TgaElement& y, const Cocycle& alpha) {
  const auto& g = *alpha.group();
  TgaElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) tga_add_term(out, g.mul(a, b), alpha(a, b) * ca * cb);
  return out;
}

TgaElement tga_inverse_basis(int g, const Cocycle& alpha) {
  int gi = alpha.group()->inv(g);
  return tga_basis(gi, alpha(g, gi).inverse());
}

Cyclotomic twisted_conjugate_factor(int h, int g, const Cocycle& alpha) {
  int c = alpha.group()->conj(h, g);
  return alpha(h, g) / alpha(c, h);
}

TgaElement twisted_conjugate(int h, const TgaElement& x, const Cocycle& alpha) {
  TgaElement out;
  for (const auto& [g, c] : x) tga_add_term(out, alpha.group()->conj(h, g), twisted_conjugate_factor(h, g, alpha) * c);
  return out;
}

TgaElement tga_scale(const TgaElement& x, const Cyclotomic& c) {
  TgaElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, v] : x) out.emplace(g, v * c);
  return out;
}

TgaElement tga_sum(const TgaElement& a, const TgaElement& b) {
  TgaElement out = a;
  for (const auto& [g, v] : b) tga_add_term(out, g, v);
  return out;
}

bool tga_equal(const TgaElement& a, const TgaElement& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.begin();
  for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

}  // namespace tqdh
