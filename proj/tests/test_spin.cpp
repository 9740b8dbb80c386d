#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tqdh/cocycle.hpp"
#include "tqdh/errors.hpp"
#include "tqdh/group.hpp"
#include "tqdh/spin_cover.hpp"

using namespace tqdh;

namespace {

// Blade product sign by literally moving generators past each other.
int brute_blade_sign(std::uint32_t s, std::uint32_t t) {
  std::vector<int> word;
  for (int i = 0; i < 32; ++i)
    if (s >> i & 1) word.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (t >> i & 1) word.push_back(i);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        moved = true;
      } else if (word[k] == word[k + 1]) {
        word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
        moved = true;
      }
    }
  }
  return sign;
}

// Lifts computed directly in Q(zeta_8), without SpinElement bookkeeping.
CliffordElement lift(int r, int s, int n) {
  return (CliffordElement::generator(n, r) - CliffordElement::generator(n, s)) * Cyclotomic::sqrt2().inverse();
}

CliffordElement u_direct(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  CliffordElement u = CliffordElement::scalar(n, Cyclotomic(1));
  std::vector<bool> seen(n, false);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<int> cyc;
    for (int x = a; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    for (std::size_t k = cyc.size(); k-- > 1;) u = u * lift(cyc[0], cyc[k], n);
  }
  return u;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Permutation transposition(int n, int a, int b) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

TEST_CASE("clifford products") {
  auto e1 = CliffordElement::generator(3, 0), e2 = CliffordElement::generator(3, 1);
  CliffordElement e12(3);
  e12.add_term(0b011, Cyclotomic(1));
  CHECK(e1 * e2 == e12);
  CHECK(e2 * e1 == e12 * Cyclotomic(-1));
  CliffordElement d = e1 - e2;
  CHECK(d * d == CliffordElement::scalar(3, Cyclotomic(2)));
  for (std::uint32_t s = 0; s < 32; ++s)
    for (std::uint32_t t = 0; t < 32; ++t) CHECK(blade_sign(s, t) == brute_blade_sign(s, t));
}

TEST_CASE("transposition lifts") {
  const int n = 5;
  for (int r = 0; r + 1 < n; ++r) CHECK(transposition_lift(r, r + 1, n).value() == lift(r, r + 1, n));
  CHECK(transposition_lift(1, 0, n) == spin_negate(transposition_lift(0, 1, n)));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (r == s) continue;
      CHECK(transposition_lift_recursive(r, s, n) == transposition_lift(r, s, n));
      auto sq = transposition_lift(r, s, n) * transposition_lift(r, s, n);
      CHECK(sq.value() == CliffordElement::scalar(n, Cyclotomic(1)));
    }
  CHECK(transposition_lift_recursive(0, 2, n).value() == lift(0, 2, n));
  CHECK_THROWS_AS(transposition_lift(2, 2, n), ValidationError);
}

TEST_CASE("section examples") {
  CHECK(section_u({0, 1, 2, 3}).value() == CliffordElement::scalar(4, Cyclotomic(1)));
  // (1 3 2): 1 -> 3 -> 2 -> 1
  CHECK(section_u({2, 0, 1}) == transposition_lift(0, 1, 3) * transposition_lift(0, 2, 3));
  CHECK(section_u({1, 0, 3, 2}) == transposition_lift(0, 1, 4) * transposition_lift(2, 3, 4));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    Permutation p = random_perm(6, rng);
    CHECK(section_u(p).value() == u_direct(p));
    CHECK((section_u(p) * section_u_inverse(p)).value() == CliffordElement::scalar(6, Cyclotomic(1)));
  }
}

TEST_CASE("spin cocycle values") {
  const Permutation id4 = {0, 1, 2, 3};
  const Permutation t12 = transposition(4, 0, 1), t34 = transposition(4, 2, 3);
  CHECK(spin_alpha(t12, t34) == 1);
  CHECK(spin_alpha(t34, t12) == -1);
  CHECK(spin_alpha(t12, t12) == 1);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) CHECK(spin_alpha(random_perm(4, rng), id4) == 1);

  for (int n = 4; n <= 7; ++n) {
    Permutation a = transposition(n, 0, 1), b = transposition(n, 2, 3);
    CHECK(spin_alpha(a, b) * spin_alpha(b, a) == -1);
  }
}

TEST_CASE("spin cocycle against the direct clifford oracle") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + t % 4;
    Permutation s = random_perm(n, rng), u = random_perm(n, rng);
    CliffordElement lhs = u_direct(s) * u_direct(u);
    CliffordElement rhs = u_direct(compose(s, u));
    int a = spin_alpha(s, u);
    CHECK((a == 1 || a == -1));
    CHECK(lhs == rhs * Cyclotomic(a));
  }
}

TEST_CASE("full spin tables are normalized cocycles") {
  for (int n : {3, 4, 5}) {
    auto sn = FiniteGroup::symmetric(n);
    Cocycle alpha = spin_cocycle(sn);
    for (int a = 0; a < sn->size(); ++a)
      for (int b = 0; b < sn->size(); ++b) {
        const Cyclotomic& v = alpha(a, b);
        CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
      }
    CocycleReport r = validate_cocycle(alpha);
    CHECK(r.normalized);
    CHECK(r.cocycle);
  }
}

TEST_CASE("conjugating a lift gives plus or minus the permuted lift") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = 5;
    Permutation p = random_perm(n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int r = pick(rng), s = pick(rng);
    if (r == s) continue;
    SpinElement c = conjugate(section_u(p), section_u_inverse(p), transposition_lift(r, s, n));
    CliffordElement image = lift(p[r], p[s], n);
    CHECK((c.value() == image || c.value() == image * Cyclotomic(-1)));
  }
}

TEST_CASE("inequality counts") {
  CHECK(inequality_count(1, 2, 3, 4) == 0);
  CHECK(inequality_count(3, 4, 1, 2) == 1);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    Permutation p = random_perm(6, rng);
    int r = p[0], s = p[1], rp = p[2], sp = p[3];
    CHECK(std::abs(inequality_count(r, s, rp, sp) - inequality_count(r, s, sp, rp)) == 1);
  }
  CHECK_THROWS_AS(inequality_count(1, 1, 2, 3), ValidationError);
}

TEST_CASE("cover verification") {
  CoverReport four = verify_cover(4);
  CHECK(four.exhaustive);
  CHECK(four.passed());
  bool braid = false;
  for (const auto& f : four.families) {
    CHECK_MESSAGE(f.passed(), f.name);
    CHECK(f.checked > 0);
    braid = braid || f.name == "t_r t_{r+1} t_r = t_{r+1} t_r t_{r+1}";
  }
  CHECK(braid);

  CoverReport five = verify_cover(5, 500, 3);
  CHECK_FALSE(five.exhaustive);
  CHECK(five.passed());
  for (const auto& f : five.families) CHECK_MESSAGE(f.passed(), f.name);
  CHECK_THROWS_AS(verify_cover(3), ValidationError);
}
