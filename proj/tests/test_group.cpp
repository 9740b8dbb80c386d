#include <doctest.h>

#include <set>

#include "tqdh/cocycle.hpp"
#include "tqdh/errors.hpp"
#include "tqdh/group.hpp"
#include "tqdh/spin_cover.hpp"

using namespace tqdh;

namespace {

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// (-1)^(a2*b1) evaluated from the digits, independent of the bicharacter builder
Cyclotomic klein_alpha(const FiniteGroup& g, int a, int b) {
  auto da = g.cyclic_digits(a), db = g.cyclic_digits(b);
  return Cyclotomic((da[1] * db[0]) % 2 ? -1 : 1);
}

std::vector<GroupPtr> small_groups() {
  return {FiniteGroup::cyclic_product({2}), FiniteGroup::cyclic_product({2, 2}), FiniteGroup::cyclic_product({3, 2}),
          FiniteGroup::symmetric(3), FiniteGroup::symmetric(4),
          FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {3, 2, 1, 0}})};
}

}  // namespace

TEST_CASE("group construction") {
  auto c2 = FiniteGroup::cyclic_product({2});
  CHECK(c2->size() == 2);

  auto s5 = FiniteGroup::from_permutations(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  CHECK(s5->size() == factorial(5));
  CHECK(FiniteGroup::symmetric(5)->size() == factorial(5));

  auto v4 = FiniteGroup::cyclic_product({2, 2});
  CHECK(v4->size() == 4);
  for (int a = 1; a < 4; ++a) CHECK(v4->inv(a) == a);

  auto d4 = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  CHECK(d4->size() == 8);
}

TEST_CASE("group axioms and labels") {
  for (const auto& g : small_groups()) {
    const int n = g->size();
    for (int a = 0; a < n; ++a) {
      CHECK(g->mul(0, a) == a);
      CHECK(g->mul(a, 0) == a);
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->find(g->label(a)) == a);
      CHECK(g->find(std::to_string(a)) == a);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
    int total = 0;
    for (const auto& cls : g->conjugacy_classes()) {
      total += static_cast<int>(cls.size());
      // orbit-stabilizer
      CHECK(static_cast<int>(cls.size() * g->centralizer(cls[0]).size()) == n);
    }
    CHECK(total == n);
  }
}

TEST_CASE("permutation conventions") {
  auto s3 = FiniteGroup::symmetric(3);
  int t = s3->find("(1 2)");
  int c = s3->find("(1 2 3)");
  // (st)(i) = s(t(i))
  Permutation st = compose(s3->permutation(t), s3->permutation(c));
  CHECK(s3->mul(t, c) == s3->find_permutation(st));
  CHECK(s3->label(0) == "()");
  CHECK(cycle_string({1, 0, 3, 2}) == "(1 2)(3 4)");
  CHECK(signature({1, 2, 0}) == 0);
  CHECK(signature({1, 0, 2}) == 1);
  CHECK_THROWS_AS((void)s3->find("(1 4)"), ValidationError);
}

TEST_CASE("table groups are validated") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  // not associative: a latin square that is not a group
  std::vector<std::vector<int>> bad = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), ValidationError);
}

TEST_CASE("cocycle validation") {
  for (const auto& g : small_groups()) {
    CocycleReport r = validate_cocycle(Cocycle::trivial(g));
    CHECK(r.normalized);
    CHECK(r.cocycle);
    for (const auto& c : r.commuting) CHECK(c.beta.is_one());
  }

  auto v4 = FiniteGroup::cyclic_product({2, 2});
  Cocycle a = Cocycle::bicharacter(v4, {{0, 0}, {1, 0}});
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(a(x, y) == klein_alpha(*v4, x, y));
  CocycleReport r = validate_cocycle(a);
  CHECK(r.cocycle);
  int e1 = v4->find("(1,0)"), e2 = v4->find("(0,1)");
  bool found = false;
  for (const auto& c : r.commuting)
    if ((c.g == e1 && c.h == e2) || (c.g == e2 && c.h == e1)) {
      CHECK(c.beta == Cyclotomic(-1));
      found = true;
    }
  CHECK(found);

  auto s4 = FiniteGroup::symmetric(4);
  Cocycle spin = spin_cocycle(s4);
  CocycleReport rs = validate_cocycle(spin);
  CHECK(rs.normalized);
  CHECK(rs.cocycle);
  int p = s4->find("(1 2)"), q = s4->find("(3 4)");
  CHECK(spin(p, q) / spin(q, p) == Cyclotomic(-1));

  // break one value and the identity must fail
  auto c3 = FiniteGroup::cyclic_product({3});
  std::vector<Cyclotomic> vals(9, Cyclotomic(1));
  vals[1 * 3 + 2] = Cyclotomic(-1);
  CocycleReport bad = validate_cocycle(Cocycle(c3, vals));
  CHECK_FALSE(bad.cocycle);
  CHECK(bad.bad_triple.has_value());
}

TEST_CASE("twisted group algebra products") {
  auto v4 = FiniteGroup::cyclic_product({2, 2});
  Cocycle a = Cocycle::bicharacter(v4, {{0, 0}, {1, 0}});
  int e1 = v4->find("(1,0)"), e2 = v4->find("(0,1)"), e12 = v4->find("(1,1)");
  for (int g = 0; g < 4; ++g) CHECK(tga_equal(tga_multiply(tga_basis(0), tga_basis(g), a), tga_basis(g)));
  CHECK(tga_equal(tga_multiply(tga_basis(e1), tga_basis(e2), a), tga_basis(e12)));
  CHECK(tga_equal(tga_multiply(tga_basis(e2), tga_basis(e1), a), tga_basis(e12, Cyclotomic(-1))));

  auto s4 = FiniteGroup::symmetric(4);
  Cocycle spin = spin_cocycle(s4);
  for (int g = 0; g < s4->size(); ++g) {
    TgaElement inv = tga_inverse_basis(g, spin);
    CHECK(tga_equal(tga_multiply(tga_basis(g), inv, spin), tga_basis(0)));
    CHECK(tga_equal(tga_multiply(inv, tga_basis(g), spin), tga_basis(0)));
  }
}

TEST_CASE("twisted algebra associativity and conjugation laws") {
  struct Case {
    GroupPtr g;
    Cocycle alpha;
  };
  auto v4 = FiniteGroup::cyclic_product({2, 2});
  auto c4 = FiniteGroup::cyclic_product({4, 2});
  auto s4 = FiniteGroup::symmetric(4);
  std::vector<Case> cases = {{v4, Cocycle::bicharacter(v4, {{0, 0}, {1, 0}})},
                             {c4, Cocycle::bicharacter(c4, {{1, 1}, {0, 1}})},
                             {s4, spin_cocycle(s4)}};
  for (const auto& [g, alpha] : cases) {
    REQUIRE(validate_cocycle(alpha).cocycle);
    const int n = g->size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          auto lhs = tga_multiply(tga_multiply(tga_basis(x), tga_basis(y), alpha), tga_basis(z), alpha);
          auto rhs = tga_multiply(tga_basis(x), tga_multiply(tga_basis(y), tga_basis(z), alpha), alpha);
          CHECK(tga_equal(lhs, rhs));
        }
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < n; ++x) {
        // oracle: t_h t_x t_h^-1 by three products
        auto direct = tga_multiply(tga_multiply(tga_basis(h), tga_basis(x), alpha), tga_inverse_basis(h, alpha), alpha);
        CHECK(tga_equal(twisted_conjugate(h, tga_basis(x), alpha), direct));
        for (int k = 0; k < n; ++k) {
          auto two = twisted_conjugate(k, twisted_conjugate(h, tga_basis(x), alpha), alpha);
          CHECK(tga_equal(two, twisted_conjugate(g->mul(k, h), tga_basis(x), alpha)));
        }
      }
    for (int h = 0; h < n; h += 3)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; y += 2) {
          auto prod = tga_multiply(tga_basis(x), tga_basis(y), alpha);
          auto lhs = twisted_conjugate(h, prod, alpha);
          auto rhs = tga_multiply(twisted_conjugate(h, tga_basis(x), alpha), twisted_conjugate(h, tga_basis(y), alpha),
                                  alpha);
          CHECK(tga_equal(lhs, rhs));
        }
    for (const auto& c : validate_cocycle(alpha).commuting) {
      Cyclotomic back = alpha(c.h, c.g) / alpha(c.g, c.h);
      CHECK((c.beta * back).is_one());
    }
  }
  auto s3 = FiniteGroup::symmetric(3);
  Cocycle triv = Cocycle::trivial(s3);
  for (int h = 0; h < 6; ++h) {
    CHECK(tga_equal(twisted_conjugate(0, tga_basis(h), triv), tga_basis(h)));
    for (int g = 0; g < 6; ++g) CHECK(tga_equal(twisted_conjugate(h, tga_basis(g), triv), tga_basis(s3->conj(h, g))));
  }
}
