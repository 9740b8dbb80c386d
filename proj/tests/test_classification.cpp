#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tqdh/acceptance.hpp"
#include "tqdh/classification.hpp"
#include "tqdh/errors.hpp"

using namespace tqdh;

namespace {

std::set<DiagonalTriple> kernel_triples(const GroupAction& action, const QMatrix& q) {
  std::set<DiagonalTriple> out;
  for (const auto& c : constant_cocycle_basis(action, q)) {
    REQUIRE(c.terms().size() == 1);
    const auto& key = c.terms().begin()->first;
    Wedge b = std::get<2>(key);
    std::vector<int> idx;
    for (int i = 0; i < action.n(); ++i)
      if (b >> i & 1) idx.push_back(i);
    out.insert({std::get<1>(key), idx[0], idx[1]});
  }
  return out;
}

struct RandomDiagonal {
  GroupPtr group;
  GroupAction action;
  QMatrix q;
  Cocycle alpha;
};

// Diagonal action of Z/2 x Z/2 or Z/4 with eigenvalues and q drawn at random.
RandomDiagonal random_diagonal(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1), four(0, 3);
  const bool klein = coin(rng) == 1;
  GroupPtr g = klein ? FiniteGroup::cyclic_product({2, 2}) : FiniteGroup::cyclic_product({4});
  std::vector<std::vector<Cyclotomic>> lambda;
  for (std::size_t s = 0; s < g->generators().size(); ++s) {
    std::vector<Cyclotomic> row;
    for (int i = 0; i < n; ++i)
      row.push_back(klein ? Cyclotomic(coin(rng) ? -1 : 1) : Cyclotomic::root_of_unity(4, four(rng)));
    lambda.push_back(row);
  }
  std::vector<Cyclotomic> t(static_cast<std::size_t>(n) * n, Cyclotomic(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Cyclotomic c = Cyclotomic::root_of_unity(4, four(rng));
      t[i * n + j] = c;
      t[j * n + i] = c.inverse();
    }
  Cocycle a = klein && coin(rng) ? Cocycle::bicharacter(g, {{0, 0}, {1, 0}}) : Cocycle::trivial(g);
  return {g, GroupAction::diagonal(g, lambda), QMatrix(n, t), a};
}

}  // namespace

TEST_CASE("membership predicate") {
  auto z2 = FiniteGroup::cyclic_product({2});
  auto act = GroupAction::diagonal(z2, {{-1, -1}});
  QMatrix q = QMatrix::constant(2, Cyclotomic(-1));
  CHECK(cg_membership({0, 0}, 0, act, q));
  CHECK(cg_membership({-1, -1}, 1, act, q));
  CHECK_FALSE(cg_membership({0, 0}, 1, act, q));
  CHECK_THROWS_AS(cg_membership({0}, 0, act, q), ValidationError);
}

TEST_CASE("membership predicate matches the pairwise condition") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    RandomDiagonal d = random_diagonal(rng, 3 + t % 2);
    const int n = d.action.n();
    auto basis = diagonal_constant_basis(d.action, d.q);
    std::set<DiagonalTriple> listed(basis.begin(), basis.end());
    for (int g = 0; g < d.group->size(); ++g)
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) {
          std::vector<int> gamma(n, 0);
          gamma[r] = gamma[s] = -1;
          CHECK(cg_membership(gamma, g, d.action, d.q) == (listed.count({g, r, s}) == 1));
        }
    CHECK(listed == kernel_triples(d.action, d.q));
  }
}

TEST_CASE("diagonal constant basis examples") {
  auto v4 = FiniteGroup::cyclic_product({2, 2});
  auto a2 = GroupAction::diagonal(v4, {{-1, 1}, {1, -1}});
  auto b2 = diagonal_constant_basis(a2, QMatrix::constant(2, Cyclotomic(1)));
  CHECK(b2.size() == 4);

  auto z2 = FiniteGroup::cyclic_product({2});
  auto a3 = GroupAction::diagonal(z2, {{-1, -1, 1}});
  QMatrix q = QMatrix::constant(3, Cyclotomic(1));
  auto b3 = diagonal_constant_basis(a3, q);
  std::set<DiagonalTriple> s(b3.begin(), b3.end());
  CHECK(s.count({1, 0, 1}) == 1);
  CHECK(s.count({0, 0, 1}) == 1);
  CHECK(s.count({1, 0, 2}) == 0);
  CHECK(s == kernel_triples(a3, q));
}

TEST_CASE("diagonal maps for the trivial group") {
  auto w = weyl_instance(3);
  auto fs = diagonal_kappa_basis(w.action, w.q, w.alpha);
  CHECK(fs.size() == 3);
  for (const auto& f : fs) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Cyclotomic want = (i == f.r && j == f.s ? Cyclotomic(1) : Cyclotomic(0)) -
                          (i == f.s && j == f.r ? w.q(f.s, f.r) : Cyclotomic(0));
        CHECK(f.kappa.component(0, i, j, w.q) == want);
      }
  }
}

TEST_CASE("diagonal maps agree with the direct solver") {
  auto z2 = z2_negation_instance();
  auto fs = diagonal_kappa_basis(z2.action, z2.q, z2.alpha);
  REQUIRE(fs.size() == 2);
  std::set<int> classes = {fs[0].a, fs[1].a};
  CHECK(classes == std::set<int>{0, 1});

  auto trivial = klein_diagonal_instance(false), twisted = klein_diagonal_instance(true);
  auto ft = diagonal_kappa_basis(trivial.action, trivial.q, trivial.alpha);
  auto fw = diagonal_kappa_basis(twisted.action, twisted.q, twisted.alpha);
  // the cocycle turns on a map that the trivial cocycle forbids
  CHECK(fw.size() > ft.size());

  std::mt19937_64 rng(7);
  std::vector<RandomDiagonal> insts;
  for (int t = 0; t < 25; ++t) insts.push_back(random_diagonal(rng, 2 + t % 3));
  for (const auto& d : insts) {
    std::vector<KappaMap> maps;
    for (auto& f : diagonal_kappa_basis(d.action, d.q, d.alpha)) maps.push_back(f.kappa);
    auto direct = solve_parameter_space(PbwData{d.action, d.q, d.alpha});
    CHECK(maps.size() == direct.size());
    CHECK(same_kappa_span(maps, direct));
  }
}

TEST_CASE("representatives do not matter") {
  for (const auto& inst : {klein_diagonal3_instance(true), klein_diagonal_instance(true), z2_negation_instance()}) {
    auto base = diagonal_kappa_basis(inst.action, inst.q, inst.alpha);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto other = diagonal_kappa_basis(inst.action, inst.q, inst.alpha, seed);
      REQUIRE(other.size() == base.size());
      for (std::size_t k = 0; k < base.size(); ++k)
        CHECK(base[k].kappa.coordinates() == other[k].kappa.coordinates());
    }
  }
}

TEST_CASE("eta families") {
  CHECK(eta_family_count(4) == 35);
  CHECK(eta_family_count(5) == 85);
  for (int n : {4, 5}) {
    auto inst = symmetric_instance(n, false);
    auto fam = eta_family_basis(inst.group);
    CHECK(fam.size() == eta_family_count(n));
    EchelonBasis span(inst.group->size() * pair_count(n));
    for (const auto& e : fam) {
      CHECK(apply_dm_star(e.cochain, inst.action, inst.q).is_zero());
      CHECK(span.add(e.cochain.constant_coordinates()));
    }
    CHECK(span.rank() == static_cast<int>(constant_cocycle_basis(inst.action, inst.q).size()));
  }
  CHECK_THROWS_AS(eta_family_basis(FiniteGroup::symmetric(3)), ValidationError);
}

TEST_CASE("symmetric group, five points, twisted") {
  SymmetricReport r = symmetric_natural_classify(5, true);
  CHECK(r.basis.size() == 2);
  REQUIRE(r.spans_reference.has_value());
  CHECK(*r.spans_reference);
  auto sn = FiniteGroup::symmetric(5);
  QMatrix q = QMatrix::constant(5, Cyclotomic(-1));
  for (const auto& k : r.basis)
    for (int g = 0; g < sn->size(); ++g)
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          if (i != j) CHECK(k.component(g, i, j, q) == k.component(g, j, i, q));

  REQUIRE(r.images.size() == 5);
  CHECK(tga_equal(r.images[0].value12, tga_basis(0, Cyclotomic(Rational(1, 20)))));
  for (int a : {1, 2, 3}) CHECK(r.images[a].value12.empty());
  TgaElement five;
  for (int k : {2, 3, 4}) {
    tga_add_term(five, symmetric_element(*sn, {{0, 1, k}}), Cyclotomic(Rational(1, 30)));
    tga_add_term(five, symmetric_element(*sn, {{0, k, 1}}), Cyclotomic(Rational(1, 60)));
  }
  CHECK(tga_equal(r.images[4].value12, five));
  for (const auto& img : r.images) {
    REQUIRE(img.matches.has_value());
    CHECK_MESSAGE(*img.matches, img.family);
  }
}

TEST_CASE("closed form images against direct evaluation on all pairs") {
  auto inst = symmetric_instance(5, true);
  auto fam = eta_family_basis(inst.group);
  std::set<int> done;
  for (const auto& e : fam) {
    if (!done.insert(e.family).second) continue;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        auto want = expected_family_image(inst.group, e.family, i, j);
        REQUIRE(want.has_value());
        CHECK(tga_equal(induced_cocycle_eval(e.cochain, i, j, inst.action, inst.q, inst.alpha, false), *want));
      }
  }
}

TEST_CASE("untwisted and small cases") {
  SymmetricReport u = symmetric_natural_classify(5, false);
  CHECK(u.basis.size() > 2);
  REQUIRE(u.images.size() >= 2);
  CHECK_FALSE(u.images[1].value12.empty());

  SymmetricReport four = symmetric_natural_classify(4, true);
  CHECK(four.basis.size() == 3);  // computed value, kept as a regression check
  CHECK_FALSE(four.spans_reference.has_value());
  auto s4 = FiniteGroup::symmetric(4);
  CHECK_FALSE(expected_family_image(s4, 3, 0, 1).has_value());
}
