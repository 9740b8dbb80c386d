#include <doctest.h>

#include <random>

#include "tqdh/errors.hpp"
#include "tqdh/quantum_algebra.hpp"

using namespace tqdh;

namespace {

Cyclotomic zeta(int n, int k) { return Cyclotomic::root_of_unity(n, k); }

QMatrix table(int n, const std::vector<std::pair<std::pair<int, int>, Cyclotomic>>& upper) {
  std::vector<Cyclotomic> t(static_cast<std::size_t>(n) * n, Cyclotomic(1));
  for (const auto& [ij, c] : upper) {
    t[ij.first * n + ij.second] = c;
    t[ij.second * n + ij.first] = c.inverse();
  }
  return QMatrix(n, t);
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Instance {
  GroupAction action;
  QMatrix q;
  Cocycle alpha;
};

std::vector<Instance> extending_instances() {
  std::vector<Instance> out;
  auto s3 = FiniteGroup::symmetric(3);
  out.push_back({GroupAction::natural_permutation(s3), QMatrix::constant(3, Cyclotomic(-1)), Cocycle::trivial(s3)});
  out.push_back({GroupAction::natural_permutation(s3), QMatrix::constant(3, Cyclotomic(1)), Cocycle::trivial(s3)});
  auto c3 = FiniteGroup::cyclic_product({3});
  out.push_back({GroupAction::from_generators(c3, 2, {{{0, 1}, {-1, -1}}}), QMatrix::constant(2, Cyclotomic(1)),
                 Cocycle::trivial(c3)});
  auto v4 = FiniteGroup::cyclic_product({2, 2});
  out.push_back({GroupAction::diagonal(v4, {{-1, 1, -1}, {1, -1, -1}}),
                 table(3, {{{0, 1}, zeta(3, 1)}, {{0, 2}, zeta(4, 1)}, {{1, 2}, -1}}),
                 Cocycle::bicharacter(v4, {{0, 0}, {1, 0}})});
  return out;
}

SkewSum basis_element(int n, const Exponent& e, int g) {
  SkewSum s;
  skew_add_term(s, e.empty() ? Exponent(n, 0) : e, g, Cyclotomic(1));
  return s;
}

}  // namespace

TEST_CASE("quantum symmetric products") {
  QMatrix m1 = QMatrix::constant(2, Cyclotomic(-1));
  Poly p = qsym_multiply(variable(2, 1), variable(2, 0), m1);
  Poly want;
  poly_add_term(want, {1, 1}, Cyclotomic(-1));
  CHECK(p == want);

  QMatrix gen = table(2, {{{0, 1}, zeta(5, 2)}});
  Poly v2v1v1 = qsym_multiply(qsym_multiply(variable(2, 1), variable(2, 0), gen), variable(2, 0), gen);
  Poly want2;
  poly_add_term(want2, {2, 1}, gen(1, 0) * gen(1, 0));
  CHECK(v2v1v1 == want2);

  Poly sq = qsym_multiply(variable(3, 0), variable(3, 0), gen.n() == 2 ? QMatrix::constant(3, Cyclotomic(-1)) : gen);
  Poly want3;
  poly_add_term(want3, {2, 0, 0}, Cyclotomic(1));
  CHECK(sq == want3);
}

TEST_CASE("quantum symmetric algebra is associative and free") {
  std::mt19937_64 rng(2);
  QMatrix q = table(3, {{{0, 1}, zeta(3, 1)}, {{0, 2}, zeta(4, 1)}, {{1, 2}, -1}});
  for (int d = 0; d <= 4; ++d) CHECK(static_cast<long>(monomials_of_degree(3, d).size()) == binomial(3 + d - 1, d));
  std::vector<Exponent> monos;
  for (int d = 0; d <= 2; ++d)
    for (const auto& e : monomials_of_degree(3, d)) monos.push_back(e);
  for (const auto& a : monos)
    for (const auto& b : monos)
      for (const auto& c : monos) {
        Poly pa{{a, 1}}, pb{{b, 1}}, pc{{c, 1}};
        CHECK(qsym_multiply(qsym_multiply(pa, pb, q), pc, q) == qsym_multiply(pa, qsym_multiply(pb, pc, q), q));
      }
}

TEST_CASE("action extension") {
  auto v4 = FiniteGroup::cyclic_product({2, 2});
  auto diag = GroupAction::diagonal(v4, {{-1, 1, -1}, {1, -1, -1}});
  ExtensionReport d = check_action_extends(diag, table(3, {{{0, 1}, zeta(7, 3)}, {{1, 2}, zeta(4, 1)}}));
  CHECK(d.symmetric);
  CHECK(d.exterior);

  auto s3 = FiniteGroup::symmetric(3);
  auto nat = GroupAction::natural_permutation(s3);
  ExtensionReport r = check_action_extends(nat, QMatrix::constant(3, Cyclotomic(-1)));
  CHECK(r.symmetric);
  CHECK(r.exterior);

  QMatrix mixed = table(3, {{{0, 1}, zeta(4, 1)}, {{0, 2}, -1}, {{1, 2}, -1}});
  ExtensionReport bad = check_action_extends(nat, mixed);
  CHECK_FALSE(bad.symmetric);
  CHECK_FALSE(bad.witnesses.empty());
}

TEST_CASE("quantum minors") {
  auto c2 = FiniteGroup::cyclic_product({2});
  QMatrix q = QMatrix::constant(2, Cyclotomic(-1));
  auto swap = GroupAction::from_generators(c2, 2, {{{0, 1}, {1, 0}}});
  CHECK(quantum_minor(swap, q, 0, 0, 1, 0, 1).is_one());
  CHECK(quantum_minor(swap, q, 1, 0, 1, 0, 1) == -q(1, 0));

  for (const auto& inst : extending_instances()) {
    const int n = inst.action.n();
    const int gs = inst.action.group()->size();
    REQUIRE(check_action_extends(inst.action, inst.q).symmetric);
    for (int g = 0; g < gs; ++g)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              CHECK((inst.q(l, k) * quantum_minor(inst.action, inst.q, g, i, j, k, l) +
                     quantum_minor(inst.action, inst.q, g, i, j, l, k))
                        .is_zero());
    for (int g = 0; g < gs; ++g)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
              const auto& a = inst.action;
              if (!(a.entry(g, i, l) * a.entry(g, j, k)).is_zero()) CHECK(inst.q(l, k) == inst.q(i, j));
              if (!(a.entry(g, i, k) * a.entry(g, j, l)).is_zero()) CHECK(inst.q(l, k) == inst.q(i, j).inverse());
            }
  }
}

TEST_CASE("group action is a homomorphism") {
  for (const auto& inst : extending_instances()) {
    const auto& a = inst.action;
    const auto& g = *a.group();
    const int n = a.n();
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        for (int i = 0; i < n; ++i) {
          // x(y v_i) = (xy) v_i, with x acting linearly on the image of y
          Poly inner = a.act_variable(y, i);
          CHECK(a.act(x, inner, inst.q) == a.act_variable(g.mul(x, y), i));
        }
  }
}

TEST_CASE("skew group algebra products") {
  auto s3 = FiniteGroup::symmetric(3);
  auto nat = GroupAction::natural_permutation(s3);
  QMatrix q = QMatrix::constant(3, Cyclotomic(-1));
  Cocycle triv = Cocycle::trivial(s3);
  SkewSum v1 = basis_element(3, unit_exponent(3, 0), 0), v2 = basis_element(3, unit_exponent(3, 1), 0);
  CHECK(skew_multiply(v1, v2, nat, q, triv) == basis_element(3, {1, 1, 0}, 0));
  for (int g = 0; g < 6; ++g)
    for (int i = 0; i < 3; ++i) {
      SkewSum got = skew_multiply(basis_element(3, {}, g), basis_element(3, unit_exponent(3, i), 0), nat, q, triv);
      SkewSum want;
      for (int k = 0; k < 3; ++k)
        if (!nat.entry(g, i, k).is_zero()) skew_add_term(want, unit_exponent(3, k), g, nat.entry(g, i, k));
      CHECK(got == want);
    }
}

TEST_CASE("skew group algebra is associative") {
  for (const auto& inst : extending_instances()) {
    const int n = inst.action.n();
    const int gs = inst.action.group()->size();
    std::vector<SkewSum> basis;
    for (int d = 0; d <= 1; ++d)
      for (const auto& e : monomials_of_degree(n, d))
        for (int g = 0; g < gs; ++g) basis.push_back(basis_element(n, e, g));
    std::vector<SkewSum> wide = basis;
    for (const auto& e : monomials_of_degree(n, 2)) wide.push_back(basis_element(n, e, gs - 1));
    for (const auto& a : wide)
      for (const auto& b : basis)
        for (const auto& c : wide) {
          auto lhs = skew_multiply(skew_multiply(a, b, inst.action, inst.q, inst.alpha), c, inst.action, inst.q,
                                   inst.alpha);
          auto rhs = skew_multiply(a, skew_multiply(b, c, inst.action, inst.q, inst.alpha), inst.action, inst.q,
                                   inst.alpha);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("q-matrix validation") {
  CHECK_THROWS_AS(QMatrix(2, {Cyclotomic(1), Cyclotomic(2), Cyclotomic(2), Cyclotomic(1)}), ValidationError);
  CHECK_THROWS_AS(QMatrix(2, {Cyclotomic(-1), Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}), ValidationError);
  auto c2 = FiniteGroup::cyclic_product({2});
  // generator of order 2 cannot act with order 3
  CHECK_THROWS_AS(GroupAction::from_generators(c2, 2, {{{0, 1}, {-1, -1}}}), ValidationError);
}
