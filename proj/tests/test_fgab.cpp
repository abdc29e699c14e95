#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcoh/fgab.hpp"
#include "helpers.hpp"

using namespace galcoh;
using galcoh::testing::random_unimodular;

namespace {

FgAbGroup group_with_rel(int n, std::vector<IntVec> cols) {
  return FgAbGroup(n, IntegerMatrix::from_columns(cols, n));
}

GammaModule z_module(long sign) {
  IntegerMatrix s(1, 1);
  s.at(0, 0) = sign;
  return GammaModule{FgAbGroup::free_group(1), s};
}

GammaModule swap_module() {
  return GammaModule{FgAbGroup::free_group(2), IntegerMatrix(2, 2, {0, 1, 1, 0})};
}

}  // namespace

TEST_CASE("invariant factors of direct sums") {
  CHECK(group_with_rel(2, {{2, 0}}).invariant_factors() == IntVec{2, 0});
  CHECK(group_with_rel(2, {{2, 0}, {0, 4}}).invariant_factors() == IntVec{2, 4});
  // single relation of content 1 in Z^2 leaves an infinite cyclic group
  CHECK(group_with_rel(2, {{-2, 1}}).invariant_factors() == IntVec{0});
  // the fiber product {(a,b) in Z x Z/4 : a = b mod 2} in the basis
  // e = (1,1), f = (0,2), where 2f = 0
  CHECK(group_with_rel(2, {{0, 2}}).invariant_factors() == IntVec{2, 0});
}

TEST_CASE("invariant factors are presentation invariant") {
  std::mt19937 rng(11);
  FgAbGroup g = group_with_rel(3, {{2, 0, 0}, {0, 6, 0}});
  IntVec expected = g.invariant_factors();
  for (int trial = 0; trial < 40; ++trial) {
    auto [u, uinv] = random_unimodular(rng, 3);
    auto [v, vinv] = random_unimodular(rng, 2);
    // change of generators (left) and of relators (right)
    FgAbGroup h(3, u * g.relations() * v);
    CHECK(h.invariant_factors() == expected);
  }
}

TEST_CASE("canonical coordinates decide equality of elements") {
  FgAbGroup g = group_with_rel(2, {{0, 4}});
  CHECK(g.elements_equal({1, 5}, {1, 1}));
  CHECK(!g.elements_equal({1, 1}, {0, 1}));
  CHECK(g.is_zero_element({0, 8}));
}

TEST_CASE("kernel, image, cokernel of multiplication by 2 on Z") {
  FgAbGroup z = FgAbGroup::free_group(1);
  GroupHom two{z, z, IntegerMatrix(1, 1, {2})};
  CHECK(kernel(two).group.is_trivial());
  CHECK(image(two).group.invariant_factors() == IntVec{0});
  CHECK(cokernel(two).group.invariant_factors() == IntVec{2});
}

TEST_CASE("kernel of the norm of the induced module") {
  GammaModule m = swap_module();
  GroupHom norm{m.group, m.group, m.norm()};
  SubquotientPart k = kernel(norm);
  CHECK(k.group.invariant_factors() == IntVec{0});
  // generated by (1,-1) up to sign
  IntVec gen = k.map.matrix.column(0);
  CHECK(gen[0] + gen[1] == 0);
  CHECK((gen[0] == 1 || gen[0] == -1));
}

TEST_CASE("factor_through recovers the factorization") {
  FgAbGroup z = FgAbGroup::free_group(1);
  GroupHom four{z, z, IntegerMatrix(1, 1, {4})};
  GroupHom two{z, z, IntegerMatrix(1, 1, {2})};
  GroupHom g = factor_through(four, two);
  CHECK(g.matrix.at(0, 0) == 2);
  CHECK_THROWS_AS(factor_through(two, four), ValidationError);
}

TEST_CASE("h1_gamma dimensions on the basic modules") {
  CHECK(h1_gamma(z_module(-1)).dimension() == 1);
  CHECK(h1_gamma(z_module(1)).dimension() == 0);
  CHECK(h1_gamma(swap_module()).dimension() == 0);
  GammaModule mu4{FgAbGroup::cyclic_sum({4}), IntegerMatrix::identity(1)};
  CHECK(h1_gamma(mu4).dimension() == 1);
}

TEST_CASE("h1_gamma output is 2-torsion and basis lifts reduce to unit vectors") {
  GammaModule m{FgAbGroup::cyclic_sum({0, 0, 4}),
                IntegerMatrix(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 1})};
  F2Space h = h1_gamma(m);
  CHECK(h.dimension() == 3);
  for (int i = 0; i < h.dimension(); ++i) {
    std::vector<int> unit(h.dimension(), 0);
    unit[i] = 1;
    CHECK(h.reduce(h.basis_lifts()[i]) == unit);
    CHECK(h.reduce(vec_scale(2, h.basis_lifts()[i])) ==
          std::vector<int>(h.dimension(), 0));
  }
}

TEST_CASE("h1_gamma rejects non-involutions") {
  GammaModule bad{FgAbGroup::free_group(1), IntegerMatrix(1, 1, {2})};
  CHECK_THROWS_AS(h1_gamma(bad), ValidationError);
}

TEST_CASE("reduce rejects elements not killed by the norm") {
  GammaModule m = z_module(1);
  F2Space h = h1_gamma(m);
  CHECK_THROWS_AS(h.reduce({1}), ValidationError);
}

TEST_CASE("h1_functorial basic maps") {
  GammaModule m = z_module(-1);
  F2Space h = h1_gamma(m);
  auto id_cols = h1_functorial(m, m, IntegerMatrix::identity(1), h, h);
  CHECK(id_cols == std::vector<std::vector<int>>{{1}});
  auto neg_cols = h1_functorial(m, m, IntegerMatrix(1, 1, {-1}), h, h);
  CHECK(neg_cols == std::vector<std::vector<int>>{{1}});  // -1 = 1 on 2-torsion
}

TEST_CASE("h1_functorial rejects non-equivariant maps") {
  GammaModule m{FgAbGroup::free_group(2), IntegerMatrix(2, 2, {-1, 0, 0, 1})};
  F2Space h = h1_gamma(m);
  IntegerMatrix f(2, 2, {0, 1, 1, 0});  // swaps the eigen-lines
  CHECK_THROWS_AS(h1_functorial(m, m, f, h, h), ValidationError);
}

TEST_CASE("h1_functorial respects composition") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3);
  GammaModule m{FgAbGroup::cyclic_sum({0, 0, 2}),
                IntegerMatrix(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 1})};
  F2Space h = h1_gamma(m);
  auto mat_mod2 = [&](const std::vector<std::vector<int>>& cols) { return cols; };
  for (int trial = 0; trial < 25; ++trial) {
    // a + b*sigma always commutes with sigma
    auto poly = [&] {
      Int a = coef(rng), b = coef(rng);
      IntegerMatrix f = IntegerMatrix::identity(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          f.at(i, j) = a * (i == j ? 1 : 0) + b * m.sigma.at(i, j);
      return f;
    };
    IntegerMatrix f = poly(), g = poly();
    auto fg = h1_functorial(m, m, f * g, h, h);
    auto fc = h1_functorial(m, m, f, h, h);
    auto gc = h1_functorial(m, m, g, h, h);
    // compose over F2: (f o g) column j = F applied to g's column j
    std::vector<std::vector<int>> comp;
    for (int j = 0; j < h.dimension(); ++j) {
      std::vector<int> col(h.dimension(), 0);
      for (int k = 0; k < h.dimension(); ++k)
        if (gc[j][k])
          for (int i = 0; i < h.dimension(); ++i) col[i] ^= fc[k][i];
      comp.push_back(col);
    }
    CHECK(mat_mod2(fg) == mat_mod2(comp));
  }
}

TEST_CASE("class_of_two_torsion_point on the compact 1-torus") {
  GammaModule m = z_module(-1);
  F2Space h = h1_gamma(m);
  IntegerMatrix p = IntegerMatrix::identity(1);
  IntegerMatrix st(1, 1, {-1});
  CHECK(class_of_two_torsion_point(h, p, st, {0}) == std::vector<int>{0});
  CHECK(class_of_two_torsion_point(h, p, st, {1}) == std::vector<int>{1});
  CHECK(class_of_two_torsion_point(h, p, st, {2}) == std::vector<int>{0});
}

TEST_CASE("class_of_two_torsion_point coboundary invariance") {
  GammaModule m{FgAbGroup::free_group(2), -IntegerMatrix::identity(2)};
  F2Space h = h1_gamma(m);
  IntegerMatrix p = IntegerMatrix::identity(2);
  IntegerMatrix st = -IntegerMatrix::identity(2);
  auto base = class_of_two_torsion_point(h, p, st, {1, 0});
  auto shifted = class_of_two_torsion_point(h, p, st, {3, 2});  // mu + 2*lambda
  CHECK(base == shifted);
}

TEST_CASE("class_of_two_torsion_point rejects non-cocycles") {
  GammaModule m = swap_module();
  F2Space h = h1_gamma(m);
  IntegerMatrix p = IntegerMatrix::identity(2);
  CHECK_THROWS_AS(class_of_two_torsion_point(h, p, m.sigma, {1, 0}), ValidationError);
}
