#include "oracle.hpp"
#include "printers.hpp"

#include "pseudo/catalog.hpp"

#include <gtest/gtest.h>

using namespace pseudo;

namespace {

HopfPtr k_d() { return HopfAlgebra::make(LieAlgebraPresentation::abelian(1)); }
HopfPtr solv() { return HopfAlgebra::make(LieAlgebraPresentation::solvable2()); }
HopfElement m(const MultiIndex& I, const Rational& c = 1) { return HopfElement::monomial(I, c); }

PT raw(const HopfPtr& H, std::vector<HopfElement> f, const HopfElement& c, int key, const Rational& s = 1) {
  PT x(H, static_cast<int>(f.size()));
  x.add_raw(f, c, key, s);
  return x;
}

}  // namespace

TEST(Catalog, StandardNames) {
  std::vector<std::string> names;
  for (const auto& c : standard_catalog()) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{
                       "L_p p=1 h=D(1) over k[D]", "L_p p=D(1) over k[D]", "L_p p=D(2) over k[D]",
                       "Cur(g) dim 2 over k[D]", "gc_1 W=3 over k[D]", "L_p p=1 h=D(1,0) over U(2-dim)",
                       "L_p p=D(1,0) over U(2-dim)", "L_p p=D(2,0) over U(2-dim)", "Cur(g) dim 2 over U(2-dim)"}));
}

TEST(Catalog, EntriesAreLieAndBialgebrasWhereDeclared) {
  for (const auto& c : standard_catalog()) {
    LieReport r = check_lie_axioms(c.table, c.window);
    EXPECT_TRUE(r.ok) << c.name;
    if (!c.cobracket) continue;
    EXPECT_TRUE(check_coalgebra(*c.cobracket).ok) << c.name;
    EXPECT_TRUE(check_cocycle(c.table, *c.cobracket).ok) << c.name;
  }
}

TEST(Current, AbelianIsZero) {
  for (const auto& H : {k_d(), solv()}) {
    CatalogEntry c = build_current(H, LieAlgebraPresentation::abelian(3));
    EXPECT_EQ(c.table.rank(), 3);
    EXPECT_TRUE(table_is_zero(c.table));
  }
}

TEST(Current, TwoDimensionalTable) {
  auto H = k_d();
  CatalogEntry c = build_current(H, LieAlgebraPresentation::solvable2());
  HopfElement one = H->one();
  EXPECT_EQ(c.table.entry(0, 1), raw(H, {one, one}, one, 1));
  EXPECT_EQ(c.table.entry(1, 0), raw(H, {one, one}, one, 1, -1));
  EXPECT_TRUE(c.table.entry(0, 0).is_zero());
  EXPECT_TRUE(c.table.entry(1, 1).is_zero());
  EXPECT_FALSE(c.cobracket.has_value());
}

TEST(Current, ClassicalCobracketLifts) {
  // delta-bar(y) = x ^ y
  ClassicalCobracket cb;
  cb[1][{0, 1}] = 1;
  cb[1][{1, 0}] = -1;
  for (const auto& H : {k_d(), solv()}) {
    CatalogEntry c = build_current(H, LieAlgebraPresentation::solvable2(), cb);
    ASSERT_TRUE(c.cobracket.has_value());
    const MultiIndex z(H->dim());
    LTensor want(2);
    want.add_term({0, 1}, {z, z}, 1);
    want.add_term({1, 0}, {z, z}, -1);
    EXPECT_EQ(c.cobracket->value(1), want);
    EXPECT_TRUE(c.cobracket->value(0).is_zero());
    EXPECT_TRUE(check_cocycle(c.table, *c.cobracket).ok);
  }
}

TEST(Current, Errors) {
  auto H = k_d();
  // [x,y] = y, [x,z] = z, [y,z] = x: the Jacobi sum on (x, y, z) is -2x
  LieAlgebraPresentation nonjacobi;
  nonjacobi.dim = 3;
  nonjacobi.constants[{0, 1, 1}] = 1;
  nonjacobi.constants[{0, 2, 2}] = 1;
  nonjacobi.constants[{1, 2, 0}] = 1;
  EXPECT_FALSE(validate_lie(nonjacobi).ok);
  EXPECT_THROW(build_current(H, nonjacobi), std::invalid_argument);
  LieAlgebraPresentation lower;
  lower.dim = 2;
  lower.constants[{1, 0, 1}] = 1;
  EXPECT_THROW(build_current(H, lower), std::invalid_argument);
  ClassicalCobracket out_of_range;
  out_of_range[1][{0, 2}] = 1;
  EXPECT_THROW(build_current(H, LieAlgebraPresentation::solvable2(), out_of_range), std::invalid_argument);
  ClassicalCobracket bad_key;
  bad_key[5][{0, 1}] = 1;
  EXPECT_THROW(build_current(H, LieAlgebraPresentation::solvable2(), bad_key), std::invalid_argument);
}

TEST(Current, CommutatorOfAssociativeCurrentProduct) {
  // g = span{x = E11, y = E12} in gl_2, so [x, y] = y. On Cur(Mat_2) the associative product is
  // (f (x) A) * (g (x) B) = (f (x) g) (x)_H AB; its commutator a*b - (sigma (x)_H id)(b*a) must be
  // the current bracket. Keys index matrix units as 2p + q, so x -> 0 and y -> 1 match the Cur labels.
  const int unit[2][2] = {{0, 0}, {0, 1}};  // (p, q) of x and y
  std::mt19937 rng(17);
  for (const auto& H : {k_d(), solv()}) {
    CatalogEntry c = build_current(H, LieAlgebraPresentation::solvable2());
    for (int trial = 0; trial < 5; ++trial)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          HopfElement f = oracle::random_element(rng, H->dim(), 2, 2);
          HopfElement g = oracle::random_element(rng, H->dim(), 2, 2);
          auto product = [&](const HopfElement& u, int a, const HopfElement& v, int b) {
            PT out(H, 2);
            if (unit[a][1] == unit[b][0]) out.add_raw({u, v}, H->one(), 2 * unit[a][0] + unit[b][1]);
            return out;
          };
          PT comm = product(f, i, g, j) - product(g, j, f, i).swap12();
          EXPECT_EQ(extend_bracket(c.table, ModuleElement::basis(i, f), ModuleElement::basis(j, g)), comm)
              << H->dim() << " " << i << "," << j;
        }
  }
}

TEST(Solvable, TableAndCobracket) {
  auto H = k_d();
  HopfElement D = H->gen(0), one = H->one();
  CatalogEntry c = build_solvable(H, one, D);
  EXPECT_EQ(c.table.entry(0, 1), raw(H, {one, one}, one, 1));
  ASSERT_TRUE(c.cobracket.has_value());
  EXPECT_TRUE(c.cobracket->value(0).is_zero());
  // delta_D(b) = S(D)a (x) b - b (x) S(D)a
  LTensor want(2);
  want.add_pure({-D, one}, {0, 1});
  want.add_pure({one, -D}, {1, 0}, -1);
  EXPECT_EQ(c.cobracket->value(1), want);
  EXPECT_EQ(c.table.labels, (std::vector<std::string>{"a", "b"}));
}

TEST(Solvable, CompatibilityVerdicts) {
  for (const auto& H : {k_d(), solv()}) {
    HopfElement D = H->gen(0), one = H->one();
    CatalogEntry withD = build_solvable(H, one, D);
    ASSERT_TRUE(withD.compatible.has_value());
    EXPECT_TRUE(*withD.compatible);
    ASSERT_TRUE(withD.r.has_value());
    LTensor r(2);
    r.add_pure({one, D}, {0, 0}, Rational(1, 2));
    r.add_pure({D, one}, {0, 0}, Rational(-1, 2));
    EXPECT_EQ(*withD.r, r);
    ASSERT_TRUE(withD.coboundary_matches.has_value());
    EXPECT_EQ(*withD.coboundary_matches, coboundary_delta(withD.table, r) == *withD.cobracket);

    // h = 1: (S (x) 1)Delta(1) = 1 (x) 1 but -(1 (x) S)Delta(1) = -1 (x) 1
    CatalogEntry withOne = build_solvable(H, one, one);
    ASSERT_TRUE(withOne.compatible.has_value());
    EXPECT_FALSE(*withOne.compatible);
    EXPECT_FALSE(withOne.r.has_value());
    EXPECT_FALSE(withOne.coboundary_matches.has_value());

    CatalogEntry plain = build_solvable(H, D);
    EXPECT_FALSE(plain.cobracket.has_value());
    EXPECT_FALSE(plain.compatible.has_value());
    EXPECT_TRUE(check_lie_axioms(plain.table).ok);
  }
}

TEST(Gc, BracketExamples) {
  auto H = k_d();
  CatalogEntry gc = build_gc(H, 1, 1);
  GcLayout L = gc_layout(gc);
  HopfElement one = H->one(), D = H->gen(0);
  const int e0 = L.label(MultiIndex{0}, 0, 0), eD = L.label(MultiIndex{1}, 0, 0);
  // [(1 (x) D) * (1 (x) 1)] = (1 (x) D) (x)_H (1 (x) 1)
  EXPECT_EQ(gc.table.entry(eD, e0), raw(H, {one, D}, one, e0));
  EXPECT_TRUE(gc.table.entry(e0, e0).is_zero());

  // [(1 (x) 1 (x) A) * (1 (x) 1 (x) B)] = (1 (x) 1) (x)_H (1 (x) 1 (x) [A, B])
  CatalogEntry gc2 = build_gc(H, 2, 0);
  GcLayout L2 = gc_layout(gc2);
  const MultiIndex z{0};
  EXPECT_EQ(gc2.table.rank(), 4);
  auto E = [&](int p, int q) { return L2.label(z, p, q); };
  EXPECT_EQ(gc2.table.entry(E(0, 1), E(1, 0)), raw(H, {one, one}, one, E(0, 0)) - raw(H, {one, one}, one, E(1, 1)));
  EXPECT_EQ(gc2.table.entry(E(0, 0), E(0, 1)), raw(H, {one, one}, one, E(0, 1)));
  EXPECT_TRUE(gc2.table.entry(E(0, 0), E(1, 1)).is_zero());
}

TEST(Gc, WindowLayoutAndEscape) {
  auto H = k_d();
  CatalogEntry gc = build_gc(H, 1, 1);
  GcLayout L = gc_layout(gc);
  EXPECT_EQ(L.max_degree, 3);
  EXPECT_EQ(gc.table.rank(), 4);
  EXPECT_EQ(gc.window, (std::vector<int>{0, 1}));
  const int e1 = L.label(MultiIndex{1}, 0, 0), e3 = L.label(MultiIndex{3}, 0, 0);
  EXPECT_FALSE(gc.table.has(e3, e1));
  EXPECT_THROW(gc.table.entry(e3, e1), WindowEscape);
  EXPECT_TRUE(check_lie_axioms(gc.table, gc.window).ok);
  // Using every stored label runs past the window
  LieReport all = check_lie_axioms(gc.table);
  ASSERT_FALSE(all.ok);
  EXPECT_EQ(all.failures[0].kind, "window");
  EXPECT_THROW(gc_layout(build_solvable(H, H->one())), std::invalid_argument);
  EXPECT_THROW(build_gc(H, 0, 1), std::invalid_argument);
  EXPECT_THROW(gc1_element(gc, H->one(), m({4})), WindowEscape);
}

TEST(Gc, DisplayedCoboundaryMatchesLibrary) {
  // delta_r(1 (x) a) for r = (f (x) 1) ^ (g (x) 1), displayed four-term form against coboundary_delta
  auto H = k_d();
  CatalogEntry gc = build_gc(H, 1, 3);
  GcLayout L = gc_layout(gc);
  const std::vector<HopfElement> fs{H->one(), H->gen(0), m({2})};
  int nonzero = 0;
  for (const auto& f : fs)
    for (const auto& g : fs) {
      if (f == g) continue;
      Cobracket C = coboundary_delta(gc.table, gc1_r(gc, f, g));
      for (int k = 0; k <= 2; ++k) {
        LTensor shown = gc1_display_delta(gc, f, g, m({k}));
        EXPECT_EQ(C.value(L.label(MultiIndex{k}, 0, 0)), shown) << f.to_string() << " " << g.to_string() << " " << k;
        nonzero += !shown.is_zero();
      }
    }
  EXPECT_EQ(nonzero, 8);
}

TEST(Gc, DisplayedCoboundaryValue) {
  // f = 1, g = D, a = D: frozen from the library
  auto H = k_d();
  CatalogEntry gc = build_gc(H, 1, 3);
  GcLayout L = gc_layout(gc);
  const int e0 = L.label(MultiIndex{0}, 0, 0);
  // -4 (1 (x) 1) ^ (D^(2) (x) 1)
  LTensor want(2);
  want.add_term({e0, e0}, {MultiIndex{0}, MultiIndex{2}}, -4);
  want.add_term({e0, e0}, {MultiIndex{2}, MultiIndex{0}}, 4);
  EXPECT_EQ(gc1_display_delta(gc, H->one(), H->gen(0), H->gen(0)), want);
}

TEST(Broken, FailsSkewOnly) {
  CatalogEntry b = build_broken(k_d());
  EXPECT_EQ(b.table.rank(), 1);
  LieReport r = check_lie_axioms(b.table);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.failures[0].kind, "skew");
}
