#include "oracle.hpp"
#include "printers.hpp"

#include "pseudo/catalog.hpp"

#include <gtest/gtest.h>

using namespace pseudo;

namespace {

HopfPtr k_d() { return HopfAlgebra::make(LieAlgebraPresentation::abelian(1)); }
HopfPtr solv() { return HopfAlgebra::make(LieAlgebraPresentation::solvable2()); }
HopfElement m(const MultiIndex& I, const Rational& c = 1) { return HopfElement::monomial(I, c); }
DualElement t(const MultiIndex& I) {
  DualElement x(I.size());
  x.add_term(I, 1);
  return x;
}

PT raw(const HopfPtr& H, std::vector<HopfElement> f, const HopfElement& c, int key, const Rational& s = 1) {
  PT x(H, static_cast<int>(f.size()));
  x.add_raw(f, c, key, s);
  return x;
}

ModuleElement e(const HopfElement& c, int i) { return ModuleElement::basis(i, c); }

PseudoTable zero_table(const HopfPtr& H, int rank) {
  PseudoTable T(H, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) T.set(i, j, T.zero());
  return T;
}

// Finite-rank fixtures: L_p for three p and Cur(g), over both algebras.
std::vector<CatalogEntry> finite_fixtures() {
  std::vector<CatalogEntry> out;
  for (auto& c : standard_catalog())
    if (!c.gc) out.push_back(std::move(c));
  return out;
}

}  // namespace

TEST(ExtendBracket, Examples) {
  auto H = k_d();
  auto L = build_solvable(H, H->one()).table;
  HopfElement D = H->gen(0), one = H->one();
  EXPECT_EQ(extend_bracket(L, e(one, 0), e(one, 1)), raw(H, {one, one}, one, 1));
  EXPECT_EQ(extend_bracket(L, e(D, 0), e(one, 1)), raw(H, {D, one}, one, 1));
  EXPECT_EQ(extend_bracket(L, e(one, 0), e(D, 1)), raw(H, {-D, one}, one, 1) + raw(H, {one, one}, D, 1));
}

TEST(ExtendBracket, HBilinear) {
  std::mt19937 rng(31);
  for (const auto& c : finite_fixtures()) {
    const auto& T = c.table;
    const auto& H = T.algebra();
    for (int trial = 0; trial < 10; ++trial)
      for (int i = 0; i < T.rank(); ++i)
        for (int j = 0; j < T.rank(); ++j) {
          HopfElement f = oracle::random_element(rng, H->dim(), 3, 2);
          HopfElement g = oracle::random_element(rng, H->dim(), 3, 2);
          EXPECT_EQ(extend_bracket(T, e(f, i), e(g, j)), T.entry(i, j).mul_slots({f, g})) << c.name;
        }
  }
}

TEST(Compose, Examples) {
  auto H = k_d();
  auto L = build_solvable(H, H->one()).table;
  auto br = key_action(L);
  EXPECT_TRUE((compose_right<int, int>(0, br(0, 0), br).is_zero()));
  EXPECT_TRUE((compose_left<int, int>(br(0, 0), 1, br).is_zero()));
  HopfElement one = H->one();
  EXPECT_EQ((compose_right<int, int>(0, br(0, 1), br)), raw(H, {one, one, one}, one, 1));
}

TEST(LieAxioms, FixturesPass) {
  for (const auto& c : standard_catalog()) {
    LieReport r = check_lie_axioms(c.table, c.window);
    EXPECT_TRUE(r.ok) << c.name << ": " << (r.failures.empty() ? "" : r.failures[0].witness);
  }
}

TEST(LieAxioms, BrokenFixtureFailsSkew) {
  auto B = build_broken(k_d());
  LieReport r = check_lie_axioms(B.table);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.failures[0].kind, "skew");
  EXPECT_EQ(r.failures[0].indices, (std::vector<int>{0, 0}));
  EXPECT_FALSE(r.failures[0].witness.empty());
  // -(sigma (x)_H id)(1 (x) 1) (x)_H a = -(1 (x) 1) (x)_H a
  auto br = key_action(B.table);
  EXPECT_EQ(skew_defect<int>(br, 0, 0), raw(B.table.algebra(), {m({0}), m({0})}, m({0}), 0, 2));
}

TEST(XBracket, Examples) {
  auto H = k_d();
  auto LD = build_solvable(H, H->gen(0)).table;
  auto L1 = build_solvable(H, H->one()).table;
  ModuleElement a = ModuleElement::basis(*H, 0), b = ModuleElement::basis(*H, 1);
  EXPECT_EQ(x_bracket(LD, a, t({1}), b), b * -1);
  EXPECT_TRUE(x_bracket(LD, a, t({0}), b).is_zero());
  EXPECT_EQ(x_bracket(L1, a, t({0}), b), b);
}

TEST(XBracket, Sesquilinearity) {
  // [h a_x b] = [a_{x h} b] and [a_x h b] = h_(2) [a_{h_(-1) x} b]
  constexpr int kCut = 8;
  for (const auto& c : finite_fixtures()) {
    const auto& T = c.table;
    const HopfAlgebra& H = *T.algebra();
    for (const auto& hI : indices_up_to(H.dim(), 2))
      for (const auto& I : indices_up_to(H.dim(), 3))
        for (int i = 0; i < T.rank(); ++i)
          for (int j = 0; j < T.rank(); ++j) {
            ModuleElement a = ModuleElement::basis(H, i), b = ModuleElement::basis(H, j);
            HopfElement h = m(hI);
            DualElement xh = act(H, h, t(I), Side::Right, kCut);
            EXPECT_EQ(x_bracket(T, e(h, i), t(I), b), x_bracket(T, a, xh, b)) << c.name;
            ModuleElement rhs;
            for (const auto& p : H.coproduct_monomial(hI, 2)) {
              DualElement sx = act(H, H.antipode_monomial(p[0]), t(I), Side::Left, kCut);
              rhs += left_mul(H, m(p[1]), x_bracket(T, a, sx, b));
            }
            EXPECT_EQ(x_bracket(T, a, t(I), e(h, j)), rhs) << c.name;
          }
  }
}

TEST(XBracket, LocalityBounds) {
  auto catalog = standard_catalog();
  for (const auto& c : catalog) {
    if (c.gc) continue;
    if (c.name.rfind("L_p", 0) == 0) {
      // [a_{t_I} b] = <t_I, S(p)> b vanishes for |I| > deg p
      int degp = c.table.entry(0, 1).max_slot_degree();
      EXPECT_EQ(locality_bound(c.table, 0, 1), degp + 1) << c.name;
      EXPECT_EQ(locality_bound(c.table, 0, 0), 0) << c.name;
      EXPECT_EQ(locality_bound(c.table, 1, 1), 0) << c.name;
    } else {
      EXPECT_EQ(locality_bound(c.table, 0, 1), 1) << c.name;
    }
  }
}

TEST(XBracket, Reconstruction) {
  for (const auto& c : standard_catalog()) {
    const auto& T = c.table;
    for (const auto& [ij, v] : T.entries()) {
      const HopfAlgebra& H = *T.algebra();
      PT rec = reconstruct_from_x_brackets(T, ModuleElement::basis(H, ij.first), ModuleElement::basis(H, ij.second),
                                           locality_bound(T, ij.first, ij.second));
      EXPECT_EQ(rec, v) << c.name << " " << ij.first << "," << ij.second;
    }
  }
}

TEST(Conformal, FixturesPassAtDegreeFour) {
  for (const auto& c : standard_catalog()) {
    ConformalReport r = check_conformal_axioms(c.table, 4, c.window);
    EXPECT_TRUE(r.ok) << c.name << ": " << (r.failures.empty() ? "" : r.failures[0].witness);
  }
}

TEST(Conformal, LocalityCertificates) {
  auto H = k_d();
  for (int k = 0; k <= 2; ++k) {
    ConformalReport r = check_conformal_axioms(build_solvable(H, m({k})).table, 4);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.locality.at({0, 1}), k + 1);
  }
  LieAlgebraPresentation g = LieAlgebraPresentation::solvable2();
  ConformalReport cur = check_conformal_axioms(build_current(H, g).table, 4);
  ASSERT_TRUE(cur.ok);
  EXPECT_EQ(cur.locality.at({0, 1}), 1);
  EXPECT_TRUE(check_conformal_axioms(zero_table(H, 2), 4).ok);
}

TEST(Conformal, BrokenFixtureFails) {
  EXPECT_FALSE(check_conformal_axioms(build_broken(k_d()).table, 2).ok);
}

TEST(TensorModule, Examples) {
  auto H = k_d();
  auto L = build_solvable(H, H->one()).table;
  HopfElement one = H->one();
  LTensor bb(2);
  bb.add_pure({one, one}, {1, 1});
  PseudoTensor<LLKey> want(H, 2);
  add_ll(want, {one, one}, bb, 2);
  EXPECT_EQ(tensor_action(L, 0, bb), want);
  PseudoTable zero = zero_table(H, 2);
  EXPECT_TRUE(tensor_action(zero, 0, bb).is_zero());
}

TEST(TensorModule, HLinearInModuleSlot) {
  // a * (D X) = ((1 (x) D) (x)_H 1)(a * X)
  for (const auto& H : {k_d(), solv()}) {
    auto L = build_solvable(H, H->gen(0)).table;
    HopfElement D = H->gen(0), one = H->one();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        LTensor X(2);
        X.add_pure({one, D}, {i, j});
        for (int a = 0; a < 2; ++a)
          EXPECT_EQ(tensor_action(L, a, act(*H, D, X)), tensor_action(L, a, X).mul_slots({one, D}));
      }
  }
}

TEST(TensorModule, RepresentationAxiom) {
  for (const auto& c : finite_fixtures()) {
    const auto& T = c.table;
    const HopfAlgebra& H = *T.algebra();
    auto br = key_action(T);
    KeyAction<int, LLKey> ta = [&](const int& a, const LLKey& k) { return tensor_action(T, a, k); };
    for (const auto& J : indices_up_to(H.dim(), 1))
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              EXPECT_TRUE((representation_defect<int, LLKey>(br, ta, a, b, LLKey{i, J, j}).is_zero())) << c.name;
  }
}

TEST(Chom, Examples) {
  auto H = k_d();
  auto L = build_solvable(H, H->one()).table;
  PseudoTable dual = chom_dual(L);
  HopfElement one = H->one();
  // (a * b^dagger)(b) = -(1 (x) 1 (x) 1) (x)_H 1
  EXPECT_EQ(dual.entry(0, 1), raw(H, {one, one}, one, 1, -1));
  EXPECT_TRUE(dual.entry(0, 0).is_zero());
  EXPECT_TRUE(chom_dual(zero_table(H, 2)).entry(0, 1).is_zero());
}

TEST(Chom, DualIsRepresentationAndIdentificationHolds) {
  for (const auto& c : finite_fixtures()) {
    EXPECT_TRUE(check_representation(c.table, chom_dual(c.table)).ok) << c.name;
    ChomCheck k = check_chom_identification(c.table);
    EXPECT_TRUE(k.ok) << c.name << ": " << k.witness;
  }
}
