#pragma once

#include "pseudo/bialgebra.hpp"

namespace pseudo {

// Y = X with the right action <x.h, f> = <x, S(h) f>. Only H = k[d] with d abelian
// keeps finite-support elements finite under this action.

// x.h
DualElement right_act(const HopfAlgebra& H, const HopfElement& h, const DualElement& x);

// sum_k y_k (x) a_k, a class in (Y (x) L) / H_+(Y (x) L).
struct AnnihilationElement {
  std::vector<DualElement> y;

  static AnnihilationElement zero(int dim, int rank);
  static AnnihilationElement basis(int dim, int rank, const MultiIndex& I, int k);
  bool operator==(const AnnihilationElement& o) const { return y == o.y; }
  AnnihilationElement& operator+=(const AnnihilationElement& o);
  AnnihilationElement& operator*=(const Rational& c);
  bool is_zero() const;
  std::string to_string() const;
};

// Values on the dual basis a^1..a^r; extended by alpha(h a^k) = alpha(a^k).S(h).
struct ConvolutionMap {
  std::vector<DualElement> values;

  bool operator==(const ConvolutionMap& o) const { return values == o.values; }
  std::string to_string() const;
};

// Class of x (x) m, using x (x) h a == x.h (x) a.
AnnihilationElement ann_class(const HopfAlgebra& H, int rank, const DualElement& x, const ModuleElement& m);

// h(x (x) a) = x.S(h(1)) (x) h(2) a, reduced to a class.
AnnihilationElement ann_class_of_action(const HopfAlgebra& H, int rank, const HopfElement& h, const DualElement& x,
                                        int a);

// [(x (x) a_i) * (y (x) a_j)] in (H (x) H) (x)_H (Y (x) L), on the basis t_I (x) a_k.
PseudoTensor<YLKey> affinize_bracket(const PseudoTable& T, const DualElement& x, int i, const DualElement& y, int j);
KeyAction<YLKey, YLKey> affinization_action(const PseudoTable& T);
// Skew-symmetry and Jacobi of Y (x) L on keys t_I (x) a_k with |I| <= max_degree.
LieReport check_affinization(const PseudoTable& T, int max_degree, std::size_t max_failures = 8);

AnnihilationElement ann_bracket(const PseudoTable& T, const AnnihilationElement& u, const AnnihilationElement& v);

// m o (f (x) g) o delta
ConvolutionMap convolution_bracket(const Cobracket& C, const ConvolutionMap& f, const ConvolutionMap& g);
// alpha(f) for f = sum f_k a^k in L*.
DualElement evaluate(const HopfAlgebra& H, const ConvolutionMap& alpha, const ModuleElement& f);

ConvolutionMap phi_iso(const PseudoTable& T, const AnnihilationElement& u);
AnnihilationElement phi_inv(const PseudoTable& T, const ConvolutionMap& alpha);

}  // namespace pseudo
