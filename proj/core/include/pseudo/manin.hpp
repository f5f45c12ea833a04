#pragma once

#include "pseudo/bialgebra.hpp"

namespace pseudo {

// <a_i, a_j> = (h_ij (x) 1) (x)_H 1; only h_ij is stored.
class PseudoForm {
 public:
  PseudoForm() = default;
  PseudoForm(HopfPtr H, int rank) : H_(std::move(H)), rank_(rank) {}

  const HopfPtr& algebra() const { return H_; }
  int rank() const { return rank_; }
  void set(int i, int j, HopfElement h);
  HopfElement get(int i, int j) const;
  PseudoTensor<UnitKey> value(int i, int j) const;

 private:
  HopfPtr H_;
  int rank_ = 0;
  std::map<std::pair<int, int>, HopfElement> h_;
};

struct FormReport {
  bool symmetric = true;
  bool invariant = true;
  bool nondegenerate = true;
  std::string witness;
};

// <[a*b], c> and <a, [b*c]> in H^{(x)3} (x)_H k.
PseudoTensor<UnitKey> form_left(const PseudoTable& T, const PseudoForm& F, int a, int b, int c);
PseudoTensor<UnitKey> form_right(const PseudoTable& T, const PseudoForm& F, int a, int b, int c);

// Nondegeneracy is certified by Gaussian elimination over H with scalar pivots only;
// a Gram matrix needing a non-scalar pivot is reported as degenerate.
FormReport form_check(const PseudoForm& F, const PseudoTable& T);

// R = L (+) L* with e_i = 0..r-1 and e*_i = r..2r-1.
struct ManinTriple {
  PseudoTable R;
  int r = 0;
  PseudoForm form;
};

struct ManinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracket on L* from the cobracket, mixed bracket from invariance of the canonical form.
ManinTriple manin_from_bialgebra(const PseudoTable& T, const Cobracket& C);
// Sub-bracket on the first half, cobracket dual to the second half. The pairing
// block between the halves must be the identity.
std::pair<PseudoTable, Cobracket> bialgebra_from_manin(const ManinTriple& M);
// Subalgebra closure and isotropy; empty when both hold.
std::string manin_violation(const ManinTriple& M);

struct DoubleResult {
  ManinTriple manin;
  Cobracket delta;  // d(1 (x)_H r) on L (+) L*
  LTensor r;        // sum e_i (x) e*_i
  bool restrict_l = false;      // delta(e_j) = delta_L(e_j)
  bool restrict_dual = false;   // delta(e*_j) = -delta_{L*}(e*_j)
  CybeReport cybe;
  std::string witness;
};
DoubleResult drinfeld_double(const PseudoTable& T, const Cobracket& C);

// Keys shifted by `offset`.
PT shift_keys(const PT& t, int offset);
LTensor shift_labels(const LTensor& t, int offset);

}  // namespace pseudo
