#pragma once

#include "pseudo/lie.hpp"

namespace pseudo {

// delta: L -> L (x) L on the basis, extended by delta(h a) = Delta(h) delta(a).
class Cobracket {
 public:
  Cobracket() = default;
  Cobracket(HopfPtr H, int rank);

  const HopfPtr& algebra() const { return H_; }
  int rank() const { return static_cast<int>(d_.size()); }
  void set(int i, LTensor v);
  const LTensor& value(int i) const { return d_.at(static_cast<std::size_t>(i)); }
  LTensor apply(const ModuleElement& m) const;
  bool operator==(const Cobracket& o) const { return d_ == o.d_; }

 private:
  HopfPtr H_;
  std::vector<LTensor> d_;
};

struct Verdict {
  bool ok = true;
  std::string witness;
};

struct CoalgebraReport {
  bool ok = true;
  bool wedge = true;
  bool cojacobi = true;
  std::string witness;
};

// delta = -tau delta and (I (x) delta)delta - tau12 (I (x) delta)delta = (delta (x) I)delta.
CoalgebraReport check_coalgebra(const Cobracket& C);
// a*delta(b) - (sigma (x)_H id) b*delta(a) = delta([a*b]) on basis pairs.
Verdict check_cocycle(const PseudoTable& T, const Cobracket& C);

// Dual of a finite-rank Lie pseudoalgebra: a Lie H-coalgebra on L* in the dual basis.
Cobracket dualize_to_cobracket(const PseudoTable& T);

struct CutoffTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Lie pseudoalgebra on R* rebuilt from its x-brackets; `cutoff` bounds the degrees of t_I used.
PseudoTable cobracket_to_pseudobracket(const Cobracket& C, int cutoff);
// Smallest cutoff accepted by cobracket_to_pseudobracket.
int required_cutoff(const Cobracket& C);

// Entrywise difference of two tables of equal rank.
PseudoTable table_difference(const PseudoTable& A, const PseudoTable& B);
bool table_is_zero(const PseudoTable& T);

// ---- reduced complex, coefficients in L (x) L ----

using Cochain1 = std::vector<LTensor>;                                  // gamma(a_i)
using Cochain2 = std::map<std::pair<int, int>, PseudoTensor<LLKey>>;     // beta(a_i, a_j)
using Cochain3 = std::map<std::array<int, 3>, PseudoTensor<LLKey>>;

// d(1 (x)_H X)(a_i) for X in L (x) L.
std::vector<LTensor> cochain_differential(const PseudoTable& T, const LTensor& X);
Cochain2 cochain_differential(const PseudoTable& T, const Cochain1& gamma);
Cochain3 cochain_differential(const PseudoTable& T, const Cochain2& beta);

// sum over slots of h . (... c ...) where a * (slot factor) = sum (h (x) 1) (x)_H c; any arity.
LTensor ad_collapse(const PseudoTable& T, int a, const LTensor& X);

// delta_r(a) = sum mu([a, a_i] (x) b_i + sigma12 (a_i (x) [a, b_i])).
Cobracket coboundary_delta(const PseudoTable& T, const LTensor& r);
// Fourier transform of [u * v] as sum h (x) c.
MixedTensor fourier_bracket(const PseudoTable& T, const ModuleElement& u, const ModuleElement& v,
                            const std::vector<MixedTensor::Place>& before = {},
                            const std::vector<MixedTensor::Place>& after = {});
LTensor classical_ybe(const PseudoTable& T, const LTensor& r);

struct CybeReport {
  bool invariance = false;      // delta_{r + r21} = 0
  bool cybe_mod = false;        // mu_3(a . [[r,r]]) = 0 for all basis a
  bool rr_hplus_zero = false;   // [[r,r]] = 0 mod H_+ (L (x) L (x) L)
  bool quasitriangular = false;
  bool theorem = false;         // invariance and cybe_mod
  bool direct = false;          // delta_r passes check_coalgebra and check_cocycle
  LTensor rr;
  Cobracket delta;
  std::string witness;
};
CybeReport cybe_check(const PseudoTable& T, const LTensor& r);

}  // namespace pseudo
