#pragma once

#include "pseudo/dual.hpp"
#include "pseudo/module.hpp"

namespace pseudo {

using PT = PseudoTensor<int>;

// A bracket entry outside the finite window of an infinite-rank algebra was requested.
struct WindowEscape : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct AxiomFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Values a_i * m_j in (H (x) H) (x)_H M for basis elements of L and of a free module M.
// A Lie pseudoalgebra bracket is the square case M = L.
class PseudoTable {
 public:
  PseudoTable() = default;
  PseudoTable(HopfPtr H, int rank_left, int rank_right);
  PseudoTable(HopfPtr H, int rank) : PseudoTable(std::move(H), rank, rank) {}

  const HopfPtr& algebra() const { return H_; }
  int rank_left() const { return rl_; }
  int rank_right() const { return rr_; }
  int rank() const { return rr_; }

  void set(int i, int j, PT value);
  bool has(int i, int j) const { return e_.count({i, j}) > 0; }
  // Throws WindowEscape when the entry lies outside the stored window.
  const PT& entry(int i, int j) const;
  const std::map<std::pair<int, int>, PT>& entries() const { return e_; }
  PT zero(int arity = 2) const { return PT(H_, arity); }

  std::vector<std::string> labels;
  std::string name;

 private:
  HopfPtr H_;
  int rl_ = 0, rr_ = 0;
  std::map<std::pair<int, int>, PT> e_;
};

using BracketTable = PseudoTable;

template <class LK, class MK>
using KeyAction = std::function<PseudoTensor<MK>(const LK&, const MK&)>;

// ((a * b) * c) from [a * b] and the action of keys on c.
template <class LK, class MK>
PseudoTensor<MK> compose_left(const PseudoTensor<LK>& ab, const MK& c, const KeyAction<LK, MK>& act) {
  const HopfAlgebra& H = *ab.algebra();
  PseudoTensor<MK> out(ab.algebra(), 3);
  for (const auto& [t, s] : ab.terms()) {
    HopfElement h = H.mono(t.slots[0]);
    HopfElement coef = H.mono(t.coeff);
    PseudoTensor<MK> ec = act(t.key, c);
    for (const auto& [u, s2] : ec.terms()) {
      // ((coef g (x) 1) (x)_H e') placed after h: (h X(1) (x) X(2) (x) 1)
      HopfElement X = H.mul(coef, H.mono(u.slots[0]));
      TensorPower dX = H.coproduct(X, 2);
      for (const auto& [key, c2] : dX.terms())
        out.add_raw({H.mul(h, H.mono(key[0])), H.mono(key[1]), H.one()}, H.mono(u.coeff), u.key, s * s2 * c2);
    }
  }
  return out;
}

// (a * (b * c)) from b * c and the action of a on keys.
template <class LK, class MK>
PseudoTensor<MK> compose_right(const LK& a, const PseudoTensor<MK>& bc, const KeyAction<LK, MK>& act) {
  const HopfAlgebra& H = *bc.algebra();
  PseudoTensor<MK> out(bc.algebra(), 3);
  for (const auto& [t, s] : bc.terms()) {
    HopfElement h = H.mono(t.slots[0]);
    TensorPower dc = H.coproduct(H.mono(t.coeff), 2);
    PseudoTensor<MK> am = act(a, t.key);
    for (const auto& [u, s2] : am.terms())
      for (const auto& [key, c2] : dc.terms())
        out.add_raw({H.mono(u.slots[0]), H.mul(h, H.mono(key[0])), H.mono(key[1])}, H.mono(u.coeff), u.key,
                    s * s2 * c2);
  }
  return out;
}

// a*(b*m) - (sigma12) b*(a*m) - (a*b)*m. Zero for a representation, and with act = br for a Lie pseudoalgebra.
template <class LK, class MK>
PseudoTensor<MK> representation_defect(const KeyAction<LK, LK>& br, const KeyAction<LK, MK>& act, const LK& a,
                                       const LK& b, const MK& m) {
  PseudoTensor<MK> lhs = compose_right<LK, MK>(a, act(b, m), act);
  lhs -= compose_right<LK, MK>(b, act(a, m), act).swap12();
  lhs -= compose_left<LK, MK>(br(a, b), m, act);
  return lhs;
}

// [a*b] + (sigma (x)_H id)[b*a]
template <class K>
PseudoTensor<K> skew_defect(const KeyAction<K, K>& br, const K& a, const K& b) {
  return br(a, b) + br(b, a).swap12();
}

KeyAction<int, int> key_action(const PseudoTable& T);

// [u * v] for arbitrary module elements, extended H-bilinearly.
PT extend_bracket(const PseudoTable& T, const ModuleElement& u, const ModuleElement& v);

struct AxiomReportEntry {
  std::string kind;  // "skew", "jacobi" or "representation"
  std::vector<int> indices;
  std::string witness;
};

struct LieReport {
  bool ok = true;
  std::vector<AxiomReportEntry> failures;
};

// Checks skew-commutativity and Jacobi on basis pairs/triples drawn from `window`
// (all labels when empty). Stops collecting after `max_failures`.
LieReport check_lie_axioms(const PseudoTable& T, const std::vector<int>& window = {}, std::size_t max_failures = 8);
LieReport check_representation(const PseudoTable& T, const PseudoTable& A, std::size_t max_failures = 8);

// ---- x-brackets ----

// [a_x b] = sum <x, S(h_i)> c_i over the canonical form of [a * b].
ModuleElement x_bracket(const PseudoTable& T, const ModuleElement& a, const DualElement& x, const ModuleElement& b);
// Smallest n with [a_{t_I} b] = 0 for all |I| >= n; 0 for a zero bracket.
int locality_bound(const PseudoTable& T, int i, int j);
// sum_{|I| < bound} (S(D^(I)) (x) 1) (x)_H [a_{t_I} b]
PT reconstruct_from_x_brackets(const PseudoTable& T, const ModuleElement& a, const ModuleElement& b, int bound);

struct ConformalReport {
  bool ok = true;
  std::map<std::pair<int, int>, int> locality;
  std::vector<AxiomReportEntry> failures;
};

// Locality, both sesquilinearity rules, skew-symmetry and Jacobi for x-brackets
// on dual basis elements t_I with |I| <= sample_degree.
ConformalReport check_conformal_axioms(const PseudoTable& T, int sample_degree, const std::vector<int>& window = {},
                                       std::size_t max_failures = 8);

// ---- modules built from L ----

// Action of L on L (x) L by a*(m (x) n) = (a*m) (x) n + m (x) (a*n), on the free basis a_i (x) D^(J) a_j.
PseudoTensor<LLKey> tensor_action(const PseudoTable& T, int a, const LLKey& k);
// Same for an arbitrary L (x) L element.
PseudoTensor<LLKey> tensor_action(const PseudoTable& T, int a, const LTensor& X);
// Raw element (f (x) g) (x)_H X of (H (x) H) (x)_H (L (x) L), X in L (x) L.
void add_ll(PseudoTensor<LLKey>& out, const std::vector<HopfElement>& f, const LTensor& X, const Rational& scale = 1);

// Coadjoint action of L on L* = Chom(L, k) in the dual basis a^j.
PseudoTable chom_dual(const PseudoTable& T);

// The identification L* (x) L -> Chom(L, L) is an L-module map: checks it on basis a, a^i, a_j, a_k.
struct ChomCheck {
  bool ok = true;
  std::string witness;
};
ChomCheck check_chom_identification(const PseudoTable& T);

}  // namespace pseudo
