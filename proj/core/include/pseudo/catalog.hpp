#pragma once

#include "pseudo/bialgebra.hpp"

#include <optional>

namespace pseudo {

// gc_n on labels 1 (x) D^(J) (x) E_pq, |J| <= max_degree. Entries whose value would leave the
// stored labels are absent and raise WindowEscape.
struct GcLayout {
  int n = 1;
  int max_degree = 0;
  std::vector<MultiIndex> degrees;  // per label
  std::vector<std::pair<int, int>> units;
  int label(const MultiIndex& J, int p, int q) const;
};
struct CatalogEntry {
  std::string name;
  PseudoTable table;
  std::optional<Cobracket> cobracket;
  std::optional<LTensor> r;
  std::string note;
  // Labels used for axiom checks; empty means all. Set for windowed infinite-rank entries.
  std::vector<int> window;
  // build_solvable: (S (x) 1)Delta(S(h)p) = -(1 (x) S)Delta(S(h)p)
  std::optional<bool> compatible;
  // build_solvable with r attached: delta_h == coboundary_delta(r)
  std::optional<bool> coboundary_matches;
  // set by build_gc
  std::optional<GcLayout> gc;
};

// delta-bar(a_k) = sum c (a_i (x) a_j) on g, keyed by k then (i, j).
using ClassicalCobracket = std::map<int, std::map<std::pair<int, int>, Rational>>;

// Cur(g) = H (x) g with [a*b] = (1 (x) 1) (x)_H [a, b]; with delta-bar the cobracket f.delta-bar(a).
CatalogEntry build_current(HopfPtr H, const LieAlgebraPresentation& g,
                           const std::optional<ClassicalCobracket>& cobracket = std::nullopt);

// L_p = Ha + Hb, [a*b] = (p (x) 1) (x)_H b. With h: delta_h(a) = 0, delta_h(b) = S(h)a (x) b - b (x) S(h)a,
// and r = 1/2 (a (x) ha - ha (x) a) when S(h) = -h and the compatibility condition holds.
CatalogEntry build_solvable(HopfPtr H, const HopfElement& p, const std::optional<HopfElement>& h = std::nullopt);
bool solvable_compatible(const HopfAlgebra& H, const HopfElement& p, const HopfElement& h);

// Axiom window |J| <= window; labels are stored up to 3 * window so Jacobi on the window stays inside.
CatalogEntry build_gc(HopfPtr H, int n, int window);
GcLayout gc_layout(const CatalogEntry& gc);

// The displayed four-term delta_r(1 (x) a) on gc_1 for r = (f (x) 1) ^ (g (x) 1).
LTensor gc1_display_delta(const CatalogEntry& gc, const HopfElement& f, const HopfElement& g, const HopfElement& a);
// r = (f (x) 1) ^ (g (x) 1)
LTensor gc1_r(const CatalogEntry& gc, const HopfElement& f, const HopfElement& g);
// 1 (x) a as an element of gc_1
ModuleElement gc1_element(const CatalogEntry& gc, const HopfElement& x, const HopfElement& a);

// Rank 1, [a*a] = (1 (x) 1) (x)_H a: fails skew-symmetry.
CatalogEntry build_broken(HopfPtr H);

// Fixtures over k[D] and over U(2-dim solvable) with D = D^(1,0).
std::vector<CatalogEntry> standard_catalog();

}  // namespace pseudo
