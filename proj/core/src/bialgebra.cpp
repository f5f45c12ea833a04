#include "pseudo/bialgebra.hpp"

namespace pseudo {

Cobracket::Cobracket(HopfPtr H, int rank) : H_(std::move(H)), d_(static_cast<std::size_t>(rank), LTensor(2)) {}

void Cobracket::set(int i, LTensor v) {
  if (v.arity() != 2) throw std::invalid_argument("Cobracket::set: value must lie in L (x) L");
  d_.at(static_cast<std::size_t>(i)) = std::move(v);
}

LTensor Cobracket::apply(const ModuleElement& m) const {
  LTensor out(2);
  for (const auto& [i, c] : m.coeffs()) out += act(*H_, c, value(i));
  return out;
}

namespace {

// m_1 (x) delta(m_2) and delta(m_1) (x) m_2 for every term of X.
LTensor id_tensor_delta(const Cobracket& C, const LTensor& X, bool delta_first) {
  const HopfAlgebra& H = *C.algebra();
  LTensor out(3);
  for (const auto& [s, c] : X.terms()) {
    int k = delta_first ? 0 : 1;
    LTensor d = act(H, H.mono(s.idx[static_cast<std::size_t>(k)]), C.value(s.labels[static_cast<std::size_t>(k)]));
    for (const auto& [u, c2] : d.terms()) {
      if (delta_first)
        out.add_term({u.labels[0], u.labels[1], s.labels[1]}, {u.idx[0], u.idx[1], s.idx[1]}, c * c2);
      else
        out.add_term({s.labels[0], u.labels[0], u.labels[1]}, {s.idx[0], u.idx[0], u.idx[1]}, c * c2);
    }
  }
  return out;
}

}  // namespace

CoalgebraReport check_coalgebra(const Cobracket& C) {
  CoalgebraReport r;
  for (int i = 0; i < C.rank(); ++i) {
    const LTensor& d = C.value(i);
    LTensor w = d + d.swap12();
    if (!w.is_zero()) {
      r.ok = r.wedge = false;
      if (r.witness.empty()) r.witness = "wedge fails on a" + std::to_string(i + 1) + ": " + w.to_string();
    }
    LTensor a = id_tensor_delta(C, d, false);
    LTensor j = a - a.permute({1, 0, 2}) - id_tensor_delta(C, d, true);
    if (!j.is_zero()) {
      r.ok = r.cojacobi = false;
      if (r.witness.empty()) r.witness = "co-Jacobi fails on a" + std::to_string(i + 1) + ": " + j.to_string();
    }
  }
  return r;
}

Verdict check_cocycle(const PseudoTable& T, const Cobracket& C) {
  Verdict v;
  Cochain1 g;
  for (int i = 0; i < C.rank(); ++i) g.push_back(C.value(i));
  for (const auto& [ij, val] : cochain_differential(T, g))
    if (!val.is_zero()) {
      v.ok = false;
      v.witness = "cocycle fails on (a" + std::to_string(ij.first + 1) + ", a" + std::to_string(ij.second + 1) +
                  "): " + val.to_string();
      break;
    }
  return v;
}

Cobracket dualize_to_cobracket(const PseudoTable& T) {
  const HopfAlgebra& H = *T.algebra();
  Cobracket C(T.algebra(), T.rank());
  std::vector<LTensor> d(static_cast<std::size_t>(T.rank()), LTensor(2));
  for (int i = 0; i < T.rank(); ++i)
    for (int j = 0; j < T.rank(); ++j)
      for (const auto& [k, F] : T.entry(i, j).to_bare())
        for (const auto& [key, c] : F.terms())
          d[static_cast<std::size_t>(k)].add_pure({H.antipode_monomial(key[0]), H.antipode_monomial(key[1])}, {i, j}, c);
  for (int k = 0; k < T.rank(); ++k) C.set(k, std::move(d[static_cast<std::size_t>(k)]));
  return C;
}

int required_cutoff(const Cobracket& C) {
  int n = 0;
  for (int k = 0; k < C.rank(); ++k)
    for (const auto& [s, c] : C.value(k).terms()) n = std::max(n, s.idx[0].degree() + s.idx[1].degree());
  return n;
}

PseudoTable cobracket_to_pseudobracket(const Cobracket& C, int cutoff) {
  const HopfAlgebra& H = *C.algebra();
  const int r = C.rank();
  const int need = required_cutoff(C);
  if (cutoff < need)
    throw CutoffTooSmall("cutoff " + std::to_string(cutoff) + " is below the locality bound " + std::to_string(need));
  int top = 0;
  for (int k = 0; k < r; ++k)
    for (const auto& [s, c] : C.value(k).terms()) top = std::max({top, s.idx[0].degree(), s.idx[1].degree()});

  PseudoTable T(C.algebra(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      PT out(C.algebra(), 2);
      for (const auto& I : indices_up_to(H.dim(), cutoff)) {
        DualElement x = DualElement::basis(I);
        CoproductTable tab = x_coproduct_truncated(H, x, top);
        for (int k = 0; k < r; ++k) {
          // Fourier coefficients [r^i_x r^j]_{t_J}(r_k)
          std::map<MultiIndex, Rational> phi;
          for (const auto& [s, c] : C.value(k).terms()) {
            if (s.labels[0] != i || s.labels[1] != j) continue;
            const MultiIndex& U = s.idx[0];
            const MultiIndex& V = s.idx[1];
            for (const auto& [AB, w] : tab) {
              if (!(AB.second == U)) continue;
              DualElement sa = x_antipode(H, DualElement::basis(AB.first), V.degree());
              for (const auto& J : sub_indices(V)) {
                Rational p = pair(x_mul(DualElement::basis(J), sa), H.mono(V));
                if (p != 0) phi[J] += c * w * p;
              }
            }
          }
          HopfElement sc(H.dim());
          for (const auto& [J, v] : phi) sc.add_term(J, v);
          HopfElement ck = H.antipode(sc);
          if (!ck.is_zero()) out.add_raw({H.antipode_monomial(I), H.one()}, ck, k);
        }
      }
      T.set(i, j, std::move(out));
    }
  return T;
}

PseudoTable table_difference(const PseudoTable& A, const PseudoTable& B) {
  if (A.rank() != B.rank() || A.rank_left() != B.rank_left()) throw std::invalid_argument("table_difference: rank mismatch");
  PseudoTable D(A.algebra(), A.rank_left(), A.rank_right());
  for (int i = 0; i < A.rank_left(); ++i)
    for (int j = 0; j < A.rank_right(); ++j) D.set(i, j, A.entry(i, j) - B.entry(i, j));
  return D;
}

bool table_is_zero(const PseudoTable& T) {
  for (const auto& [ij, v] : T.entries())
    if (!v.is_zero()) return false;
  return true;
}

// ---- reduced complex ----

std::vector<LTensor> cochain_differential(const PseudoTable& T, const LTensor& X) {
  const HopfAlgebra& H = *T.algebra();
  std::vector<LTensor> out;
  for (int a = 0; a < T.rank(); ++a) {
    LTensor v(2);
    // (id (x) eps) collapses (h (x) 1) (x)_H m to h m
    PseudoTensor<LLKey> ax = tensor_action(T, a, X);
    for (const auto& [t, s] : ax.terms()) {
      LTensor y = ll_compose(H, t.key, H.mul_monomials(t.slots[0], t.coeff));
      y *= s;
      v += y;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Cochain2 cochain_differential(const PseudoTable& T, const Cochain1& gamma) {
  const HopfAlgebra& H = *T.algebra();
  if (static_cast<int>(gamma.size()) != T.rank()) throw std::invalid_argument("1-cochain: wrong number of values");
  Cochain2 out;
  for (int a1 = 0; a1 < T.rank(); ++a1)
    for (int a2 = 0; a2 < T.rank(); ++a2) {
      PseudoTensor<LLKey> v = tensor_action(T, a1, gamma[static_cast<std::size_t>(a2)]);
      v -= tensor_action(T, a2, gamma[static_cast<std::size_t>(a1)]).swap12();
      for (const auto& [t, s] : T.entry(a1, a2).terms())
        add_ll(v, {H.mono(t.slots[0]), H.one()}, act(H, H.mono(t.coeff), gamma[static_cast<std::size_t>(t.key)]), -s);
      out.emplace(std::make_pair(a1, a2), std::move(v));
    }
  return out;
}

namespace {

// a * (F (x)_H b) for F (x)_H b in (H (x) H) (x)_H (L (x) L)
PseudoTensor<LLKey> act_on_value(const PseudoTable& T, int a, const PseudoTensor<LLKey>& F) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTensor<LLKey> out(T.algebra(), 3);
  for (const auto& [t, s] : F.terms()) {
    PseudoTensor<LLKey> ab = tensor_action(T, a, t.key).mul_slots({H.one(), H.mono(t.coeff)});
    for (const auto& [u, s2] : ab.terms())
      out.add_raw({H.mono(u.slots[0]), H.mono(t.slots[0]), H.one()}, H.mono(u.coeff), u.key, s * s2);
  }
  return out;
}

// beta([a_i * a_j], a_m)
PseudoTensor<LLKey> beta_of_bracket(const PseudoTable& T, const Cochain2& beta, int i, int j, int m) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTensor<LLKey> out(T.algebra(), 3);
  for (const auto& [t, s] : T.entry(i, j).terms()) {
    PseudoTensor<LLKey> p = beta.at({t.key, m}).mul_slots({H.mono(t.coeff), H.one()});
    HopfElement h = H.mono(t.slots[0]);
    for (const auto& [u, s2] : p.terms()) {
      TensorPower dp = H.coproduct(H.mono(u.slots[0]), 2);
      for (const auto& [key, c] : dp.terms())
        out.add_raw({H.mul(h, H.mono(key[0])), H.mono(key[1]), H.one()}, H.mono(u.coeff), u.key, s * s2 * c);
    }
  }
  return out;
}

}  // namespace

Cochain3 cochain_differential(const PseudoTable& T, const Cochain2& beta) {
  Cochain3 out;
  const int r = T.rank();
  for (int a1 = 0; a1 < r; ++a1)
    for (int a2 = 0; a2 < r; ++a2)
      for (int a3 = 0; a3 < r; ++a3) {
        std::array<int, 3> a{a1, a2, a3};
        PseudoTensor<LLKey> v(T.algebra(), 3);
        // sigma_{1->i}: leading slot to position i, others keep their order
        for (int i = 0; i < 3; ++i) {
          int p = a[static_cast<std::size_t>((i + 1) % 3)], q = a[static_cast<std::size_t>((i + 2) % 3)];
          if (i == 1) std::swap(p, q);
          std::vector<int> sigma{i, i == 0 ? 1 : 0, i == 2 ? 1 : 2};
          PseudoTensor<LLKey> term = act_on_value(T, a[static_cast<std::size_t>(i)], beta.at({p, q})).permute(sigma);
          if (i % 2) v -= term;
          else v += term;
        }
        // sigma_{1->i, 2->j}
        const std::array<std::array<int, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
        for (const auto& [i, j, m] : pairs) {
          PseudoTensor<LLKey> term =
              beta_of_bracket(T, beta, a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)], a[static_cast<std::size_t>(m)])
                  .permute({i, j, m});
          if ((i + j) % 2) v -= term;  // (-1)^{(i+1)+(j+1)}
          else v += term;
        }
        out.emplace(a, std::move(v));
      }
  return out;
}

LTensor ad_collapse(const PseudoTable& T, int a, const LTensor& X) {
  const HopfAlgebra& H = *T.algebra();
  const int m = X.arity();
  LTensor out(m);
  for (const auto& [s, c] : X.terms())
    for (int k = 0; k < m; ++k) {
      PT e = T.entry(a, s.labels[static_cast<std::size_t>(k)]).mul_slots({H.one(), H.mono(s.idx[static_cast<std::size_t>(k)])});
      for (const auto& [t, s2] : e.terms()) {
        LTensor y(m);
        std::vector<HopfElement> f;
        std::vector<int> labels = s.labels;
        for (int q = 0; q < m; ++q) f.push_back(H.mono(s.idx[static_cast<std::size_t>(q)]));
        f[static_cast<std::size_t>(k)] = H.mono(t.coeff);
        labels[static_cast<std::size_t>(k)] = t.key;
        y.add_pure(f, labels, c * s2);
        out += act(H, H.mono(t.slots[0]), y);
      }
    }
  return out;
}

MixedTensor fourier_bracket(const PseudoTable& T, const ModuleElement& u, const ModuleElement& v,
                            const std::vector<MixedTensor::Place>& before,
                            const std::vector<MixedTensor::Place>& after) {
  const HopfAlgebra& H = *T.algebra();
  MixedTensor out;
  PT uv = extend_bracket(T, u, v);
  for (const auto& [t, s] : uv.terms()) {
    std::vector<MixedTensor::Place> places = before;
    places.emplace_back(H.mono(t.slots[0]));
    places.emplace_back(ModuleElement::basis(t.key, H.mono(t.coeff)));
    places.insert(places.end(), after.begin(), after.end());
    out.add(places, s);
  }
  return out;
}

namespace {

struct RTerm {
  ModuleElement a, b;
  Rational c;
};

std::vector<RTerm> split(const HopfAlgebra& H, const LTensor& r) {
  std::vector<RTerm> out;
  for (const auto& [s, c] : r.terms())
    out.push_back({ModuleElement::basis(s.labels[0], H.mono(s.idx[0])), ModuleElement::basis(s.labels[1], H.mono(s.idx[1])), c});
  return out;
}

}  // namespace

Cobracket coboundary_delta(const PseudoTable& T, const LTensor& r) {
  const HopfAlgebra& H = *T.algebra();
  if (r.arity() != 2) throw std::invalid_argument("coboundary_delta: r must lie in L (x) L");
  Cobracket C(T.algebra(), T.rank());
  auto terms = split(H, r);
  for (int a = 0; a < T.rank(); ++a) {
    ModuleElement ea = ModuleElement::basis(H, a);
    MixedTensor m;
    for (const auto& t : terms) {
      MixedTensor first = fourier_bracket(T, ea, t.a, {}, {t.b});
      // sigma12 (a_i (x) [a, b_i]) = h (x) a_i (x) c
      MixedTensor second;
      MixedTensor ab = fourier_bracket(T, ea, t.b);
      for (const auto& term : ab.terms())
        second.add({term.places[0], t.a, term.places[1]}, term.scale);
      for (const auto& term : first.terms()) m.add(term.places, term.scale * t.c);
      for (const auto& term : second.terms()) m.add(term.places, term.scale * t.c);
    }
    C.set(a, m.mu(H, 0, {1, 2}).to_ltensor(2));
  }
  return C;
}

LTensor classical_ybe(const PseudoTable& T, const LTensor& r) {
  const HopfAlgebra& H = *T.algebra();
  auto terms = split(H, r);
  MixedTensor t1, t2, t3;
  for (const auto& ti : terms)
    for (const auto& tj : terms) {
      Rational c = ti.c * tj.c;
      MixedTensor f1 = fourier_bracket(T, tj.a, ti.a, {}, {tj.b, ti.b});
      MixedTensor f2 = fourier_bracket(T, tj.a, ti.b, {ti.a}, {tj.b});
      MixedTensor f3 = fourier_bracket(T, tj.b, ti.b, {ti.a, tj.a});
      for (const auto& x : f1.terms()) t1.add(x.places, c * x.scale);
      for (const auto& x : f2.terms()) t2.add(x.places, c * x.scale);
      for (const auto& x : f3.terms()) t3.add(x.places, c * x.scale);
    }
  LTensor out = t1.mu(H, 0, {2}, true).to_ltensor(3);
  out -= t2.mu(H, 1, {3}, true).to_ltensor(3);
  out -= t3.mu(H, 2, {1}, true).to_ltensor(3);
  return out;
}

CybeReport cybe_check(const PseudoTable& T, const LTensor& r) {
  const HopfAlgebra& H = *T.algebra();
  CybeReport rep;
  rep.delta = coboundary_delta(T, r);
  Cobracket sym = coboundary_delta(T, r + r.swap12());
  rep.invariance = true;
  for (int a = 0; a < T.rank(); ++a)
    if (!sym.value(a).is_zero()) {
      rep.invariance = false;
      if (rep.witness.empty()) rep.witness = "delta_{r+r21}(a" + std::to_string(a + 1) + ") = " + sym.value(a).to_string();
    }
  rep.rr = classical_ybe(T, r);
  rep.cybe_mod = true;
  for (int a = 0; a < T.rank(); ++a) {
    LTensor v = ad_collapse(T, a, rep.rr);
    if (!v.is_zero()) {
      rep.cybe_mod = false;
      if (rep.witness.empty()) rep.witness = "mu3(a" + std::to_string(a + 1) + ".[[r,r]]) = " + v.to_string();
    }
  }
  rep.rr_hplus_zero = hplus_reduce(H, rep.rr).is_zero();
  rep.quasitriangular = rep.invariance && rep.rr_hplus_zero;
  rep.theorem = rep.invariance && rep.cybe_mod;
  rep.direct = check_coalgebra(rep.delta).ok && check_cocycle(T, rep.delta).ok;
  return rep;
}

}  // namespace pseudo
