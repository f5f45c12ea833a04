#include "pseudo/annihilation.hpp"

namespace pseudo {

DualElement right_act(const HopfAlgebra& H, const HopfElement& h, const DualElement& x) {
  H.require_abelian("the annihilation algebra");
  // for abelian d, <x, S(h) f> = <x, f S(h)>
  return act(H, h, x, Side::Right);
}

AnnihilationElement AnnihilationElement::zero(int dim, int rank) {
  return {std::vector<DualElement>(static_cast<std::size_t>(rank), DualElement(dim))};
}

AnnihilationElement AnnihilationElement::basis(int dim, int rank, const MultiIndex& I, int k) {
  AnnihilationElement u = zero(dim, rank);
  u.y.at(static_cast<std::size_t>(k)).add_term(I, 1);
  return u;
}

AnnihilationElement& AnnihilationElement::operator+=(const AnnihilationElement& o) {
  if (y.size() != o.y.size()) throw std::invalid_argument("AnnihilationElement: rank mismatch");
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += o.y[k];
  return *this;
}

AnnihilationElement& AnnihilationElement::operator*=(const Rational& c) {
  for (auto& v : y) v *= c;
  return *this;
}

bool AnnihilationElement::is_zero() const {
  for (const auto& v : y)
    if (!v.is_zero()) return false;
  return true;
}

std::string AnnihilationElement::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + y[k].to_string() + ")(x)" + key_to_string(static_cast<int>(k));
  }
  return s.empty() ? "0" : s;
}

std::string ConvolutionMap::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ", ";
    s += "a^" + std::to_string(k + 1) + " -> " + values[k].to_string();
  }
  return s;
}

AnnihilationElement ann_class(const HopfAlgebra& H, int rank, const DualElement& x, const ModuleElement& m) {
  AnnihilationElement u = AnnihilationElement::zero(H.dim(), rank);
  for (const auto& [k, h] : m.coeffs()) u.y.at(static_cast<std::size_t>(k)) += right_act(H, h, x);
  return u;
}

AnnihilationElement ann_class_of_action(const HopfAlgebra& H, int rank, const HopfElement& h, const DualElement& x,
                                        int a) {
  AnnihilationElement u = AnnihilationElement::zero(H.dim(), rank);
  TensorPower dh = H.coproduct(h, 2);
  for (const auto& [key, c] : dh.terms()) {
    DualElement xs = right_act(H, H.antipode_monomial(key[0]), x);
    AnnihilationElement v = ann_class(H, rank, xs, ModuleElement::basis(a, H.mono(key[1])));
    v *= c;
    u += v;
  }
  return u;
}

PseudoTensor<YLKey> affinize_bracket(const PseudoTable& T, const DualElement& x, int i, const DualElement& y, int j) {
  const HopfAlgebra& H = *T.algebra();
  H.require_abelian("the affinization");
  PseudoTensor<YLKey> out(T.algebra(), 2);
  for (const auto& [e, F] : T.entry(i, j).to_bare())
    for (const auto& [key, c] : F.terms())
      for (const auto& fp : H.coproduct_monomial(key[0], 2))
        for (const auto& gp : H.coproduct_monomial(key[1], 2)) {
          DualElement z = x_mul(right_act(H, H.mono(fp[1]), x), right_act(H, H.mono(gp[1]), y));
          for (const auto& [I, zc] : z.terms()) out.add_raw({H.mono(fp[0]), H.mono(gp[0])}, H.one(), YLKey{I, e}, c * zc);
        }
  return out;
}

KeyAction<YLKey, YLKey> affinization_action(const PseudoTable& T) {
  return [&T](const YLKey& u, const YLKey& v) {
    return affinize_bracket(T, DualElement::basis(u.I), u.k, DualElement::basis(v.I), v.k);
  };
}

LieReport check_affinization(const PseudoTable& T, int max_degree, std::size_t max_failures) {
  const int n = T.algebra()->dim();
  std::vector<YLKey> keys;
  for (int k = 0; k < T.rank(); ++k)
    for (const auto& I : indices_up_to(n, max_degree)) keys.push_back({I, k});
  auto br = affinization_action(T);
  auto name = [](const YLKey& k) { return key_to_string(k); };
  LieReport rep;
  auto fail = [&](const std::string& kind, const std::string& w) {
    rep.ok = false;
    if (rep.failures.size() < max_failures) rep.failures.push_back({kind, {}, w});
  };
  for (const auto& a : keys)
    for (const auto& b : keys) {
      PseudoTensor<YLKey> s = skew_defect<YLKey>(br, a, b);
      if (!s.is_zero()) fail("skew", name(a) + ", " + name(b) + ": " + s.to_string());
      for (const auto& c : keys) {
        PseudoTensor<YLKey> j = representation_defect<YLKey, YLKey>(br, br, a, b, c);
        if (!j.is_zero()) fail("jacobi", name(a) + ", " + name(b) + ", " + name(c) + ": " + j.to_string());
      }
    }
  return rep;
}

AnnihilationElement ann_bracket(const PseudoTable& T, const AnnihilationElement& u, const AnnihilationElement& v) {
  const HopfAlgebra& H = *T.algebra();
  const int r = T.rank();
  if (static_cast<int>(u.y.size()) != r || static_cast<int>(v.y.size()) != r)
    throw std::invalid_argument("ann_bracket: rank mismatch");
  AnnihilationElement out = AnnihilationElement::zero(H.dim(), r);
  for (int i = 0; i < r; ++i) {
    if (u.y[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (v.y[static_cast<std::size_t>(j)].is_zero()) continue;
      for (const auto& [e, F] : T.entry(i, j).to_bare())
        for (const auto& [key, c] : F.terms()) {
          DualElement z = x_mul(right_act(H, H.mono(key[0]), u.y[static_cast<std::size_t>(i)]),
                                right_act(H, H.mono(key[1]), v.y[static_cast<std::size_t>(j)]));
          z *= c;
          out.y[static_cast<std::size_t>(e)] += z;
        }
    }
  }
  return out;
}

DualElement evaluate(const HopfAlgebra& H, const ConvolutionMap& alpha, const ModuleElement& f) {
  DualElement out(H.dim());
  for (const auto& [k, h] : f.coeffs()) out += right_act(H, H.antipode(h), alpha.values.at(static_cast<std::size_t>(k)));
  return out;
}

ConvolutionMap convolution_bracket(const Cobracket& C, const ConvolutionMap& f, const ConvolutionMap& g) {
  const HopfAlgebra& H = *C.algebra();
  ConvolutionMap out;
  for (int k = 0; k < C.rank(); ++k) {
    DualElement v(H.dim());
    for (const auto& [s, c] : C.value(k).terms()) {
      DualElement z = x_mul(evaluate(H, f, ModuleElement::basis(s.labels[0], H.mono(s.idx[0]))),
                            evaluate(H, g, ModuleElement::basis(s.labels[1], H.mono(s.idx[1]))));
      z *= c;
      v += z;
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

ConvolutionMap phi_iso(const PseudoTable& T, const AnnihilationElement& u) {
  if (static_cast<int>(u.y.size()) != T.rank()) throw std::invalid_argument("phi: rank mismatch");
  // a^i(a_k) = delta_ik (1 (x) 1) (x)_H 1, so phi(x (x) a_k)(a^i) = delta_ik x
  return ConvolutionMap{u.y};
}

AnnihilationElement phi_inv(const PseudoTable& T, const ConvolutionMap& alpha) {
  if (static_cast<int>(alpha.values.size()) != T.rank()) throw std::invalid_argument("phi_inv: rank mismatch");
  return AnnihilationElement{alpha.values};
}

}  // namespace pseudo
