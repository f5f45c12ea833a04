#include "pseudo/lie.hpp"

#include <algorithm>
#include <numeric>

namespace pseudo {

PseudoTable::PseudoTable(HopfPtr H, int rank_left, int rank_right)
    : H_(std::move(H)), rl_(rank_left), rr_(rank_right) {
  if (rl_ < 0 || rr_ < 0) throw std::invalid_argument("PseudoTable: negative rank");
}

void PseudoTable::set(int i, int j, PT value) {
  if (i < 0 || i >= rl_ || j < 0 || j >= rr_) throw std::out_of_range("PseudoTable::set: label out of range");
  if (value.arity() != 2) throw std::invalid_argument("PseudoTable::set: entries must have arity 2");
  for (const auto& [t, c] : value.terms())
    if (t.key < 0 || t.key >= rr_) throw std::out_of_range("PseudoTable::set: value label out of range");
  e_[{i, j}] = std::move(value);
}

const PT& PseudoTable::entry(int i, int j) const {
  auto it = e_.find({i, j});
  if (it == e_.end()) {
    if (i < 0 || i >= rl_ || j < 0 || j >= rr_)
      throw WindowEscape("bracket label out of range: " + std::to_string(i + 1) + "," + std::to_string(j + 1));
    throw WindowEscape("bracket entry outside window: " + std::to_string(i + 1) + "," + std::to_string(j + 1));
  }
  return it->second;
}

KeyAction<int, int> key_action(const PseudoTable& T) {
  return [&T](const int& a, const int& b) { return T.entry(a, b); };
}

PT extend_bracket(const PseudoTable& T, const ModuleElement& u, const ModuleElement& v) {
  PT out(T.algebra(), 2);
  for (const auto& [i, f] : u.coeffs())
    for (const auto& [j, g] : v.coeffs()) out += T.entry(i, j).mul_slots({f, g});
  return out;
}

static std::vector<int> labels_or_all(const std::vector<int>& window, int rank) {
  if (!window.empty()) return window;
  std::vector<int> all(static_cast<std::size_t>(rank));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

LieReport check_lie_axioms(const PseudoTable& T, const std::vector<int>& window, std::size_t max_failures) {
  LieReport r;
  auto labels = labels_or_all(window, T.rank());
  auto br = key_action(T);
  auto fail = [&](const std::string& kind, std::vector<int> idx, const std::string& w) {
    r.ok = false;
    if (r.failures.size() < max_failures) r.failures.push_back({kind, std::move(idx), w});
  };
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = x; y < labels.size(); ++y) {
      int a = labels[x], b = labels[y];
      try {
        PT d = skew_defect<int>(br, a, b);
        if (!d.is_zero()) fail("skew", {a, b}, d.to_string());
      } catch (const WindowEscape& e) {
        fail("window", {a, b}, e.what());
      }
    }
  for (int a : labels)
    for (int b : labels)
      for (int c : labels) {
        try {
          PT d = representation_defect<int, int>(br, br, a, b, c);
          if (!d.is_zero()) fail("jacobi", {a, b, c}, d.to_string());
        } catch (const WindowEscape& e) {
          fail("window", {a, b, c}, e.what());
        }
      }
  return r;
}

LieReport check_representation(const PseudoTable& T, const PseudoTable& A, std::size_t max_failures) {
  LieReport r;
  auto br = key_action(T);
  auto act = key_action(A);
  for (int a = 0; a < T.rank(); ++a)
    for (int b = 0; b < T.rank(); ++b)
      for (int m = 0; m < A.rank_right(); ++m) {
        PT d = representation_defect<int, int>(br, act, a, b, m);
        if (!d.is_zero()) {
          r.ok = false;
          if (r.failures.size() < max_failures) r.failures.push_back({"representation", {a, b, m}, d.to_string()});
        }
      }
  return r;
}

// ---- x-brackets ----

ModuleElement x_bracket(const PseudoTable& T, const ModuleElement& a, const DualElement& x, const ModuleElement& b) {
  const HopfAlgebra& H = *T.algebra();
  ModuleElement out;
  PT ab = extend_bracket(T, a, b);
  for (const auto& [t, s] : ab.terms()) {
    Rational p = pair(x, H.antipode_monomial(t.slots[0]));
    if (p != 0) out.add(t.key, H.mono(t.coeff, s * p));
  }
  return out;
}

int locality_bound(const PseudoTable& T, int i, int j) { return T.entry(i, j).max_slot_degree(0) + 1; }

PT reconstruct_from_x_brackets(const PseudoTable& T, const ModuleElement& a, const ModuleElement& b, int bound) {
  const HopfAlgebra& H = *T.algebra();
  PT out(T.algebra(), 2);
  if (bound <= 0) return out;
  for (const auto& I : indices_up_to(H.dim(), bound - 1)) {
    ModuleElement v = x_bracket(T, a, DualElement::basis(I), b);
    for (const auto& [k, c] : v.coeffs()) out.add_raw({H.antipode_monomial(I), H.one()}, c, k);
  }
  return out;
}

ConformalReport check_conformal_axioms(const PseudoTable& T, int sample_degree, const std::vector<int>& window,
                                       std::size_t max_failures) {
  ConformalReport r;
  const HopfAlgebra& H = *T.algebra();
  const int N = H.dim();
  auto labels = labels_or_all(window, T.rank());
  auto fail = [&](const std::string& kind, std::vector<int> idx, const std::string& w) {
    r.ok = false;
    if (r.failures.size() < max_failures) r.failures.push_back({kind, std::move(idx), w});
  };
  auto samples = indices_up_to(N, sample_degree);
  std::vector<HopfElement> hs;
  for (const auto& J : indices_up_to(N, 2))
    if (!J.is_zero()) hs.push_back(H.mono(J));
  auto basis = [&](int i) { return ModuleElement::basis(H, i); };
  auto loc = [&](int i, int j) { return r.locality.at({i, j}); };

  try {
    for (int a : labels)
      for (int b : labels) {
        int n = locality_bound(T, a, b);
        r.locality[{a, b}] = n;
        for (const auto& I : indices_up_to(N, n + 1))
          if (I.degree() >= n && !x_bracket(T, basis(a), DualElement::basis(I), basis(b)).is_zero())
            fail("locality", {a, b}, "nonzero x-bracket at t" + I.to_string());
        PT rec = reconstruct_from_x_brackets(T, basis(a), basis(b), n);
        if (!(rec == T.entry(a, b))) fail("reconstruction", {a, b}, (rec - T.entry(a, b)).to_string());
      }

    for (int a : labels)
      for (int b : labels) {
        int n = loc(a, b);
        std::optional<int> cut = std::max(n - 1, 0);
        for (const auto& I : samples) {
          DualElement x = DualElement::basis(I);
          for (const auto& h : hs) {
            ModuleElement lhs = x_bracket(T, ModuleElement::basis(a, h), x, basis(b));
            ModuleElement rhs = x_bracket(T, basis(a), act(H, h, x, Side::Right, cut), basis(b));
            if (!(lhs == rhs)) fail("sesquilinearity-left", {a, b}, "x=t" + I.to_string() + " h=" + h.to_string());

            lhs = x_bracket(T, basis(a), x, ModuleElement::basis(b, h));
            rhs = ModuleElement();
            TensorPower dh = H.coproduct(h, 2);
            for (const auto& [key, c] : dh.terms()) {
              DualElement z = act(H, H.antipode_monomial(key[0]), x, Side::Left, cut);
              rhs += left_mul(H, H.mono(key[1], c), x_bracket(T, basis(a), z, basis(b)));
            }
            if (!(lhs == rhs)) fail("sesquilinearity-right", {a, b}, "x=t" + I.to_string() + " h=" + h.to_string());
          }
          // skew-symmetry
          ModuleElement lhs = x_bracket(T, basis(a), x, basis(b));
          ModuleElement rhs;
          int m = loc(b, a);
          if (m > 0)
            for (const auto& K : indices_up_to(N, m - 1)) {
              ModuleElement v = x_bracket(T, basis(b), DualElement::basis(K), basis(a));
              if (v.is_zero()) continue;
              for (const auto& parts : H.coproduct_monomial(K, 2)) {
                Rational p = pair(x, H.antipode_monomial(parts[0]));
                if (p != 0) rhs -= left_mul(H, H.antipode_monomial(parts[1]) * p, v);
              }
            }
          if (!(lhs == rhs)) fail("skew-symmetry", {a, b}, "x=t" + I.to_string() + ": " + (lhs - rhs).to_string());
        }
      }

    for (int a : labels)
      for (int b : labels)
        for (int c : labels) {
          int n = loc(a, b);
          // w_K = [a_{t_K} b] and the degree range of [w_K * c]
          std::vector<std::pair<MultiIndex, ModuleElement>> w;
          std::vector<int> wdeg;
          if (n > 0)
            for (const auto& K : indices_up_to(N, n - 1)) {
              ModuleElement v = x_bracket(T, basis(a), DualElement::basis(K), basis(b));
              if (v.is_zero()) continue;
              wdeg.push_back(extend_bracket(T, v, basis(c)).max_slot_degree(0));
              w.emplace_back(K, std::move(v));
            }
          for (const auto& I : samples)
            for (const auto& Iy : samples) {
              DualElement x = DualElement::basis(I), y = DualElement::basis(Iy);
              ModuleElement lhs = x_bracket(T, basis(a), x, x_bracket(T, basis(b), y, basis(c)));
              lhs -= x_bracket(T, basis(b), y, x_bracket(T, basis(a), x, basis(c)));
              ModuleElement rhs;
              for (std::size_t q = 0; q < w.size(); ++q) {
                int top = wdeg[q] - Iy.degree();
                if (top < 0) continue;
                for (const auto& J : indices_up_to(N, top)) {
                  Rational p = pair(x, H.mul_monomials(J, w[q].first));
                  if (p != 0) rhs += x_bracket(T, w[q].second, DualElement::basis(Iy + J), basis(c)) * p;
                }
              }
              if (!(lhs == rhs))
                fail("jacobi", {a, b, c}, "x=t" + I.to_string() + " y=t" + Iy.to_string() + ": " + (lhs - rhs).to_string());
            }
        }
  } catch (const WindowEscape& e) {
    fail("window", {}, e.what());
  }
  return r;
}

// ---- modules built from L ----

void add_ll(PseudoTensor<LLKey>& out, const std::vector<HopfElement>& f, const LTensor& X, const Rational& scale) {
  const HopfAlgebra& H = *out.algebra();
  for (const auto& [k, c] : ll_decompose(H, X)) out.add_raw(f, c, k, scale);
}

namespace {

PseudoTensor<LLKey> tensor_action_key(const PseudoTable& A1, const PseudoTable& A2, int a, const LLKey& k) {
  const HopfAlgebra& H = *A1.algebra();
  PseudoTensor<LLKey> out(A1.algebra(), 2);
  for (const auto& [t, s] : A1.entry(a, k.i).terms()) {
    LTensor X(2);
    X.add_pure({H.mono(t.coeff), H.mono(k.J)}, {t.key, k.j});
    add_ll(out, {H.mono(t.slots[0]), H.one()}, X, s);
  }
  PT second = A2.entry(a, k.j).mul_slots({H.one(), H.mono(k.J)});
  for (const auto& [t, s] : second.terms()) {
    LTensor X(2);
    X.add_pure({H.one(), H.mono(t.coeff)}, {k.i, t.key});
    add_ll(out, {H.mono(t.slots[0]), H.one()}, X, s);
  }
  return out;
}

}  // namespace

PseudoTensor<LLKey> tensor_action(const PseudoTable& T, int a, const LLKey& k) {
  return tensor_action_key(T, T, a, k);
}

PseudoTensor<LLKey> tensor_action(const PseudoTable& T, int a, const LTensor& X) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTensor<LLKey> out(T.algebra(), 2);
  for (const auto& [k, c] : ll_decompose(H, X)) out += tensor_action(T, a, k).mul_slots({H.one(), c});
  return out;
}

PseudoTable chom_dual(const PseudoTable& T) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTable D(T.algebra(), T.rank(), T.rank());
  D.name = T.name.empty() ? "" : T.name + "*";
  for (int k = 0; k < T.rank(); ++k)
    for (int j = 0; j < T.rank(); ++j) {
      PT v(T.algebra(), 2);
      for (int m = 0; m < T.rank(); ++m)
        for (const auto& [t, s] : T.entry(k, m).terms())
          if (t.key == j) v.add_raw({H.mono(t.slots[0]), H.antipode_monomial(t.coeff)}, H.one(), m, -s);
      D.set(k, j, std::move(v));
    }
  return D;
}

ChomCheck check_chom_identification(const PseudoTable& T) {
  const HopfAlgebra& H = *T.algebra();
  const int r = T.rank();
  PseudoTable D = chom_dual(T);
  auto act = key_action(T);
  ChomCheck out;
  // psi = phi(a^p (x) D^(K) a_q) evaluated on basis a_m
  auto psi_on = [&](int p, const MultiIndex& K, int q, int m) {
    PT v(T.algebra(), 2);
    if (m == p) v.add_raw({H.one(), H.one()}, H.mono(K), q);
    return v;
  };
  for (int a = 0; a < r; ++a)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          PseudoTensor<LLKey> ax = tensor_action_key(D, T, a, LLKey{i, MultiIndex(H.dim()), j});
          PT lhs(T.algebra(), 3);
          for (const auto& [t, s] : ax.terms()) {
            PT q = psi_on(t.key.i, t.key.J, t.key.j, k).mul_slots({H.mono(t.coeff), H.one()});
            for (const auto& [u, s2] : q.terms()) {
              TensorPower du = H.coproduct(H.mono(u.slots[0]), 2);
              for (const auto& [key, c2] : du.terms())
                lhs.add_raw({H.mul(H.mono(t.slots[0]), H.mono(key[0])), H.mono(key[1]), H.one()}, H.mono(u.coeff), u.key,
                            s * s2 * c2);
            }
          }
          KeyAction<int, int> psi = [&](const int&, const int& m) { return psi_on(i, MultiIndex(H.dim()), j, m); };
          PT rhs = compose_right<int, int>(a, psi_on(i, MultiIndex(H.dim()), j, k), act);
          rhs -= compose_right<int, int>(0, T.entry(a, k), psi).swap12();
          if (!(lhs == rhs) && out.ok) {
            out.ok = false;
            out.witness = "a" + std::to_string(a + 1) + ", a^" + std::to_string(i + 1) + ", a" + std::to_string(j + 1) +
                          ", a" + std::to_string(k + 1) + ": " + (lhs - rhs).to_string();
          }
        }
  return out;
}

}  // namespace pseudo
