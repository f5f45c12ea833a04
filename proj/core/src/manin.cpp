#include "pseudo/manin.hpp"

namespace pseudo {

void PseudoForm::set(int i, int j, HopfElement h) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_) throw std::out_of_range("PseudoForm::set: label out of range");
  if (h.is_zero()) h_.erase({i, j});
  else h_[{i, j}] = std::move(h);
}

HopfElement PseudoForm::get(int i, int j) const {
  auto it = h_.find({i, j});
  return it == h_.end() ? HopfElement(H_->dim()) : it->second;
}

PseudoTensor<UnitKey> PseudoForm::value(int i, int j) const {
  PseudoTensor<UnitKey> out(H_, 2);
  out.add_raw({get(i, j), H_->one()}, H_->one(), UnitKey{});
  return out;
}

PseudoTensor<UnitKey> form_left(const PseudoTable& T, const PseudoForm& F, int a, int b, int c) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTensor<UnitKey> out(T.algebra(), 3);
  for (const auto& [t, s] : T.entry(a, b).terms()) {
    HopfElement P = H.mul(H.mono(t.coeff), F.get(t.key, c));
    HopfElement x = H.mono(t.slots[0]);
    TensorPower dP = H.coproduct(P, 2);
    for (const auto& [key, c2] : dP.terms())
      out.add_raw({H.mul(x, H.mono(key[0])), H.mono(key[1]), H.one()}, H.one(), UnitKey{}, s * c2);
  }
  return out;
}

PseudoTensor<UnitKey> form_right(const PseudoTable& T, const PseudoForm& F, int a, int b, int c) {
  const HopfAlgebra& H = *T.algebra();
  PseudoTensor<UnitKey> out(T.algebra(), 3);
  for (const auto& [t, s] : T.entry(b, c).terms()) {
    HopfElement h = F.get(a, t.key);
    if (h.is_zero()) continue;
    HopfElement y = H.mono(t.slots[0]);
    for (const auto& parts : H.coproduct_monomial(t.coeff, 2))
      out.add_raw({h, H.mul(y, H.mono(parts[0])), H.mono(parts[1])}, H.one(), UnitKey{}, s);
  }
  return out;
}

namespace {

bool scalar_eliminates(const HopfAlgebra& H, std::vector<std::vector<HopfElement>> M) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !(M[p][c].degree() == 0)) ++p;
    if (p == n) return false;
    std::swap(M[p], M[c]);
    Rational inv = 1 / M[c][c].constant_term();
    for (auto& e : M[c]) e = e * inv;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == c || M[q][c].is_zero()) continue;
      HopfElement f = M[q][c];
      for (std::size_t j = 0; j < n; ++j) M[q][j] -= H.mul(f, M[c][j]);
    }
  }
  return true;
}

}  // namespace

FormReport form_check(const PseudoForm& F, const PseudoTable& T) {
  const HopfAlgebra& H = *F.algebra();
  const int n = F.rank();
  FormReport rep;
  for (int i = 0; i < n && rep.symmetric; ++i)
    for (int j = 0; j < n; ++j)
      if (!(F.value(i, j) == F.value(j, i).swap12())) {
        rep.symmetric = false;
        rep.witness = "not symmetric at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
        break;
      }
  for (int a = 0; a < n && rep.invariant; ++a)
    for (int b = 0; b < n && rep.invariant; ++b)
      for (int c = 0; c < n; ++c) {
        PseudoTensor<UnitKey> d = form_left(T, F, a, b, c) - form_right(T, F, a, b, c);
        if (!d.is_zero()) {
          rep.invariant = false;
          if (rep.witness.empty())
            rep.witness = "not invariant at (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                          std::to_string(c + 1) + "): " + d.to_string();
          break;
        }
      }
  std::vector<std::vector<HopfElement>> M(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[static_cast<std::size_t>(i)].push_back(F.get(i, j));
  rep.nondegenerate = n > 0 && scalar_eliminates(H, M);
  if (!rep.nondegenerate && rep.witness.empty()) rep.witness = "Gram matrix not invertible by scalar pivots";
  return rep;
}

PT shift_keys(const PT& t, int offset) {
  PT out(t.algebra(), t.arity());
  for (const auto& [term, c] : t.terms()) out.add_canonical(term.slots, term.coeff, term.key + offset, c);
  return out;
}

LTensor shift_labels(const LTensor& t, int offset) {
  LTensor out(t.arity());
  for (const auto& [s, c] : t.terms()) {
    std::vector<int> l = s.labels;
    for (auto& x : l) x += offset;
    out.add_term(l, s.idx, c);
  }
  return out;
}

ManinTriple manin_from_bialgebra(const PseudoTable& T, const Cobracket& C) {
  const HopfAlgebra& H = *T.algebra();
  const int n = T.rank();
  if (C.rank() != n) throw ManinError("cobracket rank differs from bracket rank");
  if (Verdict v = check_cocycle(T, C); !v.ok) throw ManinError("not a pseudo-bialgebra: " + v.witness);
  PseudoTable Ts = cobracket_to_pseudobracket(C, required_cutoff(C));

  ManinTriple M{PseudoTable(T.algebra(), 2 * n), n, PseudoForm(T.algebra(), 2 * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M.R.set(i, j, T.entry(i, j));
      M.R.set(n + i, n + j, shift_keys(Ts.entry(i, j), n));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PT out(T.algebra(), 2);
      // <e*_i, [e_j * e_s]> part
      for (int s = 0; s < n; ++s) {
        auto bare = T.entry(j, s).to_bare();
        auto it = bare.find(i);
        if (it == bare.end()) continue;
        for (const auto& [key, c] : it->second.terms()) {
          HopfElement h = H.mono(key[0]);
          for (const auto& parts : H.coproduct_monomial(key[1], 2))
            out.add_raw({H.antipode_monomial(parts[1]), H.mul(h, H.antipode_monomial(parts[0]))}, H.one(), n + s, c);
        }
      }
      // <e_j, [e*_i * e*_r]> part
      for (int r = 0; r < n; ++r) {
        auto bare = Ts.entry(i, r).to_bare();
        auto it = bare.find(j);
        if (it == bare.end()) continue;
        for (const auto& [key, c] : it->second.terms()) {
          HopfElement f = H.mono(key[0]);
          for (const auto& parts : H.coproduct_monomial(key[1], 2))
            out.add_raw({H.mul(f, H.antipode_monomial(parts[0])), H.antipode_monomial(parts[1])}, H.one(), r, -c);
        }
      }
      M.R.set(j, n + i, -out.swap12());
      M.R.set(n + i, j, std::move(out));
    }
  for (int i = 0; i < n; ++i) {
    M.form.set(i, n + i, H.one());
    M.form.set(n + i, i, H.one());
  }
  if (!T.labels.empty()) {
    M.R.labels = T.labels;
    for (const auto& l : T.labels) M.R.labels.push_back(l + "*");
  }
  M.R.name = T.name.empty() ? "manin" : T.name + "+dual";
  return M;
}

std::string manin_violation(const ManinTriple& M) {
  const int n = M.r;
  if (M.R.rank() != 2 * n || M.form.rank() != 2 * n) return "rank mismatch";
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      bool lo_i = i < n, lo_j = j < n;
      if (lo_i == lo_j) {
        for (const auto& [t, c] : M.R.entry(i, j).terms())
          if ((t.key < n) != lo_i)
            return "half not closed under the bracket at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
        if (!M.form.get(i, j).is_zero())
          return "half not isotropic at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      }
    }
  return {};
}

std::pair<PseudoTable, Cobracket> bialgebra_from_manin(const ManinTriple& M) {
  if (auto v = manin_violation(M); !v.empty()) throw ManinError(v);
  const HopfAlgebra& H = *M.R.algebra();
  const int n = M.r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      HopfElement want = i == j ? H.one() : HopfElement(H.dim());
      if (!(M.form.get(i, n + j) == want) || !(M.form.get(n + j, i) == want))
        throw ManinError("pairing block between the halves is not the identity");
    }
  PseudoTable T(M.R.algebra(), n), T0(M.R.algebra(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T.set(i, j, M.R.entry(i, j));
      T0.set(i, j, shift_keys(M.R.entry(n + i, n + j), -n));
    }
  if (!M.R.labels.empty()) T.labels.assign(M.R.labels.begin(), M.R.labels.begin() + n);
  return {T, dualize_to_cobracket(T0)};
}

DoubleResult drinfeld_double(const PseudoTable& T, const Cobracket& C) {
  const int n = T.rank();
  DoubleResult out{manin_from_bialgebra(T, C), Cobracket(), LTensor(2), false, false, {}, {}};
  const MultiIndex zero(T.algebra()->dim());
  for (int i = 0; i < n; ++i) out.r.add_term({i, n + i}, {zero, zero}, 1);
  out.delta = coboundary_delta(out.manin.R, out.r);
  Cobracket dual = dualize_to_cobracket(T);
  out.restrict_l = out.restrict_dual = true;
  for (int j = 0; j < n; ++j) {
    if (!(out.delta.value(j) == C.value(j))) {
      out.restrict_l = false;
      if (out.witness.empty()) out.witness = "delta(e" + std::to_string(j + 1) + ") = " + out.delta.value(j).to_string();
    }
    LTensor want = shift_labels(dual.value(j), n);
    want *= -1;
    if (!(out.delta.value(n + j) == want)) {
      out.restrict_dual = false;
      if (out.witness.empty())
        out.witness = "delta(e*" + std::to_string(j + 1) + ") = " + out.delta.value(n + j).to_string();
    }
  }
  out.cybe = cybe_check(out.manin.R, out.r);
  return out;
}

}  // namespace pseudo
