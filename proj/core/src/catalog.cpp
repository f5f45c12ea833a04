#include "pseudo/catalog.hpp"

namespace pseudo {

namespace {

void require_lie(const CatalogEntry& e) {
  LieReport rep = check_lie_axioms(e.table, e.window, 1);
  if (!rep.ok)
    throw AxiomFailure(e.name + " is not a Lie pseudoalgebra: " + rep.failures.front().kind + " " +
                       rep.failures.front().witness);
}

}  // namespace

CatalogEntry build_current(HopfPtr H, const LieAlgebraPresentation& g, const std::optional<ClassicalCobracket>& cobracket) {
  if (LieValidation v = validate_lie(g); !v.ok) throw std::invalid_argument("invalid Lie algebra: " + v.message);
  const int n = g.dim;
  CatalogEntry e;
  e.name = "Cur(g) dim " + std::to_string(n);
  e.note = "current pseudoalgebra H (x) g";
  e.table = PseudoTable(H, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PT v(H, 2);
      for (int k = 0; k < n; ++k)
        if (Rational c = g.c(i, j, k); c != 0) v.add_raw({H->one(), H->one()}, H->one(), k, c);
      e.table.set(i, j, std::move(v));
    }
  require_lie(e);
  if (cobracket) {
    Cobracket C(H, n);
    const MultiIndex z(H->dim());
    for (const auto& [k, terms] : *cobracket) {
      if (k < 0 || k >= n) throw std::invalid_argument("classical cobracket: label out of range");
      LTensor d(2);
      for (const auto& [ij, c] : terms) {
        if (ij.first < 0 || ij.first >= n || ij.second < 0 || ij.second >= n)
          throw std::invalid_argument("classical cobracket: label out of range");
        d.add_term({ij.first, ij.second}, {z, z}, c);
      }
      C.set(k, std::move(d));
    }
    // with constant coefficients both checks reduce to the classical ones on g
    if (CoalgebraReport r = check_coalgebra(C); !r.ok) throw std::invalid_argument("classical cobracket: " + r.witness);
    if (Verdict v = check_cocycle(e.table, C); !v.ok) throw std::invalid_argument("classical cobracket: " + v.witness);
    e.cobracket = std::move(C);
  }
  return e;
}

bool solvable_compatible(const HopfAlgebra& H, const HopfElement& p, const HopfElement& h) {
  HopfElement q = H.mul(H.antipode(h), p);
  TensorPower lhs(2), rhs(2);
  TensorPower dq = H.coproduct(q, 2);
  for (const auto& [key, c] : dq.terms()) {
    TensorPower l = TensorPower::pure({H.antipode_monomial(key[0]), H.mono(key[1])});
    TensorPower r = TensorPower::pure({H.mono(key[0]), H.antipode_monomial(key[1])});
    l *= c;
    r *= -c;
    lhs += l;
    rhs += r;
  }
  return lhs == rhs;
}

CatalogEntry build_solvable(HopfPtr H, const HopfElement& p, const std::optional<HopfElement>& h) {
  CatalogEntry e;
  e.name = "L_p p=" + p.to_string();
  e.note = "rank 2 solvable, [a*b] = (p (x) 1) (x)_H b";
  e.table = PseudoTable(H, 2);
  e.table.labels = {"a", "b"};
  PT ab(H, 2);
  ab.add_raw({p, H->one()}, H->one(), 1);
  e.table.set(0, 0, PT(H, 2));
  e.table.set(1, 1, PT(H, 2));
  e.table.set(1, 0, -ab.swap12());
  e.table.set(0, 1, std::move(ab));
  require_lie(e);
  if (h) {
    e.name += " h=" + h->to_string();
    HopfElement sh = H->antipode(*h);
    Cobracket C(H, 2);
    LTensor db(2);
    db.add_pure({sh, H->one()}, {0, 1});
    db.add_pure({H->one(), sh}, {1, 0}, -1);
    C.set(0, LTensor(2));
    C.set(1, std::move(db));
    e.compatible = solvable_compatible(*H, p, *h);
    if (*e.compatible && sh == -*h) {
      LTensor r(2);
      r.add_pure({H->one(), *h}, {0, 0}, Rational(1, 2));
      r.add_pure({*h, H->one()}, {0, 0}, Rational(-1, 2));
      e.coboundary_matches = coboundary_delta(e.table, r) == C;
      e.r = std::move(r);
    }
    e.cobracket = std::move(C);
  }
  return e;
}

int GcLayout::label(const MultiIndex& J, int p, int q) const {
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (degrees[i] == J && units[i] == std::make_pair(p, q)) return static_cast<int>(i);
  return -1;
}

namespace {

GcLayout make_layout(int dim, int n, int max_degree) {
  GcLayout L;
  L.n = n;
  L.max_degree = max_degree;
  for (const auto& J : indices_up_to(dim, max_degree))
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        L.degrees.push_back(J);
        L.units.emplace_back(p, q);
      }
  return L;
}

}  // namespace

GcLayout gc_layout(const CatalogEntry& gc) {
  if (!gc.gc) throw std::invalid_argument(gc.name + " is not a gc entry");
  return *gc.gc;
}

CatalogEntry build_gc(HopfPtr H, int n, int window) {
  if (n < 1 || window < 0) throw std::invalid_argument("build_gc: need n >= 1 and window >= 0");
  const GcLayout L = make_layout(H->dim(), n, 3 * window);
  const int size = static_cast<int>(L.degrees.size());
  CatalogEntry e;
  e.name = "gc_" + std::to_string(n) + " W=" + std::to_string(window);
  e.note = "general pseudoalgebra on H (x) H (x) End(k^n), windowed";
  e.table = PseudoTable(H, size);
  e.gc = L;
  for (int u = 0; u < size; ++u)
    if (L.degrees[static_cast<std::size_t>(u)].degree() <= window) e.window.push_back(u);

  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v) {
      const MultiIndex& a = L.degrees[static_cast<std::size_t>(u)];
      const MultiIndex& b = L.degrees[static_cast<std::size_t>(v)];
      auto [p, q] = L.units[static_cast<std::size_t>(u)];
      auto [r, s] = L.units[static_cast<std::size_t>(v)];
      PT val(H, 2);
      bool escaped = false;
      // (1 (x) a(1)) (x)_H (1 (x) b a(2) (x) AB)
      if (q == r)
        for (const auto& parts : H->coproduct_monomial(a, 2))
          for (const auto& [M, c] : H->mul_monomials(b, parts[1]).terms()) {
            int lab = M.degree() <= L.max_degree ? L.label(M, p, s) : -1;
            if (lab < 0) escaped = true;
            else val.add_raw({H->one(), H->mono(parts[0])}, H->one(), lab, c);
          }
      // - (b(1) (x) 1) (x)_H (1 (x) a b(2) (x) BA)
      if (s == p)
        for (const auto& parts : H->coproduct_monomial(b, 2))
          for (const auto& [M, c] : H->mul_monomials(a, parts[1]).terms()) {
            int lab = M.degree() <= L.max_degree ? L.label(M, r, q) : -1;
            if (lab < 0) escaped = true;
            else val.add_raw({H->mono(parts[0]), H->one()}, H->one(), lab, -c);
          }
      if (!escaped) e.table.set(u, v, std::move(val));
    }
  require_lie(e);
  return e;
}

ModuleElement gc1_element(const CatalogEntry& gc, const HopfElement& x, const HopfElement& a) {
  const GcLayout L = gc_layout(gc);
  ModuleElement m;
  for (const auto& [J, c] : a.terms()) {
    int lab = L.label(J, 0, 0);
    if (lab < 0) throw WindowEscape("gc_1 element outside the stored labels");
    m.add(lab, x * c);
  }
  return m;
}

LTensor gc1_r(const CatalogEntry& gc, const HopfElement& f, const HopfElement& g) {
  const GcLayout L = gc_layout(gc);
  const int e0 = L.label(MultiIndex(gc.table.algebra()->dim()), 0, 0);
  LTensor r(2);
  r.add_pure({f, g}, {e0, e0});
  r.add_pure({g, f}, {e0, e0}, -1);
  return r;
}

LTensor gc1_display_delta(const CatalogEntry& gc, const HopfElement& f, const HopfElement& g, const HopfElement& a) {
  const HopfAlgebra& H = *gc.table.algebra();
  auto el = [&](const HopfElement& x, const HopfElement& y) { return gc1_element(gc, x, y); };
  auto wedge = [](const ModuleElement& u, const ModuleElement& v) {
    LTensor w(2);
    w.add_pure(std::vector<ModuleElement>{u, v});
    w.add_pure(std::vector<ModuleElement>{v, u}, -1);
    return w;
  };
  const HopfElement one = H.one();
  LTensor out(2);
  TensorPower da = H.coproduct(a, 2);
  for (const auto& [ak, ac] : da.terms()) {
    // (f a(1))_(-1) . ((f a(1))_(2) (x) a(2)) ^ (g (x) 1)
    TensorPower dp = H.coproduct(H.mul(f, H.mono(ak[0])), 2);
    for (const auto& [pk, pc] : dp.terms()) {
      LTensor t = act(H, H.antipode_monomial(pk[0]), wedge(el(H.mono(pk[1]), H.mono(ak[1])), el(g, one)));
      t *= ac * pc;
      out += t;
    }
    // (g a(1))_(-1) . (f (x) 1) ^ ((g a(1))_(2) (x) a(2))
    TensorPower dq = H.coproduct(H.mul(g, H.mono(ak[0])), 2);
    for (const auto& [qk, qc] : dq.terms()) {
      LTensor t = act(H, H.antipode_monomial(qk[0]), wedge(el(f, one), el(H.mono(qk[1]), H.mono(ak[1]))));
      t *= ac * qc;
      out += t;
    }
  }
  // - f_(-1) . (f_(2) (x) a) ^ (g (x) 1)
  TensorPower df = H.coproduct(f, 2);
  for (const auto& [fk, fc] : df.terms()) {
    LTensor t = act(H, H.antipode_monomial(fk[0]), wedge(el(H.mono(fk[1]), a), el(g, one)));
    t *= -fc;
    out += t;
  }
  // - g_(-1) . (f (x) 1) ^ (g_(2) (x) a)
  TensorPower dg = H.coproduct(g, 2);
  for (const auto& [gk, gc2] : dg.terms()) {
    LTensor t = act(H, H.antipode_monomial(gk[0]), wedge(el(f, one), el(H.mono(gk[1]), a)));
    t *= -gc2;
    out += t;
  }
  return out;
}

CatalogEntry build_broken(HopfPtr H) {
  CatalogEntry e;
  e.name = "broken rank 1";
  e.note = "[a*a] = (1 (x) 1) (x)_H a, not skew-symmetric";
  e.table = PseudoTable(H, 1);
  PT v(H, 2);
  v.add_raw({H->one(), H->one()}, H->one(), 0);
  e.table.set(0, 0, std::move(v));
  return e;
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& pres : {LieAlgebraPresentation::abelian(1), LieAlgebraPresentation::solvable2()}) {
    HopfPtr H = HopfAlgebra::make(pres);
    const std::string over = H->dim() == 1 ? " over k[D]" : " over U(2-dim)";
    const HopfElement D = H->gen(0);
    const MultiIndex e1 = MultiIndex::unit(H->dim(), 0);
    out.push_back(build_solvable(H, H->one(), D));
    out.push_back(build_solvable(H, D));
    out.push_back(build_solvable(H, H->mono(e1 + e1)));
    ClassicalCobracket cb;
    cb[1][{0, 1}] = 1;
    cb[1][{1, 0}] = -1;
    out.push_back(build_current(H, LieAlgebraPresentation::solvable2(), cb));
    if (H->dim() == 1) out.push_back(build_gc(H, 1, 3));
    for (std::size_t i = out.size() - (H->dim() == 1 ? 5 : 4); i < out.size(); ++i) out[i].name += over;
  }
  return out;
}

}  // namespace pseudo
