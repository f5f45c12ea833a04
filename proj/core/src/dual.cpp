#include "pseudo/dual.hpp"

#include <algorithm>
#include <sstream>

namespace pseudo {

DualElement DualElement::basis(const MultiIndex& I) {
  DualElement x(I.size());
  x.add_term(I, 1);
  return x;
}

DualElement DualElement::unit(int n) { return basis(MultiIndex(n)); }

void DualElement::set_truncation(std::optional<int> t) {
  trunc_ = t;
  if (!t) return;
  for (auto it = t_.begin(); it != t_.end();) it = it->first.degree() > *t ? t_.erase(it) : std::next(it);
}

int DualElement::degree() const {
  int d = -1;
  for (const auto& [I, c] : t_) d = std::max(d, I.degree());
  return d;
}

Rational DualElement::coeff(const MultiIndex& I) const {
  if (trunc_ && I.degree() > *trunc_)
    throw TruncationInsufficient("coefficient beyond truncation", I.degree());
  auto it = t_.find(I);
  return it == t_.end() ? Rational(0) : it->second;
}

void DualElement::add_term(const MultiIndex& I, const Rational& c) {
  if (c == 0) return;
  if (trunc_ && I.degree() > *trunc_) return;
  if (t_.empty() && n_ == 0) n_ = I.size();
  auto [it, fresh] = t_.try_emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

static std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

DualElement& DualElement::operator+=(const DualElement& o) {
  if (n_ == 0) n_ = o.n_;
  set_truncation(min_trunc(trunc_, o.trunc_));
  for (const auto& [I, c] : o.t_) add_term(I, c);
  return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
  if (n_ == 0) n_ = o.n_;
  set_truncation(min_trunc(trunc_, o.trunc_));
  for (const auto& [I, c] : o.t_) add_term(I, -c);
  return *this;
}

DualElement& DualElement::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [I, v] : t_) v *= c;
  return *this;
}

DualElement DualElement::operator+(const DualElement& o) const {
  DualElement r = *this;
  r += o;
  return r;
}

DualElement DualElement::operator-(const DualElement& o) const {
  DualElement r = *this;
  r -= o;
  return r;
}

bool DualElement::operator==(const DualElement& o) const {
  auto t = min_trunc(trunc_, o.trunc_);
  auto visible = [&](const MultiIndex& I) { return !t || I.degree() <= *t; };
  for (const auto& [I, c] : t_)
    if (visible(I) && o.coeff(I) != c) return false;
  for (const auto& [I, c] : o.t_)
    if (visible(I) && coeff(I) != c) return false;
  return true;
}

std::string DualElement::to_string() const {
  std::ostringstream os;
  if (t_.empty()) os << "0";
  bool first = true;
  for (const auto& [I, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*t" << I.to_string();
  }
  if (trunc_) os << " + O(" << *trunc_ + 1 << ")";
  return os.str();
}

Rational pair(const DualElement& x, const HopfElement& h) {
  if (x.truncation() && h.degree() > *x.truncation())
    throw TruncationInsufficient("pairing beyond truncation of dual element", h.degree());
  Rational s = 0;
  for (const auto& [I, c] : h.terms()) {
    auto it = x.terms().find(I);
    if (it != x.terms().end()) s += c * it->second;
  }
  return s;
}

DualElement x_mul(const DualElement& x, const DualElement& y) {
  DualElement out(std::max(x.dim(), y.dim()), min_trunc(x.truncation(), y.truncation()));
  for (const auto& [I, a] : x.terms())
    for (const auto& [J, b] : y.terms()) out.add_term(I + J, a * b);
  return out;
}

namespace {

// Decides the degree range of a result and its truncation.
// `exact_bound` is used only when the algebra is abelian and the input exact.
std::optional<int> result_truncation(const HopfAlgebra& H, const DualElement& x, int shrink,
                                     std::optional<int> cutoff, const char* what) {
  if (x.truncation()) {
    int t = *x.truncation() - shrink;
    if (t < 0)
      throw TruncationInsufficient(std::string(what) + ": input truncation too small", shrink);
    return cutoff ? std::min(t, *cutoff) : t;
  }
  if (H.is_abelian()) return std::nullopt;
  if (cutoff) return cutoff;
  throw TruncationInsufficient(std::string(what) + ": result has infinite support over a nonabelian algebra; pass a cutoff", -1);
}

}  // namespace

DualElement act(const HopfAlgebra& H, const HopfElement& h, const DualElement& x, Side side,
                std::optional<int> cutoff) {
  int dh = std::max(h.degree(), 0);
  auto trunc = result_truncation(H, x, dh, cutoff, "act");
  DualElement out(H.dim(), trunc);
  if (h.is_zero()) return out;
  HopfElement sh = H.antipode(h);
  // In the abelian exact case S(h) D^(J) has degree |J| + deg h, so |J| <= deg x suffices.
  int range = trunc ? *trunc : std::max(x.degree(), 0);
  for (const auto& J : indices_up_to(H.dim(), range)) {
    HopfElement f = side == Side::Left ? H.mul(sh, H.mono(J)) : H.mul(H.mono(J), sh);
    Rational s = 0;
    for (const auto& [I, c] : f.terms()) {
      auto it = x.terms().find(I);
      if (it != x.terms().end()) s += c * it->second;
    }
    out.add_term(J, s);
  }
  return out;
}

DualElement x_antipode(const HopfAlgebra& H, const DualElement& x, std::optional<int> cutoff) {
  auto trunc = result_truncation(H, x, 0, cutoff, "x_antipode");
  DualElement out(H.dim(), trunc);
  if (H.is_abelian()) {
    for (const auto& [I, c] : x.terms())
      if (!trunc || I.degree() <= *trunc) out.add_term(I, I.degree() % 2 ? -c : c);
    return out;
  }
  for (const auto& J : indices_up_to(H.dim(), *trunc)) {
    Rational s = 0;
    for (const auto& [I, c] : H.antipode_monomial(J).terms()) {
      auto it = x.terms().find(I);
      if (it != x.terms().end()) s += c * it->second;
    }
    out.add_term(J, s);
  }
  return out;
}

CoproductTable x_coproduct_truncated(const HopfAlgebra& H, const DualElement& x, int N) {
  CoproductTable out;
  auto idx = indices_up_to(H.dim(), N);
  for (const auto& J : idx)
    for (const auto& K : idx) {
      HopfElement f = H.mul_monomials(J, K);
      Rational s = pair(x, f);
      if (s != 0) out[{J, K}] = s;
    }
  return out;
}

}  // namespace pseudo
