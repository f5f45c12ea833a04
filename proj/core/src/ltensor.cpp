#include "pseudo/module.hpp"

#include <algorithm>
#include <numeric>

namespace pseudo {

ModuleElement ModuleElement::basis(int i, const HopfElement& c) {
  ModuleElement m;
  m.add(i, c);
  return m;
}

HopfElement ModuleElement::coeff(int i) const {
  auto it = c_.find(i);
  return it == c_.end() ? HopfElement() : it->second;
}

void ModuleElement::add(int i, const HopfElement& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [i, c] : o.c_) add(i, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [i, c] : o.c_) add(i, -c);
  return *this;
}

ModuleElement ModuleElement::operator*(const Rational& q) const {
  ModuleElement r;
  for (const auto& [i, c] : c_) r.add(i, c * q);
  return r;
}

std::string ModuleElement::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + key_to_string(i);
  }
  return s;
}

ModuleElement left_mul(const HopfAlgebra& H, const HopfElement& h, const ModuleElement& m) {
  ModuleElement r;
  for (const auto& [i, c] : m.coeffs()) r.add(i, H.mul(h, c));
  return r;
}

// ---- LTensor ----

void LTensor::add_term(const std::vector<int>& labels, const std::vector<MultiIndex>& idx, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(labels.size()) != m_ || static_cast<int>(idx.size()) != m_)
    throw std::invalid_argument("LTensor: arity mismatch");
  auto [it, fresh] = t_.try_emplace(Slot{labels, idx}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void LTensor::add_pure(const std::vector<HopfElement>& f, const std::vector<int>& labels, const Rational& scale) {
  if (static_cast<int>(f.size()) != m_) throw std::invalid_argument("LTensor: arity mismatch");
  std::vector<MultiIndex> cur(f.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational acc) {
    if (k == f.size()) {
      add_term(labels, cur, acc);
      return;
    }
    for (const auto& [I, c] : f[k].terms()) {
      cur[k] = I;
      rec(k + 1, acc * c);
    }
  };
  rec(0, scale);
}

void LTensor::add_pure(const std::vector<ModuleElement>& factors, const Rational& scale) {
  if (static_cast<int>(factors.size()) != m_) throw std::invalid_argument("LTensor: arity mismatch");
  std::vector<HopfElement> f(factors.size());
  std::vector<int> labels(factors.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == factors.size()) {
      add_pure(f, labels, scale);
      return;
    }
    for (const auto& [i, c] : factors[k].coeffs()) {
      labels[k] = i;
      f[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
}

LTensor& LTensor::operator+=(const LTensor& o) {
  if (t_.empty() && m_ == 0) m_ = o.m_;
  for (const auto& [s, c] : o.t_) add_term(s.labels, s.idx, c);
  return *this;
}

LTensor& LTensor::operator-=(const LTensor& o) {
  if (t_.empty() && m_ == 0) m_ = o.m_;
  for (const auto& [s, c] : o.t_) add_term(s.labels, s.idx, -c);
  return *this;
}

LTensor& LTensor::operator*=(const Rational& c) {
  if (c == 0) t_.clear();
  for (auto& [s, v] : t_) v *= c;
  return *this;
}

LTensor LTensor::permute(const std::vector<int>& sigma) const {
  if (static_cast<int>(sigma.size()) != m_) throw std::invalid_argument("LTensor::permute: wrong length");
  LTensor out(m_);
  for (const auto& [s, c] : t_) {
    Slot n{std::vector<int>(static_cast<std::size_t>(m_)), std::vector<MultiIndex>(static_cast<std::size_t>(m_))};
    for (int k = 0; k < m_; ++k) {
      n.labels[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = s.labels[static_cast<std::size_t>(k)];
      n.idx[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = s.idx[static_cast<std::size_t>(k)];
    }
    out.add_term(n.labels, n.idx, c);
  }
  return out;
}

LTensor LTensor::swap12() const {
  std::vector<int> s(static_cast<std::size_t>(m_));
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[0], s[1]);
  return permute(s);
}

std::string LTensor::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : t_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*";
    for (int k = 0; k < m_; ++k) {
      if (k) out += "(x)";
      out += "D" + s.idx[static_cast<std::size_t>(k)].to_string() + key_to_string(s.labels[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

std::vector<ModuleElement> factors_of(const LTensor::Slot& s) {
  std::vector<ModuleElement> f;
  for (std::size_t k = 0; k < s.labels.size(); ++k)
    f.push_back(ModuleElement::basis(s.labels[k], HopfElement::monomial(s.idx[k])));
  return f;
}

LTensor act(const HopfAlgebra& H, const HopfElement& h, const LTensor& X) {
  const int m = X.arity();
  LTensor out(m);
  TensorPower dh = H.coproduct(h, m);
  for (const auto& [s, c] : X.terms())
    for (const auto& [key, dc] : dh.terms()) {
      std::vector<HopfElement> f;
      for (int k = 0; k < m; ++k) f.push_back(H.mul_monomials(key[static_cast<std::size_t>(k)], s.idx[static_cast<std::size_t>(k)]));
      out.add_pure(f, s.labels, c * dc);
    }
  return out;
}

LTensor hplus_reduce(const HopfAlgebra& H, const LTensor& X) {
  const int m = X.arity();
  LTensor out(m);
  if (m == 0) return X;
  for (const auto& [s, c] : X.terms()) {
    // f_1 (x) ... (x) f_m == S(f_m(1)) f_1 (x) ... (x) S(f_m(m-1)) f_{m-1} (x) 1
    if (m == 1) {
      out.add_term(s.labels, {MultiIndex(H.dim())}, s.idx[0].is_zero() ? c : Rational(0));
      continue;
    }
    for (const auto& parts : H.coproduct_monomial(s.idx.back(), m - 1)) {
      std::vector<HopfElement> f;
      for (int k = 0; k + 1 < m; ++k)
        f.push_back(H.mul(H.antipode_monomial(parts[static_cast<std::size_t>(k)]), H.mono(s.idx[static_cast<std::size_t>(k)])));
      f.push_back(H.one());
      out.add_pure(f, s.labels, c);
    }
  }
  return out;
}

std::map<LLKey, HopfElement> ll_decompose(const HopfAlgebra& H, const LTensor& X) {
  if (X.arity() != 2) throw std::invalid_argument("ll_decompose: arity must be 2");
  std::map<LLKey, HopfElement> out;
  // (f (x) g)(a_i (x) a_j) = f(1) . (a_i (x) S(f(2)) g a_j)
  for (const auto& [s, c] : X.terms())
    for (const auto& parts : H.coproduct_monomial(s.idx[0], 2)) {
      HopfElement second = H.mul(H.antipode_monomial(parts[1]), H.mono(s.idx[1]));
      for (const auto& [J, cj] : second.terms()) {
        LLKey k{s.labels[0], J, s.labels[1]};
        auto [it, fresh] = out.try_emplace(k, HopfElement(H.dim()));
        it->second.add_term(parts[0], c * cj);
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

LTensor ll_compose(const HopfAlgebra& H, const LLKey& k, const HopfElement& c) {
  LTensor base(2);
  base.add_term({k.i, k.j}, {MultiIndex(H.dim()), k.J}, 1);
  return act(H, c, base);
}

LTensor ll_compose(const HopfAlgebra& H, const std::map<LLKey, HopfElement>& m) {
  LTensor out(2);
  for (const auto& [k, c] : m) out += ll_compose(H, k, c);
  return out;
}

// ---- MixedTensor ----

void MixedTensor::add(const std::vector<Place>& places, const Rational& scale) {
  if (scale == 0) return;
  t_.push_back({scale, places});
}

MixedTensor& MixedTensor::operator+=(const MixedTensor& o) {
  t_.insert(t_.end(), o.t_.begin(), o.t_.end());
  return *this;
}

MixedTensor MixedTensor::mu(const HopfAlgebra& H, int hplace, const std::vector<int>& targets, bool antipode) const {
  MixedTensor out;
  for (const auto& term : t_) {
    const int n = static_cast<int>(term.places.size());
    if (hplace < 0 || hplace >= n || !std::holds_alternative<HopfElement>(term.places[static_cast<std::size_t>(hplace)]))
      throw std::invalid_argument("mu: acting place is not an H factor");
    for (int t : targets)
      if (t < 0 || t >= n || t == hplace || !std::holds_alternative<ModuleElement>(term.places[static_cast<std::size_t>(t)]))
        throw std::invalid_argument("mu: target is not a module factor");
    HopfElement h = std::get<HopfElement>(term.places[static_cast<std::size_t>(hplace)]);
    if (antipode) h = H.antipode(h);
    TensorPower dh = H.coproduct(h, static_cast<int>(targets.size()));
    for (const auto& [key, c] : dh.terms()) {
      std::vector<Place> places;
      for (int p = 0; p < n; ++p) {
        if (p == hplace) continue;
        auto it = std::find(targets.begin(), targets.end(), p);
        if (it == targets.end()) {
          places.push_back(term.places[static_cast<std::size_t>(p)]);
        } else {
          const auto& part = key[static_cast<std::size_t>(it - targets.begin())];
          places.push_back(left_mul(H, H.mono(part), std::get<ModuleElement>(term.places[static_cast<std::size_t>(p)])));
        }
      }
      out.add(places, term.scale * c);
    }
  }
  return out;
}

LTensor MixedTensor::to_ltensor(int arity) const {
  LTensor out(arity);
  for (const auto& term : t_) {
    if (static_cast<int>(term.places.size()) != arity) throw std::invalid_argument("to_ltensor: arity mismatch");
    std::vector<ModuleElement> f;
    for (const auto& p : term.places) {
      if (!std::holds_alternative<ModuleElement>(p)) throw std::invalid_argument("to_ltensor: H factor left over");
      f.push_back(std::get<ModuleElement>(p));
    }
    out.add_pure(f, term.scale);
  }
  return out;
}

}  // namespace pseudo
