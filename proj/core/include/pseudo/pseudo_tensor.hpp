#pragma once

#include "pseudo/hopf.hpp"

#include <functional>
#include <sstream>

namespace pseudo {

// Basis keys of the free H-modules used on the right of (x)_H.
struct UnitKey {
  auto operator<=>(const UnitKey&) const = default;
};

// a_i (x) D^(J) a_j, a free basis of L (x) L.
struct LLKey {
  int i = 0;
  MultiIndex J;
  int j = 0;
  bool operator==(const LLKey& o) const { return i == o.i && j == o.j && J == o.J; }
  bool operator<(const LLKey& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return J < o.J;
  }
};

// t_I (x) a_k, a free basis of Y (x) L.
struct YLKey {
  MultiIndex I;
  int k = 0;
  bool operator==(const YLKey& o) const { return k == o.k && I == o.I; }
  bool operator<(const YLKey& o) const {
    if (k != o.k) return k < o.k;
    return I < o.I;
  }
};

template <class Key>
struct KeyTraits {
  static constexpr bool trivial_action = false;
};
template <>
struct KeyTraits<UnitKey> {
  static constexpr bool trivial_action = true;
};

inline std::string key_to_string(int k) { return "a" + std::to_string(k + 1); }
inline std::string key_to_string(const UnitKey&) { return "1"; }
inline std::string key_to_string(const LLKey& k) {
  return "a" + std::to_string(k.i + 1) + "(x)D" + k.J.to_string() + "a" + std::to_string(k.j + 1);
}
inline std::string key_to_string(const YLKey& k) { return "t" + k.I.to_string() + "(x)a" + std::to_string(k.k + 1); }

// Element of H^{(x)n} (x)_H M for M free on Key, kept in the canonical form
// sum (h_1 (x) ... (x) h_{n-1} (x) 1) (x)_H c key.
template <class Key>
class PseudoTensor {
 public:
  struct Term {
    std::vector<MultiIndex> slots;  // n - 1 entries
    MultiIndex coeff;
    Key key;
    bool operator==(const Term& o) const { return slots == o.slots && coeff == o.coeff && key == o.key; }
    bool operator<(const Term& o) const {
      if (!(key == o.key)) return key < o.key;
      if (slots != o.slots) return slots < o.slots;
      return coeff < o.coeff;
    }
  };
  using Terms = std::map<Term, Rational>;

  PseudoTensor() = default;
  PseudoTensor(HopfPtr H, int n) : H_(std::move(H)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("PseudoTensor: arity must be positive");
  }

  const HopfPtr& algebra() const { return H_; }
  int arity() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  // Adds scale * (f_1 (x) ... (x) f_n) (x)_H (coeff . key), normalized.
  void add_raw(const std::vector<HopfElement>& f, const HopfElement& coeff, const Key& key,
               const Rational& scale = 1) {
    if (static_cast<int>(f.size()) != n_) throw std::invalid_argument("PseudoTensor: wrong number of slots");
    if (scale == 0 || coeff.is_zero()) return;
    const HopfAlgebra& H = *H_;
    const int d = H.dim();
    for (const auto& [P, pc] : f.back().terms()) {
      for (const auto& parts : H.coproduct_monomial(P, n_)) {
        std::vector<HopfElement> slots;
        slots.reserve(static_cast<std::size_t>(n_ - 1));
        bool zero = false;
        for (int k = 0; k + 1 < n_; ++k) {
          slots.push_back(H.mul(f[static_cast<std::size_t>(k)], H.antipode_monomial(parts[static_cast<std::size_t>(k)])));
          if (slots.back().is_zero()) zero = true;
        }
        if (zero) continue;
        HopfElement c(d);
        if constexpr (KeyTraits<Key>::trivial_action) {
          if (parts.back().is_zero()) c.add_term(MultiIndex(d), coeff.constant_term());
        } else {
          c = H.mul(H.mono(parts.back()), coeff);
        }
        if (c.is_zero()) continue;
        expand(slots, c, key, scale * pc);
      }
    }
  }

  void add_canonical(const std::vector<MultiIndex>& slots, const MultiIndex& coeff, const Key& key,
                     const Rational& c) {
    if (c == 0) return;
    Term t{slots, coeff, key};
    auto [it, fresh] = t_.try_emplace(std::move(t), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  PseudoTensor& operator+=(const PseudoTensor& o) {
    adopt(o);
    for (const auto& [t, c] : o.t_) add_canonical(t.slots, t.coeff, t.key, c);
    return *this;
  }
  PseudoTensor& operator-=(const PseudoTensor& o) {
    adopt(o);
    for (const auto& [t, c] : o.t_) add_canonical(t.slots, t.coeff, t.key, -c);
    return *this;
  }
  PseudoTensor& operator*=(const Rational& c) {
    if (c == 0) t_.clear();
    for (auto& [t, v] : t_) v *= c;
    return *this;
  }
  PseudoTensor operator+(const PseudoTensor& o) const { PseudoTensor r = *this; r += o; return r; }
  PseudoTensor operator-(const PseudoTensor& o) const { PseudoTensor r = *this; r -= o; return r; }
  PseudoTensor operator-() const { PseudoTensor r = *this; r *= -1; return r; }
  bool operator==(const PseudoTensor& o) const { return t_ == o.t_; }

  // Each canonical term as raw factors, last slot = 1.
  template <class F>
  void for_each_raw(F&& fn) const {
    const int d = H_->dim();
    for (const auto& [t, c] : t_) {
      std::vector<HopfElement> f;
      for (const auto& I : t.slots) f.push_back(HopfElement::monomial(I));
      f.push_back(HopfElement::one(d));
      fn(f, HopfElement::monomial(t.coeff), t.key, c);
    }
  }

  // ((g_1 (x) ... (x) g_n) (x)_H 1) . T
  PseudoTensor mul_slots(const std::vector<HopfElement>& g) const {
    if (static_cast<int>(g.size()) != n_) throw std::invalid_argument("mul_slots: wrong number of factors");
    PseudoTensor out(H_, n_);
    for_each_raw([&](const std::vector<HopfElement>& f, const HopfElement& c, const Key& k, const Rational& s) {
      std::vector<HopfElement> prod;
      for (int i = 0; i < n_; ++i) prod.push_back(H_->mul(g[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i)]));
      out.add_raw(prod, c, k, s);
    });
    return out;
  }

  PseudoTensor mul_slots(const TensorPower& g) const {
    PseudoTensor out(H_, n_);
    for (const auto& [key, c] : g.terms()) {
      std::vector<HopfElement> f;
      for (const auto& I : key) f.push_back(HopfElement::monomial(I));
      PseudoTensor p = mul_slots(f);
      p *= c;
      out += p;
    }
    return out;
  }

  // Multiplies the designated slots by the components of the iterated coproduct of h.
  PseudoTensor h_act(const HopfElement& h, const std::vector<int>& slots) const {
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    for (int s : slots) {
      if (s < 0 || s >= n_ || used[static_cast<std::size_t>(s)])
        throw std::invalid_argument("h_act: malformed slot designation");
      used[static_cast<std::size_t>(s)] = true;
    }
    if (slots.empty()) throw std::invalid_argument("h_act: no slots designated");
    TensorPower dh = H_->coproduct(h, static_cast<int>(slots.size()));
    TensorPower g(n_);
    for (const auto& [key, c] : dh.terms()) {
      std::vector<MultiIndex> full(static_cast<std::size_t>(n_), MultiIndex(H_->dim()));
      for (std::size_t q = 0; q < slots.size(); ++q) full[static_cast<std::size_t>(slots[q])] = key[q];
      g.add_term(full, c);
    }
    return mul_slots(g);
  }

  // Old slot k moves to position sigma[k].
  PseudoTensor permute(const std::vector<int>& sigma) const {
    check_permutation(sigma);
    PseudoTensor out(H_, n_);
    for_each_raw([&](const std::vector<HopfElement>& f, const HopfElement& c, const Key& k, const Rational& s) {
      std::vector<HopfElement> g(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = f[static_cast<std::size_t>(i)];
      out.add_raw(g, c, k, s);
    });
    return out;
  }

  PseudoTensor swap12() const {
    std::vector<int> s(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = i;
    std::swap(s[0], s[1]);
    return permute(s);
  }

  // Bare form: sum_key F_key (x)_H key with the module side a plain basis key.
  std::map<Key, TensorPower> to_bare() const {
    std::map<Key, TensorPower> out;
    for (const auto& [t, c] : t_) {
      TensorPower g(n_);
      std::vector<MultiIndex> left = t.slots;
      left.push_back(MultiIndex(H_->dim()));
      g.add_term(left, c);
      TensorPower dc = H_->coproduct(HopfElement::monomial(t.coeff), n_);
      auto [it, fresh] = out.try_emplace(t.key, TensorPower(n_));
      it->second += H_->mul(g, dc);
      if (it->second.is_zero()) out.erase(it);
    }
    return out;
  }

  static PseudoTensor from_bare(HopfPtr H, int n, const std::map<Key, TensorPower>& bare) {
    PseudoTensor out(H, n);
    const int d = H->dim();
    for (const auto& [k, F] : bare)
      for (const auto& [key, c] : F.terms()) {
        std::vector<HopfElement> f;
        for (const auto& I : key) f.push_back(HopfElement::monomial(I));
        out.add_raw(f, HopfElement::one(d), k, c);
      }
    return out;
  }

  // Highest degree in the leading slot, -1 for zero.
  int max_slot_degree(int slot = 0) const {
    int d = -1;
    for (const auto& [t, c] : t_)
      if (slot < static_cast<int>(t.slots.size())) d = std::max(d, t.slots[static_cast<std::size_t>(slot)].degree());
    return d;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str() << "*(";
      for (const auto& I : t.slots) os << "D" << I.to_string() << "(x)";
      os << "1)(x)_H D" << t.coeff.to_string() << " " << key_to_string(t.key);
    }
    return os.str();
  }

 private:
  void adopt(const PseudoTensor& o) {
    if (!H_) {
      H_ = o.H_;
      n_ = o.n_;
    } else if (o.H_ && o.n_ != n_) {
      throw std::invalid_argument("PseudoTensor: arity mismatch");
    }
  }

  void check_permutation(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_) throw std::invalid_argument("permute: wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int s : sigma) {
      if (s < 0 || s >= n_ || seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("permute: not a permutation");
      seen[static_cast<std::size_t>(s)] = true;
    }
  }

  void expand(const std::vector<HopfElement>& slots, const HopfElement& c, const Key& key, const Rational& scale) {
    std::vector<MultiIndex> cur(slots.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational acc) {
      if (k == slots.size()) {
        for (const auto& [J, cj] : c.terms()) add_canonical(cur, J, key, acc * cj);
        return;
      }
      for (const auto& [I, ci] : slots[k].terms()) {
        cur[k] = I;
        rec(k + 1, acc * ci);
      }
    };
    rec(0, scale);
  }

  HopfPtr H_;
  int n_ = 0;
  Terms t_;
};

enum class FourierDirection { Forward, Inverse };

// Forward: f (x) g -> f g_(-1) (x) g_(2).  Inverse: f (x) g -> f g_(1) (x) g_(2).
inline TensorPower fourier(const HopfAlgebra& H, const TensorPower& t, FourierDirection dir) {
  if (t.slots() != 2) throw std::invalid_argument("fourier: needs H (x) H");
  TensorPower out(2);
  for (const auto& [key, c] : t.terms())
    for (const auto& parts : H.coproduct_monomial(key[1], 2)) {
      HopfElement g1 = dir == FourierDirection::Forward ? H.antipode_monomial(parts[0]) : H.mono(parts[0]);
      TensorPower p = TensorPower::pure({H.mul(H.mono(key[0]), g1), H.mono(parts[1])});
      p *= c;
      out += p;
    }
  return out;
}

}  // namespace pseudo
