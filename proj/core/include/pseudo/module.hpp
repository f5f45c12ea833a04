#pragma once

#include "pseudo/pseudo_tensor.hpp"

#include <variant>

namespace pseudo {

// Element sum_i c_i a_i of a free H-module with basis labels 0..rank-1.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement basis(int i, const HopfElement& c);
  static ModuleElement basis(const HopfAlgebra& H, int i) { return basis(i, H.one()); }

  const std::map<int, HopfElement>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  HopfElement coeff(int i) const;
  void add(int i, const HopfElement& c);

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement operator+(const ModuleElement& o) const { ModuleElement r = *this; r += o; return r; }
  ModuleElement operator-(const ModuleElement& o) const { ModuleElement r = *this; r -= o; return r; }
  ModuleElement operator*(const Rational& q) const;
  bool operator==(const ModuleElement& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::map<int, HopfElement> c_;
};

ModuleElement left_mul(const HopfAlgebra& H, const HopfElement& h, const ModuleElement& m);

// Element of L^{(x)m} as a vector space, basis D^(I_1) a_{l_1} (x) ... (x) D^(I_m) a_{l_m}.
class LTensor {
 public:
  struct Slot {
    std::vector<int> labels;
    std::vector<MultiIndex> idx;
    bool operator==(const Slot& o) const { return labels == o.labels && idx == o.idx; }
    bool operator<(const Slot& o) const {
      if (labels != o.labels) return labels < o.labels;
      return idx < o.idx;
    }
  };

  LTensor() = default;
  explicit LTensor(int m) : m_(m) {}

  int arity() const { return m_; }
  const std::map<Slot, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const std::vector<int>& labels, const std::vector<MultiIndex>& idx, const Rational& c);
  // scale * (f_1 a_{l_1}) (x) ... (x) (f_m a_{l_m})
  void add_pure(const std::vector<HopfElement>& f, const std::vector<int>& labels, const Rational& scale = 1);
  void add_pure(const std::vector<ModuleElement>& factors, const Rational& scale = 1);

  LTensor& operator+=(const LTensor& o);
  LTensor& operator-=(const LTensor& o);
  LTensor& operator*=(const Rational& c);
  LTensor operator+(const LTensor& o) const { LTensor r = *this; r += o; return r; }
  LTensor operator-(const LTensor& o) const { LTensor r = *this; r -= o; return r; }
  LTensor operator-() const { LTensor r = *this; r *= -1; return r; }
  bool operator==(const LTensor& o) const { return t_ == o.t_; }

  // Old slot k moves to position sigma[k].
  LTensor permute(const std::vector<int>& sigma) const;
  LTensor swap12() const;

  std::string to_string() const;

 private:
  int m_ = 0;
  std::map<Slot, Rational> t_;
};

// h . X through the iterated coproduct.
LTensor act(const HopfAlgebra& H, const HopfElement& h, const LTensor& X);
// D^(I_k) a_{l_k} in slot k as module elements.
std::vector<ModuleElement> factors_of(const LTensor::Slot& s);

// Representative of X modulo H_+ (L^{(x)m}): last slot has coefficient 1.
LTensor hplus_reduce(const HopfAlgebra& H, const LTensor& X);

// L (x) L in the free basis a_i (x) D^(J) a_j.
std::map<LLKey, HopfElement> ll_decompose(const HopfAlgebra& H, const LTensor& X);
LTensor ll_compose(const HopfAlgebra& H, const LLKey& k, const HopfElement& c);
LTensor ll_compose(const HopfAlgebra& H, const std::map<LLKey, HopfElement>& m);

// Tensors mixing H factors and module factors, the inputs of the mu maps.
class MixedTensor {
 public:
  using Place = std::variant<HopfElement, ModuleElement>;
  struct Term {
    Rational scale;
    std::vector<Place> places;
  };

  void add(const std::vector<Place>& places, const Rational& scale = 1);
  const std::vector<Term>& terms() const { return t_; }
  MixedTensor& operator+=(const MixedTensor& o);

  // Drops the H factor at `hplace` after letting it act on `targets` through the
  // iterated coproduct, or through the antipode when `antipode` is set. Places are 0-based.
  MixedTensor mu(const HopfAlgebra& H, int hplace, const std::vector<int>& targets, bool antipode = false) const;
  // Requires all places to be module factors.
  LTensor to_ltensor(int arity) const;

 private:
  std::vector<Term> t_;
};

}  // namespace pseudo
