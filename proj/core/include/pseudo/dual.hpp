#pragma once

#include "pseudo/hopf.hpp"

#include <optional>

namespace pseudo {

// Thrown when a truncated dual element is paired beyond its known degree,
// or when an exact result would need infinitely many coefficients.
struct TruncationInsufficient : std::runtime_error {
  TruncationInsufficient(const std::string& what, int required)
      : std::runtime_error(what), required(required) {}
  int required;  // degree that would have been needed, -1 if no finite value suffices
};

// Element of X = H^* in the basis t_I dual to D^(I).
// With `truncation` = N the coefficients are known for |I| <= N only.
class DualElement {
 public:
  DualElement() = default;
  explicit DualElement(int n, std::optional<int> truncation = std::nullopt) : n_(n), trunc_(truncation) {}

  static DualElement basis(const MultiIndex& I);
  // The counit, t_0.
  static DualElement unit(int n);

  int dim() const { return n_; }
  const std::map<MultiIndex, Rational>& terms() const { return t_; }
  std::optional<int> truncation() const { return trunc_; }
  void set_truncation(std::optional<int> t);
  bool is_zero() const { return t_.empty(); }
  int degree() const;
  Rational coeff(const MultiIndex& I) const;

  void add_term(const MultiIndex& I, const Rational& c);
  DualElement& operator+=(const DualElement& o);
  DualElement& operator-=(const DualElement& o);
  DualElement& operator*=(const Rational& c);
  DualElement operator+(const DualElement& o) const;
  DualElement operator-(const DualElement& o) const;
  // Compares known coefficients up to the smaller truncation.
  bool operator==(const DualElement& o) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::optional<int> trunc_;
  std::map<MultiIndex, Rational> t_;
};

Rational pair(const DualElement& x, const HopfElement& h);
// Product dual to the coproduct: t_J t_K = t_{J+K}.
DualElement x_mul(const DualElement& x, const DualElement& y);

enum class Side { Left, Right };

// Left: <h x, f> = <x, S(h) f>.  Right: <x h, f> = <x, f S(h)>.
// Exact when d is abelian. Otherwise the result is truncated at `cutoff`
// (or at the input truncation minus deg h) and TruncationInsufficient is thrown if neither is available.
DualElement act(const HopfAlgebra& H, const HopfElement& h, const DualElement& x, Side side,
                std::optional<int> cutoff = std::nullopt);

// <S(x), f> = <x, S(f)>, with the same truncation rules as act.
DualElement x_antipode(const HopfAlgebra& H, const DualElement& x, std::optional<int> cutoff = std::nullopt);

// Entries (J, K) -> <x, D^(J) D^(K)> for |J|, |K| <= N, nonzero only.
using CoproductTable = std::map<std::pair<MultiIndex, MultiIndex>, Rational>;
CoproductTable x_coproduct_truncated(const HopfAlgebra& H, const DualElement& x, int N);

}  // namespace pseudo
