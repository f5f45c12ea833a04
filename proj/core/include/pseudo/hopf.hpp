#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace pseudo {

using Rational = mpq_class;

inline constexpr int kMaxGenerators = 8;

// Exponent vector of a divided-power monomial D^(I). Ordered by degree, then lexicographically.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n);
  MultiIndex(std::initializer_list<int> exps);

  static MultiIndex unit(int n, int k);

  int size() const { return n_; }
  int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  void set(int k, int v);
  int degree() const;
  bool is_zero() const { return degree() == 0; }

  MultiIndex operator+(const MultiIndex& o) const;
  // Componentwise difference; caller guarantees o <= *this.
  MultiIndex operator-(const MultiIndex& o) const;
  bool dominates(const MultiIndex& o) const;

  bool operator==(const MultiIndex& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator<(const MultiIndex& o) const;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxGenerators> e_{};
  std::uint8_t n_ = 0;
};

// All multi-indices of length n with degree <= d, in MultiIndex order.
std::vector<MultiIndex> indices_up_to(int n, int d);
// All J with J <= I componentwise.
std::vector<MultiIndex> sub_indices(const MultiIndex& I);
// I! as a rational.
Rational factorial(const MultiIndex& I);

// Structure constants of d: [D_i, D_j] = sum_k c(i,j,k) D_k, stored for i < j, 0-based.
struct LieAlgebraPresentation {
  int dim = 0;
  std::map<std::tuple<int, int, int>, Rational> constants;

  static LieAlgebraPresentation abelian(int n);
  // 2-dim nonabelian algebra with [D_1, D_2] = D_2.
  static LieAlgebraPresentation solvable2();

  Rational c(int i, int j, int k) const;
  bool is_abelian() const;
};

struct LieValidation {
  bool ok = true;
  std::string message;
  std::optional<std::array<int, 4>> witness;  // (i, j, k, l) of a failing Jacobi component
};

LieValidation validate_lie(const LieAlgebraPresentation& p);

// Element of U(d) in the divided-power PBW basis. Zero coefficients are never stored.
class HopfElement {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  HopfElement() = default;
  explicit HopfElement(int n) : n_(n) {}

  static HopfElement one(int n);
  static HopfElement monomial(const MultiIndex& I, const Rational& c = 1);
  static HopfElement generator(int n, int k);

  int dim() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const MultiIndex& I) const;
  // Highest degree of a term, -1 for zero.
  int degree() const;
  Rational constant_term() const;

  void add_term(const MultiIndex& I, const Rational& c);
  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  HopfElement& operator*=(const Rational& c);
  HopfElement operator+(const HopfElement& o) const;
  HopfElement operator-(const HopfElement& o) const;
  HopfElement operator-() const;
  HopfElement operator*(const Rational& c) const;
  bool operator==(const HopfElement& o) const { return t_ == o.t_; }

  std::string to_string() const;

 private:
  int n_ = 0;
  Terms t_;
};

// Element of H^{(x)m}, keyed by one multi-index per slot.
class TensorPower {
 public:
  using Key = std::vector<MultiIndex>;

  TensorPower() = default;
  explicit TensorPower(int slots) : m_(slots) {}

  static TensorPower pure(const std::vector<HopfElement>& factors);

  int slots() const { return m_; }
  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Key& k, const Rational& c);
  TensorPower& operator+=(const TensorPower& o);
  TensorPower& operator-=(const TensorPower& o);
  TensorPower& operator*=(const Rational& c);
  TensorPower operator-(const TensorPower& o) const;
  bool operator==(const TensorPower& o) const { return m_ == o.m_ && t_ == o.t_; }
  std::string to_string() const;

 private:
  int m_ = 0;
  std::map<Key, Rational> t_;
};

struct NotAbelian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// U(d) with cached straightening. Shared between threads through HopfPtr.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(LieAlgebraPresentation p);

  static std::shared_ptr<const HopfAlgebra> make(LieAlgebraPresentation p);

  int dim() const { return p_.dim; }
  const LieAlgebraPresentation& presentation() const { return p_; }
  bool is_abelian() const { return abelian_; }

  HopfElement one() const { return HopfElement::one(p_.dim); }
  HopfElement gen(int k) const { return HopfElement::generator(p_.dim, k); }
  HopfElement mono(const MultiIndex& I, const Rational& c = 1) const {
    return HopfElement::monomial(I, c);
  }
  // D^(d e_k).
  HopfElement power(int k, int d) const;

  HopfElement mul(const HopfElement& a, const HopfElement& b) const;
  const HopfElement& mul_monomials(const MultiIndex& I, const MultiIndex& J) const;
  HopfElement commutator(const HopfElement& a, const HopfElement& b) const;

  // Iterated coproduct into `parts` tensor factors.
  TensorPower coproduct(const HopfElement& a, int parts = 2) const;
  // Compositions of I into `parts` pieces, each with coefficient 1.
  std::vector<std::vector<MultiIndex>> coproduct_monomial(const MultiIndex& I, int parts) const;
  // Pattern pi[k] = target slot of output slot k, surjective onto [0, t.slots()).
  TensorPower coproduct_pattern(const TensorPower& t, const std::vector<int>& pi) const;

  Rational counit(const HopfElement& a) const { return a.constant_term(); }
  HopfElement antipode(const HopfElement& a) const;
  const HopfElement& antipode_monomial(const MultiIndex& I) const;

  // Product of slot-wise multiplication of tensors with equal slot counts.
  TensorPower mul(const TensorPower& a, const TensorPower& b) const;

  // Throws NotAbelian naming `what` when d is not abelian.
  void require_abelian(const char* what) const;

 private:
  using Ordinary = std::map<MultiIndex, Rational>;
  const Ordinary& right_mul_gen(const MultiIndex& I, int k) const;
  Ordinary ordinary_product(const MultiIndex& I, const MultiIndex& J) const;

  LieAlgebraPresentation p_;
  bool abelian_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<MultiIndex, int>, Ordinary> gen_cache_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, HopfElement> mul_cache_;
  mutable std::map<MultiIndex, HopfElement> antipode_cache_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

std::string rational_to_string(const Rational& q);

}  // namespace pseudo
