#include "pseudo/hopf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pseudo {

MultiIndex::MultiIndex(int n) {
  if (n < 0 || n > kMaxGenerators) throw std::invalid_argument("MultiIndex: bad dimension");
  n_ = static_cast<std::uint8_t>(n);
}

MultiIndex::MultiIndex(std::initializer_list<int> exps) : MultiIndex(static_cast<int>(exps.size())) {
  int k = 0;
  for (int e : exps) set(k++, e);
}

MultiIndex MultiIndex::unit(int n, int k) {
  MultiIndex m(n);
  m.set(k, 1);
  return m;
}

void MultiIndex::set(int k, int v) {
  if (k < 0 || k >= n_) throw std::out_of_range("MultiIndex: slot out of range");
  if (v < 0 || v > 255) throw std::out_of_range("MultiIndex: exponent out of range");
  e_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v);
}

int MultiIndex::degree() const {
  int d = 0;
  for (int k = 0; k < n_; ++k) d += e_[static_cast<std::size_t>(k)];
  return d;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r(std::max<int>(n_, o.n_));
  for (int k = 0; k < r.n_; ++k) {
    int a = k < n_ ? (*this)[k] : 0;
    int b = k < o.n_ ? o[k] : 0;
    r.set(k, a + b);
  }
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r(n_);
  for (int k = 0; k < n_; ++k) r.set(k, (*this)[k] - (k < o.n_ ? o[k] : 0));
  return r;
}

bool MultiIndex::dominates(const MultiIndex& o) const {
  for (int k = 0; k < o.n_; ++k)
    if ((k < n_ ? (*this)[k] : 0) < o[k]) return false;
  return true;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  // Within a degree, larger leading exponents first.
  return std::lexicographical_compare(o.e_.begin(), o.e_.begin() + n_, e_.begin(), e_.begin() + n_);
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int k = 0; k < n_; ++k) {
    if (k) s += ",";
    s += std::to_string((*this)[k]);
  }
  return s + ")";
}

std::vector<MultiIndex> indices_up_to(int n, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.set(k, e);
      rec(k + 1, left - e);
    }
    cur.set(k, 0);
  };
  if (n == 0) {
    out.push_back(cur);
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& I) {
  std::vector<MultiIndex> out;
  MultiIndex cur(I.size());
  std::function<void(int)> rec = [&](int k) {
    if (k == I.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= I[k]; ++e) {
      cur.set(k, e);
      rec(k + 1);
    }
    cur.set(k, 0);
  };
  rec(0);
  return out;
}

Rational factorial(const MultiIndex& I) {
  mpz_class f = 1;
  for (int k = 0; k < I.size(); ++k) {
    mpz_class g;
    mpz_fac_ui(g.get_mpz_t(), static_cast<unsigned long>(I[k]));
    f *= g;
  }
  return Rational(f);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---- presentation ----

LieAlgebraPresentation LieAlgebraPresentation::abelian(int n) {
  LieAlgebraPresentation p;
  p.dim = n;
  return p;
}

LieAlgebraPresentation LieAlgebraPresentation::solvable2() {
  LieAlgebraPresentation p;
  p.dim = 2;
  p.constants[{0, 1, 1}] = 1;
  return p;
}

Rational LieAlgebraPresentation::c(int i, int j, int k) const {
  if (i == j) return 0;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = constants.find({i, j, k});
  if (it == constants.end()) return 0;
  return sign * it->second;
}

bool LieAlgebraPresentation::is_abelian() const {
  for (const auto& [key, v] : constants)
    if (v != 0) return false;
  return true;
}

LieValidation validate_lie(const LieAlgebraPresentation& p) {
  LieValidation r;
  if (p.dim < 0 || p.dim > kMaxGenerators) {
    r.ok = false;
    r.message = "dimension out of range";
    return r;
  }
  for (const auto& [key, v] : p.constants) {
    auto [i, j, k] = key;
    if (i < 0 || j < 0 || k < 0 || i >= p.dim || j >= p.dim || k >= p.dim) {
      r.ok = false;
      r.message = "structure constant index out of range";
      return r;
    }
    if (i >= j) {
      r.ok = false;
      r.message = "structure constants must be given for i < j only; antisymmetry supplies the rest";
      return r;
    }
  }
  const int n = p.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += p.c(i, j, m) * p.c(m, k, l) + p.c(j, k, m) * p.c(m, i, l) + p.c(k, i, m) * p.c(m, j, l);
          if (s != 0) {
            r.ok = false;
            r.witness = std::array<int, 4>{i, j, k, l};
            std::ostringstream os;
            os << "Jacobi fails at (" << i + 1 << "," << j + 1 << "," << k + 1 << "), component " << l + 1
               << ": " << s.get_str();
            r.message = os.str();
            return r;
          }
        }
  return r;
}

// ---- HopfElement ----

HopfElement HopfElement::one(int n) {
  HopfElement e(n);
  e.add_term(MultiIndex(n), 1);
  return e;
}

HopfElement HopfElement::monomial(const MultiIndex& I, const Rational& c) {
  HopfElement e(I.size());
  e.add_term(I, c);
  return e;
}

HopfElement HopfElement::generator(int n, int k) { return monomial(MultiIndex::unit(n, k)); }

Rational HopfElement::coeff(const MultiIndex& I) const {
  auto it = t_.find(I);
  return it == t_.end() ? Rational(0) : it->second;
}

int HopfElement::degree() const {
  int d = -1;
  for (const auto& [I, c] : t_) d = std::max(d, I.degree());
  return d;
}

Rational HopfElement::constant_term() const { return coeff(MultiIndex(n_)); }

void HopfElement::add_term(const MultiIndex& I, const Rational& c) {
  if (c == 0) return;
  if (t_.empty() && n_ == 0) n_ = I.size();
  auto [it, fresh] = t_.try_emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [I, c] : o.t_) add_term(I, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [I, c] : o.t_) add_term(I, -c);
  return *this;
}

HopfElement& HopfElement::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [I, v] : t_) v *= c;
  return *this;
}

HopfElement HopfElement::operator+(const HopfElement& o) const {
  HopfElement r = *this;
  r += o;
  return r;
}

HopfElement HopfElement::operator-(const HopfElement& o) const {
  HopfElement r = *this;
  r -= o;
  return r;
}

HopfElement HopfElement::operator-() const {
  HopfElement r = *this;
  r *= -1;
  return r;
}

HopfElement HopfElement::operator*(const Rational& c) const {
  HopfElement r = *this;
  r *= c;
  return r;
}

std::string HopfElement::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [I, c] : t_) {
    Rational a = c;
    if (!first) s += a < 0 ? " - " : " + ";
    else if (a < 0) s += "-";
    if (a < 0) a = -a;
    first = false;
    if (I.is_zero()) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str() + "*";
    s += "D" + I.to_string();
  }
  return s;
}

// ---- TensorPower ----

TensorPower TensorPower::pure(const std::vector<HopfElement>& factors) {
  TensorPower t(static_cast<int>(factors.size()));
  std::vector<MultiIndex> key(factors.size());
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational c) {
    if (k == factors.size()) {
      t.add_term(key, c);
      return;
    }
    for (const auto& [I, a] : factors[k].terms()) {
      key[k] = I;
      rec(k + 1, c * a);
    }
  };
  rec(0, 1);
  return t;
}

void TensorPower::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(k.size()) != m_) throw std::invalid_argument("TensorPower: slot count mismatch");
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

TensorPower& TensorPower::operator+=(const TensorPower& o) {
  if (t_.empty() && m_ == 0) m_ = o.m_;
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

TensorPower& TensorPower::operator-=(const TensorPower& o) {
  if (t_.empty() && m_ == 0) m_ = o.m_;
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

TensorPower& TensorPower::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

TensorPower TensorPower::operator-(const TensorPower& o) const {
  TensorPower r = *this;
  r -= o;
  return r;
}

std::string TensorPower::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "(x)" : "") << "D" << k[i].to_string();
  }
  return os.str();
}

// ---- HopfAlgebra ----

HopfAlgebra::HopfAlgebra(LieAlgebraPresentation p) : p_(std::move(p)) {
  auto v = validate_lie(p_);
  if (!v.ok) throw std::invalid_argument("invalid Lie algebra presentation: " + v.message);
  // Drop explicit zeros so that is_abelian and c() agree.
  for (auto it = p_.constants.begin(); it != p_.constants.end();)
    it = it->second == 0 ? p_.constants.erase(it) : std::next(it);
  abelian_ = p_.is_abelian();
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::make(LieAlgebraPresentation p) {
  return std::make_shared<const HopfAlgebra>(std::move(p));
}

void HopfAlgebra::require_abelian(const char* what) const {
  if (!abelian_) throw NotAbelian(std::string(what) + " requires an abelian presentation");
}

HopfElement HopfAlgebra::power(int k, int d) const {
  MultiIndex I(dim());
  I.set(k, d);
  return mono(I);
}

// d^I d_k in the ordinary PBW basis d^I = d_1^{i_1} ... d_N^{i_N}.
const HopfAlgebra::Ordinary& HopfAlgebra::right_mul_gen(const MultiIndex& I, int k) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(I, k);
  if (auto it = gen_cache_.find(key); it != gen_cache_.end()) return it->second;

  Ordinary out;
  int l = -1;
  for (int m = dim() - 1; m >= 0; --m)
    if (I[m] > 0) {
      l = m;
      break;
    }
  if (l <= k) {
    out[I + MultiIndex::unit(dim(), k)] = 1;
  } else {
    // d^{I'} d_l d_k = (d^{I'} d_k) d_l + sum_m c^m_{lk} d^{I'} d_m
    MultiIndex rest = I - MultiIndex::unit(dim(), l);
    Ordinary first = right_mul_gen(rest, k);
    for (const auto& [K, c] : first)
      for (const auto& [K2, c2] : right_mul_gen(K, l)) out[K2] += c * c2;
    for (int m = 0; m < dim(); ++m) {
      Rational c = p_.c(l, k, m);
      if (c == 0) continue;
      for (const auto& [K2, c2] : right_mul_gen(rest, m)) out[K2] += c * c2;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return gen_cache_.emplace(key, std::move(out)).first->second;
}

HopfAlgebra::Ordinary HopfAlgebra::ordinary_product(const MultiIndex& I, const MultiIndex& J) const {
  Ordinary cur{{I, 1}};
  for (int k = 0; k < dim(); ++k)
    for (int r = 0; r < J[k]; ++r) {
      Ordinary next;
      for (const auto& [K, c] : cur)
        for (const auto& [K2, c2] : right_mul_gen(K, k)) next[K2] += c * c2;
      for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
      cur = std::move(next);
    }
  return cur;
}

const HopfElement& HopfAlgebra::mul_monomials(const MultiIndex& I, const MultiIndex& J) const {
  if (I.size() != dim() || J.size() != dim()) throw std::invalid_argument("mul: dimension mismatch");
  std::lock_guard lock(mu_);
  auto key = std::make_pair(I, J);
  if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;
  HopfElement out(dim());
  if (abelian_) {
    MultiIndex K = I + J;
    out.add_term(K, factorial(K) / (factorial(I) * factorial(J)));
  } else {
    Rational denom = factorial(I) * factorial(J);
    for (const auto& [K, c] : ordinary_product(I, J)) out.add_term(K, c * factorial(K) / denom);
  }
  return mul_cache_.emplace(key, std::move(out)).first->second;
}

HopfElement HopfAlgebra::mul(const HopfElement& a, const HopfElement& b) const {
  HopfElement out(dim());
  for (const auto& [I, c] : a.terms())
    for (const auto& [J, d] : b.terms()) {
      Rational cd = c * d;
      for (const auto& [K, e] : mul_monomials(I, J).terms()) out.add_term(K, cd * e);
    }
  return out;
}

HopfElement HopfAlgebra::commutator(const HopfElement& a, const HopfElement& b) const {
  return mul(a, b) - mul(b, a);
}

std::vector<std::vector<MultiIndex>> HopfAlgebra::coproduct_monomial(const MultiIndex& I, int parts) const {
  if (parts < 1) throw std::invalid_argument("coproduct: parts must be positive");
  std::vector<std::vector<MultiIndex>> out;
  std::vector<MultiIndex> cur(static_cast<std::size_t>(parts));
  std::function<void(int, const MultiIndex&)> rec = [&](int k, const MultiIndex& left) {
    if (k == parts - 1) {
      cur[static_cast<std::size_t>(k)] = left;
      out.push_back(cur);
      return;
    }
    for (const auto& J : sub_indices(left)) {
      cur[static_cast<std::size_t>(k)] = J;
      rec(k + 1, left - J);
    }
  };
  rec(0, I);
  return out;
}

TensorPower HopfAlgebra::coproduct(const HopfElement& a, int parts) const {
  TensorPower t(parts);
  for (const auto& [I, c] : a.terms())
    for (auto& key : coproduct_monomial(I, parts)) t.add_term(key, c);
  return t;
}

TensorPower HopfAlgebra::coproduct_pattern(const TensorPower& t, const std::vector<int>& pi) const {
  const int m = t.slots();
  std::vector<std::vector<int>> fibres(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (pi[k] < 0 || pi[k] >= m) throw std::invalid_argument("coproduct pattern: target out of range");
    fibres[static_cast<std::size_t>(pi[k])].push_back(static_cast<int>(k));
  }
  for (const auto& f : fibres)
    if (f.empty()) throw std::invalid_argument("coproduct pattern: not surjective");

  TensorPower out(static_cast<int>(pi.size()));
  for (const auto& [key, c] : t.terms()) {
    std::vector<std::vector<std::vector<MultiIndex>>> splits;
    for (int j = 0; j < m; ++j)
      splits.push_back(coproduct_monomial(key[static_cast<std::size_t>(j)], static_cast<int>(fibres[static_cast<std::size_t>(j)].size())));
    std::vector<MultiIndex> res(pi.size());
    std::function<void(int)> rec = [&](int j) {
      if (j == m) {
        out.add_term(res, c);
        return;
      }
      for (const auto& parts : splits[static_cast<std::size_t>(j)]) {
        const auto& fib = fibres[static_cast<std::size_t>(j)];
        for (std::size_t q = 0; q < fib.size(); ++q) res[static_cast<std::size_t>(fib[q])] = parts[q];
        rec(j + 1);
      }
    };
    rec(0);
  }
  return out;
}

const HopfElement& HopfAlgebra::antipode_monomial(const MultiIndex& I) const {
  std::lock_guard lock(mu_);
  if (auto it = antipode_cache_.find(I); it != antipode_cache_.end()) return it->second;
  Rational sign = I.degree() % 2 ? -1 : 1;
  HopfElement out;
  if (abelian_) {
    out = mono(I, sign);
  } else {
    // S(D^(I)) = (-1)^|I| D^(i_N e_N) ... D^(i_1 e_1)
    out = one() * sign;
    for (int k = dim() - 1; k >= 0; --k)
      if (I[k] > 0) out = mul(out, power(k, I[k]));
  }
  return antipode_cache_.emplace(I, std::move(out)).first->second;
}

HopfElement HopfAlgebra::antipode(const HopfElement& a) const {
  HopfElement out(dim());
  for (const auto& [I, c] : a.terms()) {
    HopfElement s = antipode_monomial(I);
    s *= c;
    out += s;
  }
  return out;
}

TensorPower HopfAlgebra::mul(const TensorPower& a, const TensorPower& b) const {
  if (a.slots() != b.slots()) throw std::invalid_argument("tensor mul: slot mismatch");
  const int m = a.slots();
  TensorPower out(m);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<HopfElement> f;
      for (int i = 0; i < m; ++i)
        f.push_back(mul_monomials(ka[static_cast<std::size_t>(i)], kb[static_cast<std::size_t>(i)]));
      TensorPower p = TensorPower::pure(f);
      p *= ca * cb;
      out += p;
    }
  return out;
}

}  // namespace pseudo
