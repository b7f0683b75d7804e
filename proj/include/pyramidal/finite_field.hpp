#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pyramidal/error.hpp"
#include "pyramidal/number_theory.hpp"

namespace pyr {

/// An element of F_{p^e}, encoded as sum c_i p^i over its coefficient
/// vector in the polynomial basis (constant term least significant).
struct FieldElement {
  std::uint32_t value = 0;
  auto operator<=>(const FieldElement&) const = default;
};

/// F_{p^e} with the lexicographically smallest monic irreducible modulus.
class FiniteField {
 public:
  static constexpr std::uint64_t kSizeCap = std::uint64_t{1} << 20;

  static FiniteField make(std::uint32_t p, unsigned e) {
    if (!nt::is_prime(p)) throw Error(Errc::invalid_argument, "field characteristic must be prime");
    if (e == 0) throw Error(Errc::invalid_argument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q > kSizeCap) throw Error(Errc::too_large, "field size exceeds 2^20");
    }
    auto t = std::make_shared<Tables>();
    t->p = p;
    t->e = e;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = smallest_irreducible(p, e);
    build_log_tables(*t);
    return FiniteField(std::move(t));
  }

  std::uint32_t characteristic() const noexcept { return t_->p; }
  unsigned degree() const noexcept { return t_->e; }
  std::uint32_t size() const noexcept { return t_->q; }
  /// Coefficients c_0..c_e of the monic modulus (c_e == 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return t_->modulus; }
  FieldElement primitive_element() const noexcept { return {t_->primitive}; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(long long v) const {
    const long long p = t_->p;
    return {static_cast<std::uint32_t>(((v % p) + p) % p)};
  }
  FieldElement from_coefficients(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * t_->p + (c[i] % t_->p);
    return {v};
  }
  std::vector<std::uint32_t> coefficients(FieldElement x) const {
    std::vector<std::uint32_t> c(t_->e);
    for (unsigned i = 0; i < t_->e; ++i) {
      c[i] = x.value % t_->p;
      x.value /= t_->p;
    }
    return c;
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (t_->p == 2) return {a.value ^ b.value};
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < t_->e; ++i) {
      out += ((a.value % t_->p + b.value % t_->p) % t_->p) * scale;
      a.value /= t_->p;
      b.value /= t_->p;
      scale *= t_->p;
    }
    return {out};
  }
  FieldElement neg(FieldElement a) const {
    if (t_->p == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < t_->e; ++i) {
      out += ((t_->p - a.value % t_->p) % t_->p) * scale;
      a.value /= t_->p;
      scale *= t_->p;
    }
    return {out};
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return {0};
    const std::uint32_t n = t_->q - 1;
    return {t_->exp[(t_->log[a.value] + t_->log[b.value]) % n]};
  }
  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw Error(Errc::invalid_argument, "inverse of zero");
    const std::uint32_t n = t_->q - 1;
    return {t_->exp[(n - t_->log[a.value]) % n]};
  }
  FieldElement pow(FieldElement a, std::uint64_t k) const {
    if (k == 0) return one();
    if (a.value == 0) return zero();
    const std::uint64_t n = t_->q - 1;
    return {t_->exp[(static_cast<std::uint64_t>(t_->log[a.value]) * (k % n)) % n]};
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FieldElement a) const {
    if (a.value == 0) throw Error(Errc::invalid_argument, "zero has no multiplicative order");
    const std::uint64_t n = t_->q - 1;
    return n / std::gcd<std::uint64_t, std::uint64_t>(n, t_->log[a.value]);
  }

  bool operator==(const FiniteField& rhs) const {
    return t_ == rhs.t_ || (t_->p == rhs.t_->p && t_->e == rhs.t_->e);
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
    std::uint32_t primitive = 1;
  };

  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  using Poly = std::vector<std::uint32_t>;  // coefficients, constant first

  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = nt::pow_mod(m.back(), p - 2, p);
    while (a.size() > dm) {
      const std::uint64_t c = a.back() * lead_inv % p;
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
      trim(a);
    }
    return a;
  }

  static Poly monic_from_index(std::uint64_t k, std::uint32_t p, unsigned deg) {
    Poly f(deg + 1);
    for (unsigned i = 0; i < deg; ++i) {
      f[i] = static_cast<std::uint32_t>(k % p);
      k /= p;
    }
    f[deg] = 1;
    return f;
  }

  // Candidates ordered by the base-p integer of (c_{e-1} ... c_0).
  // Irreducible iff no monic factor of degree 1..e/2.
  static Poly smallest_irreducible(std::uint32_t p, unsigned e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly f = monic_from_index(k, p, e);
      bool irreducible = true;
      for (unsigned d = 1; d <= e / 2 && irreducible; ++d) {
        std::uint64_t divisors = 1;
        for (unsigned i = 0; i < d; ++i) divisors *= p;
        for (std::uint64_t j = 0; j < divisors; ++j) {
          if (poly_mod(f, monic_from_index(j, p, d), p).empty()) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) return f;
    }
    throw Error(Errc::internal, "no irreducible polynomial found");
  }

  static std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, const Tables& t) {
    Poly pa(t.e), pb(t.e);
    for (unsigned i = 0; i < t.e; ++i) {
      pa[i] = a % t.p;
      a /= t.p;
      pb[i] = b % t.p;
      b /= t.p;
    }
    Poly prod(2 * t.e, 0);
    for (unsigned i = 0; i < t.e; ++i)
      for (unsigned j = 0; j < t.e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % t.p);
    Poly r = poly_mod(prod, t.modulus, t.p);
    std::uint32_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * t.p + r[i];
    return v;
  }

  static void build_log_tables(Tables& t) {
    const std::uint32_t n = t.q - 1;
    const auto prime_factors = nt::factor(n);
    auto power = [&](std::uint32_t base, std::uint64_t k) {
      std::uint32_t r = 1;
      while (k != 0) {
        if (k & 1) r = poly_mul_mod(r, base, t);
        base = poly_mul_mod(base, base, t);
        k >>= 1;
      }
      return r;
    };
    for (std::uint32_t g = 1; g < t.q; ++g) {
      bool primitive = true;
      for (const auto& f : prime_factors)
        if (power(g, n / f.prime) == 1) primitive = false;
      if (!primitive) continue;
      std::uint32_t x;
      t.primitive = g;
      t.exp.assign(n == 0 ? 1 : n, 1);
      t.log.assign(t.q, 0);
      x = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        t.exp[i] = x;
        t.log[x] = i;
        x = poly_mul_mod(x, g, t);
      }
      return;
    }
    throw Error(Errc::internal, "no primitive element found");
  }

  std::shared_ptr<const Tables> t_;
};

inline FiniteField make_field(std::uint32_t p, unsigned e) { return FiniteField::make(p, e); }

/// Square matrix over a finite field. Vectors are rows; the action is v -> vA.
class FqMatrix {
 public:
  FqMatrix(FiniteField field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n) {}
  FqMatrix(FiniteField field, std::size_t n, const std::vector<long long>& entries)
      : field_(std::move(field)), n_(n), a_(n * n) {
    if (entries.size() != n * n) throw Error(Errc::invalid_argument, "matrix entry count mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i) a_[i] = field_.from_int(entries[i]);
  }

  static FqMatrix identity(const FiniteField& field, std::size_t n) {
    FqMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  FieldElement& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  FqMatrix operator*(const FqMatrix& rhs) const {
    if (rhs.n_ != n_) throw Error(Errc::invalid_argument, "matrix dimension mismatch");
    FqMatrix out(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        FieldElement s = field_.zero();
        for (std::size_t k = 0; k < n_; ++k) s = field_.add(s, field_.mul(at(i, k), rhs.at(k, j)));
        out.at(i, j) = s;
      }
    return out;
  }

  FqMatrix pow(std::uint64_t k) const {
    FqMatrix result = identity(field_, n_), base = *this;
    while (k != 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  FieldElement det() const {
    std::vector<FieldElement> m = a_;
    FieldElement d = field_.one();
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t pivot = c;
      while (pivot < n_ && m[pivot * n_ + c].value == 0) ++pivot;
      if (pivot == n_) return field_.zero();
      if (pivot != c) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[c * n_ + j]);
        d = field_.neg(d);
      }
      const FieldElement pv = m[c * n_ + c];
      d = field_.mul(d, pv);
      const FieldElement pinv = field_.inv(pv);
      for (std::size_t r = c + 1; r < n_; ++r) {
        const FieldElement f = field_.mul(m[r * n_ + c], pinv);
        if (f.value == 0) continue;
        for (std::size_t j = c; j < n_; ++j)
          m[r * n_ + j] = field_.sub(m[r * n_ + j], field_.mul(f, m[c * n_ + j]));
      }
    }
    return d;
  }

  bool is_invertible() const { return det().value != 0; }

  /// Multiplicative order; throws on singular input.
  std::uint64_t order() const {
    if (!is_invertible()) throw Error(Errc::singular_matrix, "singular matrix has no order");
    const FqMatrix id = identity(field_, n_);
    FqMatrix x = *this;
    std::uint64_t k = 1;
    while (!(x == id)) {
      x = x * *this;
      ++k;
    }
    return k;
  }

  /// Row vector times matrix.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> out(n_, field_.zero());
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) out[j] = field_.add(out[j], field_.mul(v[i], at(i, j)));
    return out;
  }

  bool operator==(const FqMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }

 private:
  FiniteField field_;
  std::size_t n_;
  std::vector<FieldElement> a_;
};

/// Square matrix over Z/2^l. Invertible iff its determinant is odd.
class IntModMatrix {
 public:
  IntModMatrix(std::size_t n, unsigned l) : n_(n), l_(l), a_(n * n, 0) {
    if (l == 0 || l > 62) throw Error(Errc::invalid_argument, "modulus exponent out of range");
  }

  static IntModMatrix identity(std::size_t n, unsigned l) {
    IntModMatrix m(n, l);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  unsigned log_modulus() const noexcept { return l_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << l_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntModMatrix operator*(const IntModMatrix& rhs) const {
    IntModMatrix out(n_, l_);
    const std::uint64_t mask = modulus() - 1;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s = (s + at(i, k) * rhs.at(k, j)) & mask;
        out.at(i, j) = s;
      }
    return out;
  }

  IntModMatrix pow(std::uint64_t k) const {
    IntModMatrix result = identity(n_, l_), base = *this;
    while (k != 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  /// Entry-wise reduction mod 2.
  IntModMatrix reduce_mod2() const {
    IntModMatrix out(n_, 1);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] & 1;
    return out;
  }

  /// det mod 2, by elimination over F_2.
  bool det_is_odd() const {
    std::vector<std::uint64_t> m(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) m[i] = a_[i] & 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t pivot = c;
      while (pivot < n_ && m[pivot * n_ + c] == 0) ++pivot;
      if (pivot == n_) return false;
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[c * n_ + j]);
      for (std::size_t r = c + 1; r < n_; ++r)
        if (m[r * n_ + c] != 0)
          for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] ^= m[c * n_ + j];
    }
    return true;
  }

  bool is_identity() const { return *this == identity(n_, l_); }

  std::uint64_t order() const {
    if (!det_is_odd()) throw Error(Errc::singular_matrix, "matrix over Z/2^l with even determinant");
    IntModMatrix x = *this;
    std::uint64_t k = 1;
    while (!x.is_identity()) {
      x = x * *this;
      ++k;
    }
    return k;
  }

  /// Row vector times matrix, entries mod 2^l.
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> out(n_, 0);
    const std::uint64_t mask = modulus() - 1;
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) out[j] = (out[j] + v[i] * at(i, j)) & mask;
    return out;
  }

  bool operator==(const IntModMatrix& rhs) const { return n_ == rhs.n_ && l_ == rhs.l_ && a_ == rhs.a_; }

 private:
  std::size_t n_;
  unsigned l_;
  std::vector<std::uint64_t> a_;
};

}  // namespace pyr
