#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pyramidal/error.hpp"
#include "pyramidal/finite_field.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr {

// Vectors of F_q^n are numbered sum v_i q^i (least-significant coordinate first).

inline std::size_t vector_count(const FiniteField& f, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= f.size();
    if (count > FiniteField::kSizeCap) throw Error(Errc::too_large, "vector space too large");
  }
  return static_cast<std::size_t>(count);
}

inline std::vector<FieldElement> decode_vector(const FiniteField& f, std::size_t n, std::size_t index) {
  std::vector<FieldElement> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = {static_cast<std::uint32_t>(index % f.size())};
    index /= f.size();
  }
  return v;
}

inline std::size_t encode_vector(const FiniteField& f, std::span<const FieldElement> v) {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * f.size() + v[i].value;
  return index;
}

/// Permutation of F_q^n induced by v -> vA.
inline Permutation matrix_permutation(const FqMatrix& a) {
  if (!a.is_invertible()) throw Error(Errc::singular_matrix, "singular matrix has no permutation image");
  const FiniteField& f = a.field();
  const std::size_t count = vector_count(f, a.dim());
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i)
    images[i] = static_cast<Point>(encode_vector(f, a.apply(decode_vector(f, a.dim(), i))));
  return Permutation(std::move(images));
}

/// Permutation of F_q^n induced by v -> v + b.
inline Permutation translation_permutation(const FiniteField& f, std::span<const FieldElement> b) {
  const std::size_t n = b.size();
  const std::size_t count = vector_count(f, n);
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto v = decode_vector(f, n, i);
    for (std::size_t k = 0; k < n; ++k) v[k] = f.add(v[k], b[k]);
    images[i] = static_cast<Point>(encode_vector(f, v));
  }
  return Permutation(std::move(images));
}

/// Standard basis vectors e_0..e_{n-1} of F_q^n.
inline std::vector<std::vector<FieldElement>> standard_basis(const FiniteField& f, std::size_t n) {
  std::vector<std::vector<FieldElement>> basis(n, std::vector<FieldElement>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = f.one();
  return basis;
}

/// The linear group generated by `mats`, acting on all q^n vectors.
inline PermGroup linear_to_perm(std::span<const FqMatrix> mats, std::size_t n, const FiniteField& field) {
  std::vector<Permutation> gens;
  for (const auto& a : mats) {
    if (a.dim() != n || !(a.field() == field)) throw Error(Errc::invalid_argument, "matrix does not match space");
    gens.push_back(matrix_permutation(a));
  }
  return PermGroup::close(vector_count(field, n), gens);
}

/// The affine group generated by v -> vA (A in mats) and v -> v + b (b in translations).
inline PermGroup affine_to_perm(std::span<const FqMatrix> mats,
                                std::span<const std::vector<FieldElement>> translations, std::size_t n,
                                const FiniteField& field) {
  std::vector<Permutation> gens;
  for (const auto& a : mats) {
    if (a.dim() != n || !(a.field() == field)) throw Error(Errc::invalid_argument, "matrix does not match space");
    gens.push_back(matrix_permutation(a));
  }
  for (const auto& b : translations) {
    if (b.size() != n) throw Error(Errc::invalid_argument, "translation vector has wrong length");
    gens.push_back(translation_permutation(field, b));
  }
  return PermGroup::close(vector_count(field, n), gens);
}

/// Multiplication by a primitive element of F_{2^n}, written over F_2 in the
/// polynomial basis 1, t, ..., t^{n-1}.
inline FqMatrix singer_matrix(unsigned n) {
  if (n < 2 || n > 20) throw Error(Errc::invalid_argument, "singer_matrix requires 2 <= n <= 20");
  const FiniteField big = make_field(2, n);
  const FiniteField f2 = make_field(2, 1);
  const FieldElement g = big.primitive_element();
  FqMatrix m(f2, n);
  for (unsigned i = 0; i < n; ++i) {
    const auto row = big.coefficients(big.mul(FieldElement{std::uint32_t{1} << i}, g));
    for (unsigned j = 0; j < n; ++j) m.at(i, j) = f2.from_int(row[j]);
  }
  return m;
}

struct PrimePowerField {
  std::uint32_t p;
  unsigned e;
};

inline PrimePowerField split_prime_power(std::uint64_t q) {
  const auto fs = nt::factor(q);
  if (fs.size() != 1) throw Error(Errc::invalid_argument, std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(fs[0].prime), fs[0].exponent};
}

/// Two generators of SL(2, q), q an odd prime power <= 31. For prime q the
/// elementary transvections; otherwise diag(w, w^-1) and [[-1, 1], [-1, 0]]
/// with w primitive.
inline std::vector<FqMatrix> sl2(std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || q > 31) throw Error(Errc::invalid_argument, "sl2 requires an odd prime power q <= 31");
  const auto [p, e] = split_prime_power(q);
  const FiniteField f = make_field(p, e);
  if (e == 1) return {FqMatrix(f, 2, {1, 1, 0, 1}), FqMatrix(f, 2, {1, 0, 1, 1})};
  const FieldElement w = f.primitive_element();
  FqMatrix d(f, 2);
  d.at(0, 0) = w;
  d.at(1, 1) = f.inv(w);
  return {d, FqMatrix(f, 2, {-1, 1, -1, 0})};
}

/// Lift of the Singer cycle of F_2^n to an automorphism of (Z/2^l)^n of
/// order m = 2^n - 1: lift entries to integers, then raise to the 2-part of
/// the lift's order.
inline IntModMatrix singer_lift(unsigned l, unsigned n) {
  if (l == 0 || n < 2) throw Error(Errc::invalid_argument, "singer_lift requires l >= 1, n >= 2");
  if (static_cast<std::uint64_t>(n) * l > 20) throw Error(Errc::too_large, "2^(nl) exceeds 10^6");
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  if (!nt::is_prime(m)) throw Error(Errc::invalid_argument, "2^n - 1 is not prime");
  const FqMatrix s = singer_matrix(n);
  IntModMatrix tau(n, l);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) tau.at(i, j) = s.at(i, j).value;
  // o(tau) = m * 2^j; find j from the order of tau^m.
  IntModMatrix x = tau.pow(m);
  std::uint64_t two_power = 1;
  while (!x.is_identity()) {
    x = x * x;
    two_power *= 2;
  }
  return tau.pow(two_power);
}

// Points of (Z/2^l)^n are numbered sum v_i 2^{l i}.

inline std::vector<std::uint64_t> decode_modular(std::size_t index, unsigned l, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
  for (std::size_t i = 0; i < n; ++i) v[i] = (index >> (l * i)) & mask;
  return v;
}

inline std::size_t encode_modular(std::span<const std::uint64_t> v, unsigned l) {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = (index << l) | v[i];
  return index;
}

/// Permutation of (Z/2^l)^n induced by v -> v * a.
inline Permutation modular_matrix_permutation(const IntModMatrix& a) {
  if (!a.det_is_odd()) throw Error(Errc::singular_matrix, "matrix over Z/2^l is not invertible");
  const unsigned l = a.log_modulus();
  const std::size_t count = std::size_t{1} << (l * a.dim());
  std::vector<Point> images(count);
  for (std::size_t i = 0; i < count; ++i)
    images[i] = static_cast<Point>(encode_modular(a.apply(decode_modular(i, l, a.dim())), l));
  return Permutation(std::move(images));
}

}  // namespace pyr
