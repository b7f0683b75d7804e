#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pyramidal/classify.hpp"
#include "pyramidal/error.hpp"
#include "pyramidal/linear.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr {

/// C_n as an n-cycle.
inline PermGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclic(n) requires n >= 1");
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::close(n, {Permutation(std::move(images))}).named("C_" + std::to_string(n));
}

/// D_{2m} on m points: rotation i -> i+1 and reflection i -> -i.
inline PermGroup dihedral(std::size_t m) {
  if (m < 3) throw Error(Errc::invalid_argument, "dihedral(m) requires m >= 3");
  std::vector<Point> rot(m), refl(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    refl[i] = static_cast<Point>((m - i) % m);
  }
  return PermGroup::close(m, {Permutation(std::move(rot)), Permutation(std::move(refl))})
      .named("D_" + std::to_string(2 * m));
}

inline PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup::trivial(1).named("S_1");
  std::vector<Point> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::close(n, {Permutation(std::move(cycle)), Permutation::from_cycles(n, {{0, 1}})})
      .named("S_" + std::to_string(n));
}

inline PermGroup alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup::close(std::max<std::size_t>(n, 1), gens).named("A_" + std::to_string(n));
}

/// Q_8 in its right regular representation on {+-1, +-i, +-j, +-k}.
/// Point 4s + u is the element (-1)^s * unit[u], unit = (1, i, j, k).
inline PermGroup quaternion8() {
  // unit[a] * unit[b] = sign * unit[c]
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mult = [](int u) {
    std::vector<Point> images(8);
    for (int s = 0; s < 2; ++s)
      for (int a = 0; a < 4; ++a) images[4 * s + a] = static_cast<Point>(4 * (s ^ kNeg[a][u]) + kUnit[a][u]);
    return Permutation(std::move(images));
  };
  return PermGroup::close(8, {right_mult(1), right_mult(2)}).named("Q_8");
}

/// G acting on its own element table by right multiplication.
inline PermGroup regular_representation(const PermGroup& g) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(g.order());
    for (ElementIndex i = 0; i < g.order(); ++i) images[i] = *g.index_of(g.element(i) * s);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::close(g.order(), gens);
}

/// G x H on the disjoint union of the point sets.
inline PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t dg = g.degree(), dh = h.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(dg + dh);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < dg; ++i) images[i] = s[i];
    gens.emplace_back(std::move(images));
  }
  for (const auto& s : h.generators()) {
    std::vector<Point> images(dg + dh);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < dh; ++i) images[dg + i] = static_cast<Point>(dg + s[i]);
    gens.emplace_back(std::move(images));
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + " x " + h.name();
  return PermGroup::close(dg + dh, gens).named(std::move(name));
}

/// Least primitive root modulo an odd prime.
inline std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!nt::is_prime(p) || p < 3) throw Error(Errc::invalid_argument, "primitive root requires an odd prime");
  const auto fs = nt::factor(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& f : fs)
      if (nt::pow_mod(g, (p - 1) / f.prime, p) == 1) ok = false;
    if (ok) return g;
  }
  throw Error(Errc::internal, "no primitive root");
}

/// C_m x| C_{2^a} on the m points of Z/m: x -> x + 1 and x -> s x, where s
/// has order 2^a. The unique involution of the acting group is inversion.
inline PermGroup cm_semidirect_2group(std::uint64_t m, unsigned a) {
  if (m < 3 || !nt::is_prime(m)) throw Error(Errc::invalid_argument, "m must be an odd prime");
  if (a == 0 || a >= 63 || (m - 1) % (std::uint64_t{1} << a) != 0)
    throw Error(Errc::invalid_argument, "2^a must divide m - 1 (a <= t)");
  const std::uint64_t s = nt::pow_mod(least_primitive_root(m), (m - 1) >> a, m);
  std::vector<Point> shift(m), scale(m);
  for (std::uint64_t x = 0; x < m; ++x) {
    shift[x] = static_cast<Point>((x + 1) % m);
    scale[x] = static_cast<Point>(x * s % m);
  }
  return PermGroup::close(m, {Permutation(std::move(shift)), Permutation(std::move(scale))})
      .named("C_" + std::to_string(m) + " x| C_" + std::to_string(std::uint64_t{1} << a));
}

/// H_{l,n} x| <gamma> acting on the 2^{nl} points of H_{l,n} = (Z/2^l)^n,
/// with gamma the lifted Singer cycle.
inline PermGroup homocyclic_singer(unsigned l, unsigned n) {
  if (l == 0 || n < 2) throw Error(Errc::invalid_argument, "homocyclic_singer requires l >= 1, n >= 2");
  const std::uint64_t m = (std::uint64_t{1} << n) - 1;
  if (!nt::is_prime(m)) throw Error(Errc::invalid_argument, "2^n - 1 is not prime");
  if (static_cast<std::uint64_t>(n) * l > 16) throw Error(Errc::too_large, "2^(nl) exceeds 10^5");
  const std::size_t points = std::size_t{1} << (n * l);
  std::vector<Permutation> gens;
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Point> images(points);
    const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
    for (std::size_t i = 0; i < points; ++i) {
      auto v = decode_modular(i, l, n);
      v[k] = (v[k] + 1) & mask;
      images[i] = static_cast<Point>(encode_modular(v, l));
    }
    gens.emplace_back(std::move(images));
  }
  gens.push_back(modular_matrix_permutation(singer_lift(l, n)));
  PermGroup g = PermGroup::close(points, gens);
  if (g.order() != points * m) throw Error(Errc::internal, "homocyclic_singer: unexpected order");
  return g.named("H_{" + std::to_string(l) + "," + std::to_string(n) + "} x| C_" + std::to_string(m));
}

/// F_q^2 x| SL(2, q) on the q^2 affine points.
inline PermGroup affine_sl2(std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || q * q > 1000) throw Error(Errc::invalid_argument, "affine_sl2 requires odd q with q^2 <= 1000");
  const auto [p, e] = split_prime_power(q);
  const FiniteField f = make_field(p, e);
  const auto mats = sl2(q);
  const auto basis = standard_basis(f, 2);
  return affine_to_perm(mats, basis, 2, f).named("F_" + std::to_string(q) + "^2 x| SL(2," + std::to_string(q) + ")");
}

/// Inversion x -> x^-1 of an abelian group, as a permutation of its element table.
inline Permutation inversion_automorphism(const PermGroup& n) {
  std::vector<Point> images(n.order());
  for (ElementIndex i = 0; i < n.order(); ++i) images[i] = *n.index_of(n.element(i).inverse());
  return Permutation(std::move(images));
}

/// x -> x^k of an abelian group, as a permutation of its element table.
inline Permutation power_automorphism(const PermGroup& n, long long k) {
  std::vector<Point> images(n.order());
  for (ElementIndex i = 0; i < n.order(); ++i) images[i] = *n.index_of(n.element(i).pow(k));
  return Permutation(images);
}

/// N x| A on the |N| points of N's element table: N acts by right
/// multiplication and A by applying the automorphism. Requires N abelian of
/// odd order and inversion to be the unique involution of <A>.
inline PermGroup npyr_semidirect(const PermGroup& n, std::span<const Permutation> automorphisms) {
  if (n.order() % 2 == 0) throw Error(Errc::invalid_argument, "N must have odd order");
  if (!is_abelian(n)) throw Error(Errc::invalid_argument, "N must be abelian");
  const std::size_t size = n.order();
  for (const auto& alpha : automorphisms) {
    if (alpha.degree() != size) throw Error(Errc::degree_mismatch, "automorphism degree must equal |N|");
    for (ElementIndex x = 0; x < size; ++x)
      for (const auto& s : n.generators()) {
        const ElementIndex xs = *n.index_of(n.element(x) * s);
        const ElementIndex image_s = alpha[*n.index_of(s)];
        if (alpha[xs] != n.multiply(alpha[x], image_s))
          throw Error(Errc::invalid_argument, "supplied map is not an automorphism of N");
      }
  }
  const PermGroup a = PermGroup::close(size, automorphisms);
  const auto a_invols = involutions(a);
  const Permutation iota = inversion_automorphism(n);
  if (a_invols.size() != 1 || a_invols.front() != iota)
    throw Error(Errc::invalid_argument, "inversion must be the unique involution of <A>");

  std::vector<Permutation> gens;
  for (const auto& s : n.generators()) {
    std::vector<Point> images(size);
    for (ElementIndex i = 0; i < size; ++i) images[i] = *n.index_of(n.element(i) * s);
    gens.emplace_back(std::move(images));
  }
  for (const auto& alpha : automorphisms) gens.push_back(alpha);
  return PermGroup::close(size, gens);
}

/// An m-pyramidal group of the given order for odd prime m != 7:
///   2^a m d with 1 <= a <= t  ->  C_d x (C_m x| C_{2^a})
///   2^a m d with n | a        ->  C_d x (H_{a/n,n} x| <gamma>)
/// The result is checked before it is returned.
inline PermGroup witness_group(std::uint64_t m, std::uint64_t order) {
  const auto membership = nt::in_x(m, order);
  if (!membership.member)
    throw Error(Errc::not_in_order_set, std::to_string(order) + " is not the order of any m-pyramidal group, m = " + std::to_string(m));
  const auto dec = nt::decompose_order(m, order);
  const std::uint64_t d = *dec.d;
  PermGroup core = (membership.set == nt::OrderSet::z || membership.set == nt::OrderSet::both)
                       ? cm_semidirect_2group(m, dec.a)
                       : homocyclic_singer(dec.a / *nt::mersenne_exponent(m), *nt::mersenne_exponent(m));
  PermGroup g = d == 1 ? core : direct_product(cyclic(d), core);
  if (g.order() != order || !is_m_pyramidal(g, m))
    throw Error(Errc::internal, "witness_group produced a group that failed verification");
  return g;
}

}  // namespace pyr
