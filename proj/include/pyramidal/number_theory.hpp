#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pyramidal/error.hpp"

namespace pyr::nt {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Trial-division factorization, primes ascending. factor(1) is empty.
inline std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cannot factor 0");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2)
    if (n % p == 0) return false;
  return true;
}

/// Exact power, or nullopt on overflow past 2^63.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// n with 2^n - 1 == m, if any.
inline std::optional<unsigned> mersenne_exponent(std::uint64_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "mersenne_exponent requires m >= 1");
  if (m == std::numeric_limits<std::uint64_t>::max()) return 64;
  const std::uint64_t next = m + 1;
  if ((next & (next - 1)) != 0) return std::nullopt;
  unsigned n = 0;
  while ((std::uint64_t{1} << n) != next) ++n;
  return n;
}

/// 2-adic valuation; v2(0) is undefined and rejected.
inline unsigned v2(std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "2-adic valuation of 0");
  unsigned a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++a;
  }
  return a;
}

struct TwoAdicSplit {
  unsigned t;
  std::uint64_t r;
  bool operator==(const TwoAdicSplit&) const = default;
};

/// m - 1 = 2^t * r with r odd.
inline TwoAdicSplit two_adic_split(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) throw Error(Errc::invalid_argument, "two_adic_split requires odd m >= 3");
  const unsigned t = v2(m - 1);
  return {t, (m - 1) >> t};
}

/// Multiplicative order of 2 modulo odd m >= 3.
inline unsigned order_of_2_mod(std::uint64_t m) {
  if (m < 3 || m % 2 == 0) throw Error(Errc::invalid_argument, "order_of_2_mod requires odd m >= 3");
  std::uint64_t x = 2 % m;
  unsigned n = 1;
  while (x != 1) {
    x = mul_mod(x, 2, m);
    ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Orders of m-pyramidal groups for prime m

/// N = 2^a * rest, with m | rest and d = rest / m.
struct OrderDecomposition {
  std::uint64_t n;
  unsigned a;
  unsigned m_part;     // exponent of m in N
  std::optional<std::uint64_t> d;  // N / (2^a m) when m divides N
};

inline OrderDecomposition decompose_order(std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "order must be positive");
  OrderDecomposition out{n, v2(n), 0, std::nullopt};
  std::uint64_t rest = n >> out.a;
  for (std::uint64_t r = rest; m > 1 && r % m == 0; r /= m) ++out.m_part;
  if (rest % m == 0) out.d = rest / m;
  return out;
}

enum class OrderSet { none, y, z, both };

constexpr std::string_view to_string(OrderSet s) {
  switch (s) {
    case OrderSet::none: return "none";
    case OrderSet::y: return "Y";
    case OrderSet::z: return "Z";
    case OrderSet::both: return "both";
  }
  return "none";
}

struct Membership {
  bool member;
  OrderSet set;
};

inline void require_theorem_prime(std::uint64_t m) {
  if (m == 7)
    throw Error(Errc::unsupported_by_theorem, "m = 7 is not covered by the order classification theorem");
  if (m < 3 || m % 2 == 0 || !is_prime(m))
    throw Error(Errc::invalid_argument, "m must be an odd prime, got " + std::to_string(m));
}

/// Whether `order` lies in Y_m, Z_m, or both, for an odd prime m != 7.
///   Y_m = {2^a m d : n | a, a >= 1, d odd} when m = 2^n - 1, else empty
///   Z_m = {2^a m d : 1 <= a <= t, d odd} where m - 1 = 2^t r, r odd
inline Membership in_x(std::uint64_t m, std::uint64_t order) {
  require_theorem_prime(m);
  const OrderDecomposition dec = decompose_order(m, order);
  if (!dec.d || dec.a == 0) return {false, OrderSet::none};
  const auto n = mersenne_exponent(m);
  const bool in_y = n && dec.a % *n == 0;
  const bool in_z = dec.a <= two_adic_split(m).t;
  if (in_y && in_z) return {true, OrderSet::both};
  if (in_y) return {true, OrderSet::y};
  if (in_z) return {true, OrderSet::z};
  return {false, OrderSet::none};
}

// ---------------------------------------------------------------------------
// Brute-force scans

struct MersenneWitness {
  std::uint64_t p;
  unsigned k;
  std::uint64_t a;
  unsigned n;
  bool operator==(const MersenneWitness&) const = default;
  auto operator<=>(const MersenneWitness&) const = default;
};

/// Every (p, k, a, n) with p prime <= p_max, k >= 1, 2 <= a <= a_max,
/// 2 <= n <= n_max and p^k = a^n - 1, found by exhaustive scan.
inline std::vector<MersenneWitness> mersenne_solutions(std::uint64_t a_max, unsigned n_max, std::uint64_t p_max) {
  using boost::multiprecision::cpp_int;
  if (a_max > 1000 || n_max > 64 || p_max > 1'000'000)
    throw Error(Errc::invalid_argument, "mersenne_solutions bounds exceed 1000/64/10^6");
  std::vector<MersenneWitness> out;
  for (std::uint64_t a = 2; a <= a_max; ++a) {
    for (unsigned n = 2; n <= n_max; ++n) {
      cpp_int value = boost::multiprecision::pow(cpp_int(a), n) - 1;
      std::uint64_t p = 0;
      for (std::uint64_t q = 2; q <= p_max; ++q) {
        if (value % q == 0) {
          p = q;
          break;
        }
      }
      if (p == 0) continue;
      unsigned k = 0;
      while (value % p == 0) {
        value /= p;
        ++k;
      }
      if (value == 1) out.push_back({p, k, a, n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class ZsigmondyException { none, n2_a_mersenne, a2_n6, unexpected };

struct ZsigmondyResult {
  std::optional<std::uint64_t> prime;  // least primitive prime divisor
  ZsigmondyException exception = ZsigmondyException::none;
  bool is_exception() const { return !prime.has_value(); }
};

/// Least prime q | a^n - 1 with q not dividing a^j - 1 for 0 < j < n.
/// When none exists the result carries the matching exceptional family.
inline ZsigmondyResult zsigmondy(std::uint64_t a, unsigned n) {
  if (a < 2 || n < 2) throw Error(Errc::invalid_argument, "zsigmondy requires a, n >= 2");
  const auto power = checked_pow(a, n);
  if (!power) throw Error(Errc::overflow, "a^n exceeds 2^63");
  for (const auto& [q, e] : factor(*power - 1)) {
    bool primitive = true;
    for (unsigned j = 1; j < n && primitive; ++j)
      if (pow_mod(a, j, q) == 1) primitive = false;
    if (primitive) return {q, ZsigmondyException::none};
  }
  ZsigmondyResult r;
  const auto s = mersenne_exponent(a);
  if (n == 2 && s && *s >= 2)
    r.exception = ZsigmondyException::n2_a_mersenne;
  else if (a == 2 && n == 6)
    r.exception = ZsigmondyException::a2_n6;
  else
    r.exception = ZsigmondyException::unexpected;
  return r;
}

}  // namespace pyr::nt
