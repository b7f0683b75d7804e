#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's group machinery; permutations are raw image vectors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

// apply a, then b
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

// Closure by multiplying everything found so far by everything found so far.
inline std::set<Perm> closure(std::size_t n, const std::vector<Perm>& gens) {
  std::set<Perm> all{identity(n)};
  all.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (all.insert(compose(a, b)).second) grew = true;
  }
  return all;
}

inline std::uint64_t element_order(const Perm& a) {
  const Perm id = identity(a.size());
  Perm x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = compose(x, a);
    ++k;
  }
  return k;
}

inline std::set<Perm> conjugates(const std::set<Perm>& group, const Perm& x) {
  std::set<Perm> out;
  for (const auto& g : group) out.insert(compose(compose(inverse(g), x), g));
  return out;
}

inline std::size_t involution_count(const std::set<Perm>& group) {
  std::size_t c = 0;
  for (const auto& g : group) c += element_order(g) == 2;
  return c;
}

inline Perm random_perm(std::mt19937& rng, std::size_t n) {
  Perm p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
