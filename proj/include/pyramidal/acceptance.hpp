#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pyramidal/classify.hpp"
#include "pyramidal/constructions.hpp"
#include "pyramidal/designs.hpp"
#include "pyramidal/linear.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/sweep.hpp"

namespace pyr::acceptance {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no runtime limit
  std::function<Outcome()> body;
};

struct Result {
  int id;
  std::string name;
  bool passed;
  double seconds;
  double limit_seconds;
  std::string detail;
};

namespace detail {

// Involution count and conjugacy checked directly over the element table.
inline bool brute_m_pyramidal(const PermGroup& g, std::size_t m) {
  std::vector<Permutation> invols;
  for (const auto& x : g.elements())
    if (x.is_involution()) invols.push_back(x);
  if (m == 0 || invols.size() != m) return false;
  std::set<Permutation> cls;
  for (const auto& y : g.elements()) cls.insert(y.inverse() * invols.front() * y);
  return cls.size() == m;
}

inline Outcome dihedral_family() {
  for (std::size_t m = 3; m <= 25; m += 2) {
    const auto r = classify_pyramidal(dihedral(m));
    if (!r.is_pyramidal || r.m != m || !r.solvable || r.order != 2 * m)
      return {false, "D_" + std::to_string(2 * m) + " misclassified"};
  }
  return {true, "D_2m is m-pyramidal and solvable for odd m = 3..25"};
}

inline Outcome affine_witnesses() {
  const auto r3 = classify_pyramidal(affine_sl2(3));
  const auto r5 = classify_pyramidal(affine_sl2(5));
  std::ostringstream d;
  d << "q=3: order " << r3.order << " m " << r3.m << " solvable " << r3.solvable << "; q=5: order " << r5.order
    << " m " << r5.m << " solvable " << r5.solvable;
  const bool ok = r3.is_pyramidal && r3.m == 9 && r3.order == 216 && r3.solvable && r5.is_pyramidal && r5.m == 25 &&
                  r5.order == 3000 && !r5.solvable;
  return {ok, d.str()};
}

inline Outcome homocyclic_family() {
  struct Case {
    unsigned l, n;
    std::size_t order;
  };
  for (const Case c : {Case{1, 2, 12}, Case{2, 2, 48}, Case{3, 2, 192}, Case{1, 5, 992}}) {
    const std::size_t m = (std::size_t{1} << c.n) - 1;
    const std::string tag = "(l,n)=(" + std::to_string(c.l) + "," + std::to_string(c.n) + ")";
    const PermGroup g = homocyclic_singer(c.l, c.n);
    const auto r = classify_pyramidal(g);
    if (r.order != c.order || !r.is_pyramidal || r.m != m) return {false, tag + ": wrong order or not m-pyramidal"};
    // K = <involutions> elementary abelian of order 2^n
    const auto invols = involutions(g);
    const Subgroup k = subgroup_generated(g, invols);
    if (k.order() != (std::size_t{1} << c.n) || !is_abelian(k.as_group())) return {false, tag + ": K is not C_2^n"};
    for (const auto& x : k.elements())
      if (!x.is_identity() && !x.is_involution()) return {false, tag + ": K has exponent > 2"};
    const Subgroup h = two_core(g);
    if (h.order() != (std::size_t{1} << (c.l * c.n))) return {false, tag + ": O_2(G) has the wrong order"};
    if (!check_property_2part(g, h).verified()) return {false, tag + ": |H| = 1 mod m check failed"};
    const auto ms = check_mersenne_structure(g);
    if (!ms.result.verified()) return {false, tag + ": " + ms.result.detail};
  }
  return {true, "orders 12, 48, 192, 992 with K = C_2^n; 2-part and Mersenne-structure checks verified"};
}

inline Outcome oracle_soundness() {
  std::size_t built = 0;
  for (std::uint64_t m : {3u, 5u})
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      if (!nt::in_x(m, n).member) continue;
      const PermGroup g = witness_group(m, n);
      if (g.order() != n || !brute_m_pyramidal(g, m))
        return {false, "witness for m=" + std::to_string(m) + ", N=" + std::to_string(n) + " failed"};
      ++built;
    }
  return {true, std::to_string(built) + " witnesses built and verified"};
}

inline Outcome x3_cross_formula() {
  std::size_t mismatches = 0, members = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    bool expected = false;
    if (n % 3 == 0) {
      std::uint64_t d = n / 3;
      unsigned a = 0;
      while (d % 2 == 0) {
        d /= 2;
        ++a;
      }
      expected = a == 1 || (a >= 2 && a % 2 == 0);
    }
    const bool got = nt::in_x(3, n).member;
    members += got;
    mismatches += got != expected;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over N <= 10^4 (" + std::to_string(members) + " members)"};
}

inline Outcome s5_sweep() {
  const auto s = sweep_subgroups(symmetric(5));
  std::ostringstream d;
  d << s.subgroups << " subgroups, " << s.even_order << " of even order, " << s.pyramidal << " pyramidal, "
    << s.order_checks << " order checks, " << s.quatpyr_checks << " Sylow-2 checks";
  if (!s.failures.empty()) d << "; first failure: " << s.failures.front();
  return {s.passed() && s.subgroups == 156, d.str()};
}

inline Outcome mersenne_brute_force() {
  const auto got = nt::mersenne_solutions(100, 20, 1'000'000);
  std::set<nt::MersenneWitness> expected{{2, 3, 3, 2}};
  for (unsigned n = 2; n <= 20; ++n) {
    const std::uint64_t p = (std::uint64_t{1} << n) - 1;
    bool prime = p >= 2;
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime) expected.insert({p, 1, 2, n});
  }
  for (const auto& w : expected) {
    bool n_prime = w.n >= 2;
    for (unsigned q = 2; q * q <= w.n; ++q)
      if (w.n % q == 0) n_prime = false;
    if (!(w.p == 2 && w.k == 3 && w.a == 3 && w.n == 2) && !(w.a == 2 && w.k == 1 && n_prime))
      return {false, "expected set contains a tuple outside the characterization"};
  }
  const std::set<nt::MersenneWitness> got_set(got.begin(), got.end());
  return {got_set == expected && got.size() == got_set.size(),
          std::to_string(got.size()) + " solutions, expected " + std::to_string(expected.size())};
}

inline Outcome zsigmondy_brute_force() {
  std::size_t exceptions = 0, verified = 0;
  for (std::uint64_t a = 2; a <= 30; ++a)
    for (unsigned n = 2; n <= 12; ++n) {
      const auto z = nt::zsigmondy(a, n);
      const bool mersenne_a = ((a + 1) & a) == 0;  // a = 2^s - 1, s >= 2
      const bool expect_exception = (a == 2 && n == 6) || (n == 2 && mersenne_a);
      if (z.is_exception() != expect_exception)
        return {false, "exception status wrong at a=" + std::to_string(a) + ", n=" + std::to_string(n)};
      if (z.is_exception()) {
        ++exceptions;
        continue;
      }
      const std::uint64_t q = *z.prime;
      std::uint64_t power = 1;
      for (unsigned j = 1; j <= n; ++j) {
        power *= a;
        const bool divides = (power - 1) % q == 0;
        if (divides != (j == n))
          return {false, "prime " + std::to_string(q) + " is not primitive for a=" + std::to_string(a) +
                             ", n=" + std::to_string(n)};
      }
      ++verified;
    }
  return {true, std::to_string(exceptions) + " exceptions, " + std::to_string(verified) + " primitive divisors re-verified"};
}

inline Outcome quotient_instance() {
  const PermGroup g = affine_sl2(3);
  const FiniteField f = make_field(3, 1);
  std::vector<Permutation> translations;
  for (const auto& b : standard_basis(f, 2)) translations.push_back(translation_permutation(f, b));
  const Subgroup h = Subgroup::generated(g, translations);
  const auto invols = involutions(g);
  const auto q = check_property_quotient(g, h, invols.front());
  std::ostringstream d;
  d << "l = " << q.ell << ", |G/H| = " << q.quotient_order << ", involutions in G/H: " << q.quotient_m << " ("
    << to_string(q.result.verdict) << ")";
  return {h.order() == 9 && q.ell == 9 && q.quotient_order == 24 && q.quotient_m == 1 && q.result.verified(), d.str()};
}

inline Outcome designs() {
  const auto [ag, res] = build_ag23();
  if (!validate_kts(ag, res).verified()) return {false, "AG(2,3) fails validate_kts"};
  const PermGroup aut = automorphism_group(ag);
  // independent route: translations and GL(2,3) on F_3^2, point x + 3y
  const FiniteField f3 = make_field(3, 1);
  const std::vector<FqMatrix> gl23{FqMatrix(f3, 2, {2, 0, 0, 1}), FqMatrix(f3, 2, {2, 1, 2, 0})};
  const PermGroup gl = linear_to_perm(gl23, 2, f3);
  const PermGroup agl = affine_to_perm(gl23, standard_basis(f3, 2), 2, f3);
  if (gl.order() != 48 || agl.order() != 432 || aut.order() != 432) return {false, "|Aut AG(2,3)| != 432"};
  for (const auto& x : agl.generators())
    if (!aut.contains(x)) return {false, "affine map is not an automorphism"};

  const auto k15 = search_kts(15);
  if (!k15 || !validate_kts(k15->first, k15->second).verified()) return {false, "search_kts(15) failed"};
  const auto k9 = search_kts(9);

  struct Input {
    std::string name;
    TripleSystem t;
    Resolution r;
  };
  std::vector<Input> inputs{{"AG(2,3)", ag, res}, {"KTS(9) by search", k9->first, k9->second},
                            {"KTS(15) by search", k15->first, k15->second}};
  inputs.push_back({"KTS(3)", TripleSystem{3, {{0, 1, 2}}}, Resolution{{{0}}}});
  std::size_t found = 0, tried = 0;
  for (const auto& in : inputs) {
    for (std::size_t m = 1; m < in.t.v; ++m) {
      ++tried;
      const auto g = find_pyramidal_action(in.t, in.r, m);
      if (!g) continue;
      ++found;
      const auto p = verify_prop1(in.t, in.r, *g, m);
      if (!p.result.verified())
        return {false, in.name + ", m=" + std::to_string(m) + ": verify_prop1 " + std::string(to_string(p.result.verdict))};
    }
  }
  return {true, "|Aut| = 432 = 9*48; KTS(15) valid; " + std::to_string(found) + " of " + std::to_string(tried) +
                    " pyramidal searches found an action, all verified"};
}

inline Outcome negative_controls() {
  const auto s4 = classify_pyramidal(symmetric(4));
  if (s4.is_pyramidal || s4.class_sizes != std::vector<std::size_t>{6, 3}) return {false, "S_4 misclassified"};
  if (nt::in_x(5, 40).member) return {false, "40 reported in X_5"};
  try {
    (void)nt::in_x(7, 14);
    return {false, "in_X(7, .) did not raise"};
  } catch (const Error& e) {
    if (e.code() != Errc::unsupported_by_theorem) return {false, "in_X(7, .) raised the wrong error"};
  }
  return {true, "S_4 classes 6+3 not pyramidal; 40 not in X_5; m = 7 unsupported"};
}

}  // namespace detail

inline std::vector<Criterion> criteria() {
  return {
      {1, "dihedral family", 1, detail::dihedral_family},
      {2, "affine SL(2,q) witnesses", 30, detail::affine_witnesses},
      {3, "homocyclic Singer family", 60, detail::homocyclic_family},
      {4, "oracle soundness loop", 300, detail::oracle_soundness},
      {5, "X_3 cross-formula", 0, detail::x3_cross_formula},
      {6, "S_5 completeness sweep", 300, detail::s5_sweep},
      {7, "Mersenne brute force", 0, detail::mersenne_brute_force},
      {8, "Zsigmondy brute force", 0, detail::zsigmondy_brute_force},
      {9, "quotient instance", 0, detail::quotient_instance},
      {10, "designs", 300, detail::designs},
      {11, "negative controls", 0, detail::negative_controls},
  };
}

inline Result run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool passed = o.passed;
  if (c.limit_seconds > 0 && secs > c.limit_seconds) {
    passed = false;
    o.detail += "; exceeded runtime limit";
  }
  return {c.id, c.name, passed, secs, c.limit_seconds, o.detail};
}

inline std::vector<Result> run_all() {
  std::vector<Result> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c));
  return out;
}

}  // namespace pyr::acceptance
