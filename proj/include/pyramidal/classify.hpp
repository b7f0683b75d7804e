#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyramidal/error.hpp"
#include "pyramidal/finite_field.hpp"
#include "pyramidal/linear.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr {

/// Summary of a group's involution structure.
///
/// A group is m-pyramidal when it has exactly m involutions and they form a
/// single conjugacy class. K is the subgroup generated by the involutions and
/// C its centralizer.
struct PyramidalReport {
  std::size_t order = 0;
  std::size_t m = 0;
  std::vector<std::size_t> class_sizes;  // descending
  bool is_pyramidal = false;
  bool solvable = false;
  std::size_t k_order = 0;
  std::size_t c_order = 0;
  Sylow2Shape sylow2 = Sylow2Shape::trivial;

  bool operator==(const PyramidalReport&) const = default;
};

inline PyramidalReport classify_pyramidal(const PermGroup& g) {
  if (g.is_trivial()) throw Error(Errc::invalid_argument, "the trivial group is not classified as pyramidal");
  PyramidalReport r;
  r.order = g.order();
  const auto invols = involutions(g);
  r.m = invols.size();
  for (const auto& cls : conjugacy_classes_of(g, invols)) r.class_sizes.push_back(cls.size());
  std::sort(r.class_sizes.rbegin(), r.class_sizes.rend());
  r.is_pyramidal = r.m >= 1 && r.class_sizes.size() == 1;
  r.solvable = is_solvable(g);
  const Subgroup k = subgroup_generated(g, invols);
  r.k_order = k.order();
  r.c_order = centralizer_of_subgroup(g, k).order();
  r.sylow2 = sylow2_shape(g);
  return r;
}

inline bool is_m_pyramidal(const PermGroup& g, std::size_t m) {
  const auto invols = involutions(g);
  if (m == 0 || invols.size() != m) return false;
  return conjugacy_class(g, invols.front()).size() == m;
}

// ---------------------------------------------------------------------------
// Lemma-level checks. Each returns a three-valued verdict so a harness can
// tell a vacuous pass from a confirmed one.

enum class Verdict { hypothesis_not_met, verified, violation };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::verified: return "verified";
    case Verdict::violation: return "violation";
  }
  return "violation";
}

struct CheckResult {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::string detail;

  static CheckResult not_met(std::string why) { return {Verdict::hypothesis_not_met, std::move(why)}; }
  static CheckResult ok(std::string why = {}) { return {Verdict::verified, std::move(why)}; }
  static CheckResult fail(std::string why) { return {Verdict::violation, std::move(why)}; }
  bool verified() const { return verdict == Verdict::verified; }
};

/// If H has even order and H C_G(K) = G, then H is m-pyramidal.
inline CheckResult check_property_supplement(const PermGroup& g, const Subgroup& h) {
  const auto invols = involutions(g);
  if (invols.empty() || !is_m_pyramidal(g, invols.size())) return CheckResult::not_met("G is not pyramidal");
  if (h.parent().order() != g.order() || h.parent().degree() != g.degree())
    throw Error(Errc::invalid_argument, "H is not a subgroup handle of G");
  if (h.order() % 2 != 0) return CheckResult::not_met("|H| is odd");
  const Subgroup k = subgroup_generated(g, invols);
  const Subgroup c = centralizer_of_subgroup(g, k);
  std::vector<bool> product(g.order(), false);
  std::size_t covered = 0;
  for (ElementIndex hi : h.member_indices())
    for (ElementIndex ci : c.member_indices()) {
      const ElementIndex x = g.multiply(hi, ci);
      if (!product[x]) {
        product[x] = true;
        ++covered;
      }
    }
  if (covered != g.order())
    return CheckResult::not_met("HC has " + std::to_string(covered) + " elements, |G| = " + std::to_string(g.order()));
  const PermGroup hg = h.as_group();
  if (is_m_pyramidal(hg, invols.size())) return CheckResult::ok("H is " + std::to_string(invols.size()) + "-pyramidal");
  return CheckResult::fail("H has even order and HC = G but is not m-pyramidal");
}

struct QuotientCheck {
  std::size_t ell = 0;
  std::size_t quotient_order = 0;
  std::size_t quotient_m = 0;
  CheckResult result;
};

/// For H normal of odd order and an involution e, with l = |{h : h^e = h^-1}|,
/// G/H is (m/l)-pyramidal.
inline QuotientCheck check_property_quotient(const PermGroup& g, const Subgroup& h, const Permutation& e) {
  if (!is_normal(g, h)) throw Error(Errc::not_normal, "H is not normal in G");
  if (h.order() % 2 == 0) throw Error(Errc::invalid_argument, "H must have odd order");
  g.require_index(e);
  if (!e.is_involution()) throw Error(Errc::invalid_argument, "e is not an involution");
  QuotientCheck out;
  for (ElementIndex hi : h.member_indices()) {
    const Permutation& x = g.element(hi);
    if (x.conjugate_by(e) == x.inverse()) ++out.ell;
  }
  const std::size_t m = involutions(g).size();
  if (!is_m_pyramidal(g, m)) {
    out.result = CheckResult::not_met("G is not pyramidal");
    return out;
  }
  const PermGroup q = quotient(g, h);
  out.quotient_order = q.order();
  out.quotient_m = involutions(q).size();
  if (m % out.ell != 0) {
    out.result = CheckResult::fail("l = " + std::to_string(out.ell) + " does not divide m = " + std::to_string(m));
    return out;
  }
  const std::size_t expected = m / out.ell;
  if (is_m_pyramidal(q, expected))
    out.result = CheckResult::ok("G/H is " + std::to_string(expected) + "-pyramidal");
  else
    out.result = CheckResult::fail("G/H has " + std::to_string(out.quotient_m) + " involutions, expected a single class of " +
                                   std::to_string(expected));
  return out;
}

/// For m prime and H a normal 2-subgroup, |H| = 1 mod m.
inline CheckResult check_property_2part(const PermGroup& g, const Subgroup& h) {
  const std::size_t m = involutions(g).size();
  if (!is_m_pyramidal(g, m)) return CheckResult::not_met("G is not pyramidal");
  if (!nt::is_prime(m)) return CheckResult::not_met("m = " + std::to_string(m) + " is not prime");
  if (!detail::is_power_of_two(h.order())) return CheckResult::not_met("H is not a 2-group");
  if (!is_normal(g, h)) return CheckResult::not_met("H is not normal");
  if (h.order() % m == 1 % m)
    return CheckResult::ok(std::to_string(h.order()) + " = 1 mod " + std::to_string(m));
  return CheckResult::fail(std::to_string(h.order()) + " != 1 mod " + std::to_string(m));
}

struct TwoTransitivity {
  bool linear_transitive = false;       // H transitive on V \ {0}
  bool affine_two_transitive = false;   // V x| H 2-transitive on V
  CheckResult result;
};

/// Computes both sides of "V x| H is 2-transitive iff H is transitive on the
/// nonzero vectors" independently and checks that they agree.
inline TwoTransitivity check_two_transitive(const FiniteField& field, std::size_t n, std::span<const FqMatrix> mats) {
  TwoTransitivity out;
  const std::size_t points = vector_count(field, n);

  const PermGroup h = linear_to_perm(mats, n, field);
  {
    std::vector<bool> seen(points, false);
    std::vector<Point> orbit{1};
    seen[1] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : h.generators())
        if (!seen[s[orbit[i]]]) {
          seen[s[orbit[i]]] = true;
          orbit.push_back(s[orbit[i]]);
        }
    out.linear_transitive = orbit.size() == points - 1;
  }

  const auto basis = standard_basis(field, n);
  const PermGroup g = affine_to_perm(mats, basis, n, field);
  {
    std::vector<bool> seen(points * points, false);
    std::vector<std::size_t> orbit{1};  // ordered pair (0, 1)
    seen[1] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const std::size_t a = orbit[i] / points, b = orbit[i] % points;
      for (const auto& s : g.generators()) {
        const std::size_t image = static_cast<std::size_t>(s[a]) * points + s[b];
        if (!seen[image]) {
          seen[image] = true;
          orbit.push_back(image);
        }
      }
    }
    out.affine_two_transitive = orbit.size() == points * (points - 1);
  }

  if (out.linear_transitive == out.affine_two_transitive)
    out.result = CheckResult::ok(out.linear_transitive ? "both transitive" : "neither transitive");
  else
    out.result = CheckResult::fail("linear transitivity and affine 2-transitivity disagree");
  return out;
}

struct MersenneStructure {
  std::size_t quotient_order = 0;
  std::size_t n = 0;
  CheckResult result;
};

/// When K is elementary abelian of order 2^n with m = 2^n - 1 prime, m != 7:
/// |G/C_G(K)| is m or m*n and G/C_G(K) has a normal subgroup of order m.
inline MersenneStructure check_mersenne_structure(const PermGroup& g) {
  MersenneStructure out;
  const auto invols = involutions(g);
  const std::size_t m = invols.size();
  if (!is_m_pyramidal(g, m)) {
    out.result = CheckResult::not_met("G is not pyramidal");
    return out;
  }
  const Subgroup k = subgroup_generated(g, invols);
  for (ElementIndex i : k.member_indices())
    if (!g.element(i).is_identity() && !g.element(i).is_involution()) {
      out.result = CheckResult::not_met("K is not an elementary abelian 2-group");
      return out;
    }
  if (!detail::is_power_of_two(k.order()) || k.order() - 1 != m) {
    out.result = CheckResult::not_met("|K| - 1 != m");
    return out;
  }
  out.n = nt::v2(k.order());
  if (m == 7 || !nt::is_prime(m)) {
    out.result = CheckResult::not_met("m must be a prime other than 7");
    return out;
  }
  const Subgroup c = centralizer_of_subgroup(g, k);
  const PermGroup q = quotient(g, c);
  out.quotient_order = q.order();
  if (q.order() != m && q.order() != m * out.n) {
    out.result = CheckResult::fail("|G/C| = " + std::to_string(q.order()) + " is neither m nor m*n");
    return out;
  }
  for (ElementIndex i = 0; i < q.order(); ++i) {
    if (q.element(i).order() != m) continue;
    std::vector<ElementIndex> gens{i};
    if (is_normal(q, Subgroup::generated_by_indices(q, gens))) {
      out.result = CheckResult::ok("|G/C| = " + std::to_string(q.order()) + " with a normal C_m");
      return out;
    }
  }
  out.result = CheckResult::fail("G/C has no normal subgroup of order m");
  return out;
}

/// Sylow 2-subgroups with a single involution force pyramidality.
inline CheckResult check_quatpyr(const PermGroup& g) {
  if (g.order() % 2 != 0) return CheckResult::not_met("odd order");
  const Sylow2Shape shape = sylow2_shape(g);
  if (shape != Sylow2Shape::cyclic && shape != Sylow2Shape::quaternion)
    return CheckResult::not_met("Sylow 2-subgroup is " + std::string(to_string(shape)));
  const std::size_t m = involutions(g).size();
  if (is_m_pyramidal(g, m)) return CheckResult::ok(std::to_string(m) + "-pyramidal");
  return CheckResult::fail("Sylow 2-subgroup has one involution but involutions are not all conjugate");
}

/// Pairwise non-commuting involutions generating G, with m prime, force G to
/// be dihedral of order 2m.
inline CheckResult check_dihedral_structure(const PermGroup& g) {
  const auto invols = involutions(g);
  const std::size_t m = invols.size();
  if (m == 0) return CheckResult::not_met("no involutions");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (invols[i].commutes_with(invols[j])) return CheckResult::not_met("two involutions commute");
  if (subgroup_generated(g, invols).order() != g.order()) return CheckResult::not_met("G is not generated by involutions");
  if (!nt::is_prime(m)) return CheckResult::not_met("m is not prime");
  if (g.order() != 2 * m) return CheckResult::fail("|G| = " + std::to_string(g.order()) + " != 2m");
  for (const auto& c : g.elements()) {
    if (c.order() != m) continue;
    const Permutation c_inv = c.inverse();
    for (const auto& t : invols)
      if (c.conjugate_by(t) == c_inv) return CheckResult::ok("dihedral of order " + std::to_string(2 * m));
  }
  return CheckResult::fail("no cyclic index-2 subgroup inverted by an involution");
}

}  // namespace pyr
