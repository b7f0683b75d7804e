#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "pyramidal/classify.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr {

/// All subgroups of g by fixpoint closure: start from the cyclic subgroups,
/// then extend every subgroup found by every element until nothing new
/// appears. Sorted by (order, member indices).
inline std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<bool>> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> frontier;
  for (ElementIndex i = 0; i < g.order(); ++i) {
    std::vector<ElementIndex> gens{i};
    Subgroup s = Subgroup::generated_by_indices(g, gens);
    if (seen.insert(s.mask()).second) {
      frontier.push_back(found.size());
      found.push_back(std::move(s));
    }
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (ElementIndex i = 0; i < g.order(); ++i) {
        if (found[idx].contains_index(i)) continue;
        auto gens = found[idx].generator_indices();
        gens.push_back(i);
        Subgroup s = Subgroup::generated_by_indices(g, gens);
        if (seen.insert(s.mask()).second) {
          next.push_back(found.size());
          found.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.member_indices() < b.member_indices();
  });
  return found;
}

struct SweepEntry {
  std::size_t order = 0;
  std::size_t m = 0;
  bool pyramidal = false;
  Sylow2Shape sylow2 = Sylow2Shape::trivial;
};

struct SweepSummary {
  std::size_t subgroups = 0;
  std::size_t even_order = 0;
  std::size_t pyramidal = 0;
  std::size_t order_checks = 0;      // pyramidal with prime m != 7, order tested against X_m
  std::size_t quatpyr_checks = 0;    // cyclic or quaternion Sylow 2-subgroup, even order
  std::size_t dihedral_checks = 0;   // hypotheses of the dihedral proposition met
  std::vector<SweepEntry> entries;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Classifies every subgroup of g and checks, on each:
///   even order => odd involution count;
///   pyramidal with prime m != 7 => order in X_m;
///   even order with cyclic or quaternion Sylow 2-subgroup => pyramidal;
///   the dihedral-structure check never reports a violation.
inline SweepSummary sweep_subgroups(const PermGroup& g) {
  SweepSummary out;
  for (const auto& s : all_subgroups(g)) {
    ++out.subgroups;
    if (s.is_trivial()) {
      out.entries.push_back({1, 0, false, Sylow2Shape::trivial});
      continue;
    }
    const PermGroup h = s.as_group();
    const PyramidalReport r = classify_pyramidal(h);
    out.entries.push_back({r.order, r.m, r.is_pyramidal, r.sylow2});
    const std::string tag = "subgroup of order " + std::to_string(r.order) + " generated by " +
                            std::to_string(s.generator_indices().size()) + " elements";
    if (r.order % 2 == 0) {
      ++out.even_order;
      if (r.m % 2 == 0) out.failures.push_back(tag + ": even involution count " + std::to_string(r.m));
      if (r.sylow2 == Sylow2Shape::cyclic || r.sylow2 == Sylow2Shape::quaternion) {
        ++out.quatpyr_checks;
        if (!r.is_pyramidal) out.failures.push_back(tag + ": Sylow 2-subgroup " + std::string(to_string(r.sylow2)) + " but not pyramidal");
      }
    } else if (r.m != 0) {
      out.failures.push_back(tag + ": odd order with involutions");
    }
    if (r.is_pyramidal) {
      ++out.pyramidal;
      if (r.m > 2 && r.m != 7 && nt::is_prime(r.m)) {
        ++out.order_checks;
        if (!nt::in_x(r.m, r.order).member)
          out.failures.push_back(tag + ": " + std::to_string(r.m) + "-pyramidal but order not in X_m");
      }
    }
    const CheckResult d = check_dihedral_structure(h);
    if (d.verdict != Verdict::hypothesis_not_met) ++out.dihedral_checks;
    if (d.verdict == Verdict::violation) out.failures.push_back(tag + ": " + d.detail);
  }
  return out;
}

}  // namespace pyr
