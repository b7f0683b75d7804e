#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pyramidal/error.hpp"
#include "pyramidal/permutation.hpp"

namespace pyr {

using ElementIndex = std::uint32_t;

/// Finitely generated permutation group with a fully enumerated element table.
///
/// Elements are stored in canonical (lexicographic) order, so every index-based
/// result is deterministic. Copies share the table.
class PermGroup {
 public:
  /// Closure of `generators` under composition. Throws Errc::too_large when the
  /// closure exceeds `cap` elements.
  static PermGroup close(std::size_t degree, std::span<const Permutation> generators,
                         std::size_t cap = element_cap()) {
    if (degree == 0) throw Error(Errc::invalid_argument, "degree must be positive");
    for (const auto& g : generators)
      if (g.degree() != degree) throw Error(Errc::degree_mismatch, "generator degree does not match group degree");

    std::vector<Permutation> kept;
    for (const auto& g : generators)
      if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);

    std::unordered_map<Permutation, ElementIndex, PermutationHash> seen;
    std::vector<Permutation> elements{Permutation::identity(degree)};
    seen.emplace(elements.front(), 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (const auto& g : kept) {
        Permutation next = elements[head] * g;
        if (seen.contains(next)) continue;
        if (elements.size() >= cap)
          throw Error(Errc::too_large, "group too large for desk scale (element cap " + std::to_string(cap) + ")");
        seen.emplace(next, static_cast<ElementIndex>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
    return PermGroup(degree, std::move(kept), std::move(elements));
  }

  static PermGroup close(std::size_t degree, std::initializer_list<Permutation> generators) {
    std::vector<Permutation> gens(generators);
    return close(degree, gens);
  }

  static PermGroup trivial(std::size_t degree) { return close(degree, std::span<const Permutation>{}); }

  std::size_t degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  bool is_trivial() const noexcept { return order() == 1; }
  const std::vector<Permutation>& generators() const noexcept { return data_->generators; }
  const std::vector<Permutation>& elements() const noexcept { return data_->elements; }
  const Permutation& element(ElementIndex i) const { return data_->elements[i]; }
  const Permutation& identity() const { return data_->elements[data_->identity_index]; }
  ElementIndex identity_index() const noexcept { return data_->identity_index; }

  std::optional<ElementIndex> index_of(const Permutation& p) const {
    auto it = data_->index.find(p);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Permutation& p) const { return p.degree() == degree() && data_->index.contains(p); }

  ElementIndex require_index(const Permutation& p) const {
    if (p.degree() != degree()) throw Error(Errc::not_member, "element " + p.to_cycle_string() + " not in group");
    auto idx = index_of(p);
    if (!idx) throw Error(Errc::not_member, "element " + p.to_cycle_string() + " not in group");
    return *idx;
  }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return *index_of(element(a) * element(b)); }

  const std::string& name() const noexcept { return name_; }
  PermGroup named(std::string name) const {
    PermGroup copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
    ElementIndex identity_index = 0;
  };

  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements) {
    auto data = std::make_shared<Data>();
    data->degree = degree;
    data->generators = std::move(generators);
    std::sort(elements.begin(), elements.end());
    data->elements = std::move(elements);
    data->index.reserve(data->elements.size());
    for (std::size_t i = 0; i < data->elements.size(); ++i)
      data->index.emplace(data->elements[i], static_cast<ElementIndex>(i));
    // identity is lexicographically least
    data->identity_index = 0;
    data_ = std::move(data);
  }

  std::shared_ptr<const Data> data_;
  std::string name_;
};

/// A subgroup of a PermGroup, held as a membership mask over the parent's
/// element table together with a small generating set.
class Subgroup {
 public:
  /// Smallest subgroup of `parent` containing `generators`.
  static Subgroup generated(const PermGroup& parent, std::span<const Permutation> generators) {
    std::vector<ElementIndex> idx;
    idx.reserve(generators.size());
    for (const auto& g : generators) idx.push_back(parent.require_index(g));
    return generated_by_indices(parent, idx);
  }

  static Subgroup generated_by_indices(const PermGroup& parent, std::span<const ElementIndex> generators) {
    Subgroup h(parent);
    h.mask_.assign(parent.order(), false);
    h.mask_[parent.identity_index()] = true;
    h.members_.push_back(parent.identity_index());
    for (ElementIndex g : generators) h.extend(g);
    h.finish();
    return h;
  }

  /// Subgroup with the given member set. The caller guarantees closure.
  static Subgroup from_mask(const PermGroup& parent, std::vector<bool> mask) {
    Subgroup h(parent);
    h.mask_.assign(parent.order(), false);
    h.mask_[parent.identity_index()] = true;
    h.members_.push_back(parent.identity_index());
    for (ElementIndex i = 0; i < mask.size(); ++i)
      if (mask[i] && !h.mask_[i]) h.extend(i);
    if (h.mask_ != mask) throw Error(Errc::internal, "member set is not closed under composition");
    h.finish();
    return h;
  }

  static Subgroup whole(const PermGroup& parent) { return from_mask(parent, std::vector<bool>(parent.order(), true)); }
  static Subgroup trivial(const PermGroup& parent) {
    std::vector<bool> mask(parent.order(), false);
    mask[parent.identity_index()] = true;
    return from_mask(parent, std::move(mask));
  }

  const PermGroup& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index_in_parent() const noexcept { return parent_.order() / order(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_.order(); }
  bool contains_index(ElementIndex i) const { return mask_[i]; }
  bool contains(const Permutation& p) const {
    auto idx = parent_.index_of(p);
    return idx && mask_[*idx];
  }
  const std::vector<bool>& mask() const noexcept { return mask_; }
  /// Member indices in canonical order.
  const std::vector<ElementIndex>& member_indices() const noexcept { return members_; }
  const std::vector<ElementIndex>& generator_indices() const noexcept { return generators_; }

  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    out.reserve(members_.size());
    for (ElementIndex i : members_) out.push_back(parent_.element(i));
    return out;
  }
  std::vector<Permutation> generators() const {
    std::vector<Permutation> out;
    for (ElementIndex i : generators_) out.push_back(parent_.element(i));
    return out;
  }

  /// The subgroup as a standalone permutation group on the same points.
  PermGroup as_group() const { return PermGroup::close(parent_.degree(), generators()); }

  bool operator==(const Subgroup& rhs) const { return mask_ == rhs.mask_; }

 private:
  explicit Subgroup(PermGroup parent) : parent_(std::move(parent)) {}

  // Adds g to the generating set and re-closes. Products with the old members
  // are formed on the right; closure under the full generator set is kept.
  void extend(ElementIndex g) {
    if (mask_[g]) return;
    generators_.push_back(g);
    std::vector<ElementIndex> queue = members_;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Permutation& x = parent_.element(queue[head]);
      for (ElementIndex s : generators_) {
        ElementIndex y = *parent_.index_of(x * parent_.element(s));
        if (mask_[y]) continue;
        mask_[y] = true;
        members_.push_back(y);
        queue.push_back(y);
      }
    }
  }

  void finish() { std::sort(members_.begin(), members_.end()); }

  PermGroup parent_;
  std::vector<bool> mask_;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> generators_;
};

// ---------------------------------------------------------------------------
// Element-level queries

/// All x != 1 with x^2 = 1, in canonical order.
inline std::vector<Permutation> involutions(const PermGroup& g) {
  std::vector<Permutation> out;
  for (const auto& x : g.elements())
    if (x.is_involution()) out.push_back(x);
  return out;
}

/// Conjugacy class of x in g, sorted.
inline std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x) {
  g.require_index(x);
  std::unordered_map<Permutation, bool, PermutationHash> seen;
  std::vector<Permutation> orbit{x};
  seen.emplace(x, true);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : g.generators()) {
      Permutation y = orbit[head].conjugate_by(s);
      if (seen.emplace(y, true).second) orbit.push_back(std::move(y));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

/// Partition of `elements` (assumed closed under conjugation) into classes.
inline std::vector<std::vector<Permutation>> conjugacy_classes_of(const PermGroup& g,
                                                                  std::span<const Permutation> elements) {
  std::vector<std::vector<Permutation>> classes;
  std::unordered_map<Permutation, bool, PermutationHash> done;
  for (const auto& x : elements) {
    if (done.contains(x)) continue;
    auto cls = conjugacy_class(g, x);
    for (const auto& y : cls) done.emplace(y, true);
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline Subgroup centralizer(const PermGroup& g, const Permutation& x) {
  g.require_index(x);
  std::vector<bool> mask(g.order(), false);
  for (ElementIndex i = 0; i < g.order(); ++i) mask[i] = g.element(i).commutes_with(x);
  return Subgroup::from_mask(g, std::move(mask));
}

inline Subgroup subgroup_generated(const PermGroup& g, std::span<const Permutation> s) {
  return Subgroup::generated(g, s);
}

inline Subgroup centralizer_of_subgroup(const PermGroup& g, const Subgroup& h) {
  const auto gens = h.generators();
  std::vector<bool> mask(g.order(), false);
  for (ElementIndex i = 0; i < g.order(); ++i) {
    const Permutation& x = g.element(i);
    mask[i] = std::all_of(gens.begin(), gens.end(), [&](const Permutation& y) { return x.commutes_with(y); });
  }
  return Subgroup::from_mask(g, std::move(mask));
}

inline Subgroup center(const PermGroup& g) { return centralizer_of_subgroup(g, Subgroup::whole(g)); }

inline bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (const auto& s : g.generators())
    for (ElementIndex hi : h.generator_indices())
      if (!h.contains(g.element(hi).conjugate_by(s))) return false;
  return true;
}

/// <x^g : x in s, g in G>
inline Subgroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<ElementIndex> gens;
  for (const auto& x : s) gens.push_back(g.require_index(x));
  Subgroup h = Subgroup::generated_by_indices(g, gens);
  for (;;) {
    std::optional<ElementIndex> missing;
    for (ElementIndex hi : h.generator_indices()) {
      for (const auto& t : g.generators()) {
        ElementIndex c = *g.index_of(g.element(hi).conjugate_by(t));
        if (!h.contains_index(c)) {
          missing = c;
          break;
        }
      }
      if (missing) break;
    }
    if (!missing) return h;
    gens = h.generator_indices();
    gens.push_back(*missing);
    h = Subgroup::generated_by_indices(g, gens);
  }
}

inline Subgroup normal_closure(const PermGroup& g, const Permutation& x) {
  return normal_closure(g, std::span<const Permutation>(&x, 1));
}

// ---------------------------------------------------------------------------
// Quotients and series

/// G/N as a permutation group on the right cosets of N, acted on by right
/// multiplication. Cosets are numbered by their least element.
inline PermGroup quotient(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(Errc::not_normal, "quotient requires a normal subgroup");
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<ElementIndex> reps;
  const auto normal_elements = n.elements();
  for (ElementIndex i = 0; i < g.order(); ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (const auto& h : normal_elements) coset_of[*g.index_of(h * g.element(i))] = id;
  }
  const std::size_t cosets = reps.size();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(cosets);
    for (std::size_t c = 0; c < cosets; ++c) images[c] = coset_of[*g.index_of(g.element(reps[c]) * s)];
    gens.emplace_back(std::move(images));
  }
  return PermGroup::close(cosets, gens);
}

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// G' as the normal closure of the commutators of the generators.
inline Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

/// Orders of the derived series G >= G' >= G'' >= ..., ending once it stabilizes.
inline std::vector<std::size_t> derived_series_orders(const PermGroup& g) {
  std::vector<std::size_t> orders{g.order()};
  PermGroup current = g;
  while (!current.is_trivial()) {
    Subgroup d = derived_subgroup(current);
    if (d.order() == current.order()) break;
    orders.push_back(d.order());
    current = d.as_group();
  }
  return orders;
}

inline bool is_solvable(const PermGroup& g) { return derived_series_orders(g).back() == 1; }

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j])) return false;
  return true;
}

namespace detail {

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// Join of the normal closures <x^G> over the classes whose closure order
// satisfies `keep`. Shared by the odd core and the 2-core.
template <class Pred>
Subgroup join_of_normal_closures(const PermGroup& g, Pred keep) {
  std::vector<bool> done(g.order(), false);
  std::vector<Permutation> reps;
  for (ElementIndex i = 0; i < g.order(); ++i) {
    if (done[i]) continue;
    const Permutation& x = g.element(i);
    for (const auto& y : conjugacy_class(g, x)) done[*g.index_of(y)] = true;
    if (x.is_identity()) continue;
    if (!keep(x.order())) continue;
    Subgroup closure = normal_closure(g, x);
    if (keep(closure.order())) reps.push_back(x);
  }
  return normal_closure(g, reps);
}

}  // namespace detail

/// O(G): the largest normal subgroup of odd order.
inline Subgroup odd_core(const PermGroup& g) {
  return detail::join_of_normal_closures(g, [](std::uint64_t n) { return n % 2 == 1; });
}

/// O_2(G): the largest normal 2-subgroup.
inline Subgroup two_core(const PermGroup& g) {
  return detail::join_of_normal_closures(g, [](std::uint64_t n) { return detail::is_power_of_two(n); });
}

// ---------------------------------------------------------------------------
// Sylow 2-subgroups

inline std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

namespace detail {

inline bool normalizes(const PermGroup& g, const Subgroup& p, ElementIndex y) {
  const Permutation& t = g.element(y);
  for (ElementIndex hi : p.generator_indices())
    if (!p.contains(g.element(hi).conjugate_by(t))) return false;
  return true;
}

}  // namespace detail

/// A Sylow 2-subgroup, grown greedily from a 2-element of maximal order by
/// adjoining 2-elements that normalize the current subgroup.
inline Subgroup sylow2(const PermGroup& g) {
  const std::uint64_t target = two_part(g.order());
  std::vector<ElementIndex> two_elements;
  std::optional<ElementIndex> best;
  std::uint64_t best_order = 1;
  for (ElementIndex i = 0; i < g.order(); ++i) {
    const std::uint64_t o = g.element(i).order();
    if (o == 1 || !detail::is_power_of_two(o)) continue;
    two_elements.push_back(i);
    if (o > best_order) {
      best_order = o;
      best = i;
    }
  }
  if (!best) return Subgroup::trivial(g);

  std::vector<ElementIndex> gens{*best};
  Subgroup p = Subgroup::generated_by_indices(g, gens);
  while (p.order() < target) {
    std::optional<ElementIndex> next;
    for (ElementIndex y : two_elements) {
      if (p.contains_index(y) || !detail::normalizes(g, p, y)) continue;
      next = y;
      break;
    }
    if (!next) {
      // Greedy stalled: fall back to any 2-element keeping the join a 2-group.
      for (ElementIndex y : two_elements) {
        if (p.contains_index(y)) continue;
        auto trial = gens;
        trial.push_back(y);
        Subgroup q = Subgroup::generated_by_indices(g, trial);
        if (detail::is_power_of_two(q.order())) {
          next = y;
          break;
        }
      }
    }
    if (!next) throw Error(Errc::internal, "sylow2: unable to extend 2-subgroup");
    gens.push_back(*next);
    p = Subgroup::generated_by_indices(g, gens);
  }
  if (p.order() != target) throw Error(Errc::internal, "sylow2: result does not have odd index");
  return p;
}

enum class Sylow2Shape { trivial, cyclic, klein, dihedral, quaternion, other };

constexpr std::string_view to_string(Sylow2Shape s) {
  switch (s) {
    case Sylow2Shape::trivial: return "trivial";
    case Sylow2Shape::cyclic: return "cyclic";
    case Sylow2Shape::klein: return "klein";
    case Sylow2Shape::dihedral: return "dihedral";
    case Sylow2Shape::quaternion: return "quaternion";
    case Sylow2Shape::other: return "other";
  }
  return "other";
}

/// Shape of a 2-group given as a subgroup.
inline Sylow2Shape two_group_shape(const Subgroup& p) {
  const PermGroup& g = p.parent();
  const std::size_t order = p.order();
  if (order == 1) return Sylow2Shape::trivial;
  std::size_t invol = 0;
  std::vector<ElementIndex> half_order;
  for (ElementIndex i : p.member_indices()) {
    const Permutation& x = g.element(i);
    const std::uint64_t o = x.order();
    if (o == order) return Sylow2Shape::cyclic;
    if (o == 2) ++invol;
    if (2 * o == order) half_order.push_back(i);
  }
  if (invol == 1) return Sylow2Shape::quaternion;
  if (order == 4 && invol == 3) return Sylow2Shape::klein;
  if (invol > 2) {
    for (ElementIndex ci : half_order) {
      const Permutation& c = g.element(ci);
      const Permutation c_inv = c.inverse();
      std::vector<ElementIndex> cg{ci};
      Subgroup cyc = Subgroup::generated_by_indices(g, cg);
      for (ElementIndex t : p.member_indices()) {
        const Permutation& y = g.element(t);
        if (!y.is_involution() || cyc.contains_index(t)) continue;
        if (c.conjugate_by(y) == c_inv) return Sylow2Shape::dihedral;
      }
    }
  }
  return Sylow2Shape::other;
}

inline Sylow2Shape sylow2_shape(const PermGroup& g) { return two_group_shape(sylow2(g)); }

}  // namespace pyr
