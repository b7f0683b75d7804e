#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pyramidal/classify.hpp"
#include "pyramidal/error.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr {

using Block = std::array<Point, 3>;

/// Point set {0..v-1} with 3-element blocks. Blocks are kept sorted internally.
struct TripleSystem {
  std::size_t v = 0;
  std::vector<Block> blocks;
};

/// Partition of the block indices into parallel classes.
struct Resolution {
  std::vector<std::vector<std::size_t>> classes;
};

/// A group acting on a design's points, with its fixed and moved points.
struct DesignAction {
  PermGroup group;
  std::vector<Point> fixed_points;
  std::vector<Point> moved_points;
};

enum class DesignKind { sts, kts, sts_3pyr };

inline std::string block_string(const Block& b) {
  return "{" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) + "}";
}

inline Block sorted_block(Block b) {
  std::sort(b.begin(), b.end());
  return b;
}

namespace detail {

inline void require_well_formed(const TripleSystem& t) {
  for (const auto& b : t.blocks) {
    for (Point p : b)
      if (p >= t.v) throw Error(Errc::malformed_design, "block " + block_string(b) + " has a point out of range");
    if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2])
      throw Error(Errc::malformed_design, "block " + block_string(b) + " repeats a point");
  }
}

// Number of blocks through each unordered pair.
inline std::vector<std::vector<unsigned>> pair_counts(const TripleSystem& t) {
  std::vector<std::vector<unsigned>> count(t.v, std::vector<unsigned>(t.v, 0));
  for (const auto& b : t.blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) ++count[b[i]][b[j]];
  return count;
}

constexpr Point kNoPoint = UINT32_MAX;

// third[a][b]: the third point of the unique block through a and b.
inline std::vector<std::vector<Point>> third_point_table(const TripleSystem& t) {
  std::vector<std::vector<Point>> third(t.v, std::vector<Point>(t.v, kNoPoint));
  for (const auto& b : t.blocks) {
    third[b[0]][b[1]] = third[b[1]][b[0]] = b[2];
    third[b[0]][b[2]] = third[b[2]][b[0]] = b[1];
    third[b[1]][b[2]] = third[b[2]][b[1]] = b[0];
  }
  return third;
}

inline std::map<Block, std::size_t> block_index(const TripleSystem& t) {
  std::map<Block, std::size_t> index;
  for (std::size_t i = 0; i < t.blocks.size(); ++i) index.emplace(sorted_block(t.blocks[i]), i);
  return index;
}

inline Block image_of(const Block& b, const Permutation& g) { return sorted_block({g[b[0]], g[b[1]], g[b[2]]}); }

}  // namespace detail

/// Every unordered pair of points lies in exactly one block.
inline CheckResult validate_sts(const TripleSystem& t) {
  detail::require_well_formed(t);
  if (t.v < 3) return CheckResult::fail("fewer than 3 points");
  const auto count = detail::pair_counts(t);
  for (Point a = 0; a < t.v; ++a)
    for (Point b = a + 1; b < t.v; ++b)
      if (count[a][b] != 1)
        return CheckResult::fail("pair {" + std::to_string(a) + "," + std::to_string(b) + "} lies in " +
                                 std::to_string(count[a][b]) + " blocks");
  if (t.blocks.size() != t.v * (t.v - 1) / 6) return CheckResult::fail("block count is not v(v-1)/6");
  return CheckResult::ok("STS(" + std::to_string(t.v) + ")");
}

/// STS check plus: every class partitions the points, and the classes
/// partition the blocks.
inline CheckResult validate_kts(const TripleSystem& t, const Resolution& r) {
  if (auto sts = validate_sts(t); !sts.verified()) return sts;
  if (t.v % 3 != 0) return CheckResult::fail("v is not divisible by 3");
  if (r.classes.size() != (t.v - 1) / 2) return CheckResult::fail("resolution needs (v-1)/2 classes");
  std::vector<unsigned> block_used(t.blocks.size(), 0);
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const auto& cls = r.classes[c];
    if (cls.size() != t.v / 3) return CheckResult::fail("class " + std::to_string(c) + " does not have v/3 blocks");
    std::vector<bool> covered(t.v, false);
    for (std::size_t bi : cls) {
      if (bi >= t.blocks.size()) return CheckResult::fail("class " + std::to_string(c) + " references a missing block");
      ++block_used[bi];
      for (Point p : t.blocks[bi]) {
        if (covered[p]) return CheckResult::fail("class " + std::to_string(c) + " covers point " + std::to_string(p) + " twice");
        covered[p] = true;
      }
    }
  }
  for (std::size_t i = 0; i < block_used.size(); ++i)
    if (block_used[i] != 1) return CheckResult::fail("block " + block_string(t.blocks[i]) + " is not in exactly one class");
  return CheckResult::ok("KTS(" + std::to_string(t.v) + ")");
}

inline bool admissible(std::size_t v, DesignKind kind) {
  if (v < 3) throw Error(Errc::invalid_argument, "admissibility requires v >= 3");
  switch (kind) {
    case DesignKind::sts: return v % 6 == 1 || v % 6 == 3;
    case DesignKind::kts: return v % 6 == 3;
    case DesignKind::sts_3pyr: {
      const std::size_t r24 = v % 24, r48 = v % 48;
      return r24 == 7 || r24 == 9 || r24 == 15 || r48 == 3 || r48 == 19;
    }
  }
  return false;
}

/// Sorts blocks and renumbers the resolution to match; classes are sorted and
/// ordered by their first block.
inline void canonicalize(TripleSystem& t, std::optional<Resolution>& r) {
  for (auto& b : t.blocks) b = sorted_block(b);
  std::vector<std::size_t> order(t.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t.blocks[a] < t.blocks[b]; });
  std::vector<std::size_t> new_index(order.size());
  std::vector<Block> blocks(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    blocks[i] = t.blocks[order[i]];
  }
  t.blocks = std::move(blocks);
  if (!r) return;
  for (auto& cls : r->classes) {
    for (auto& bi : cls) bi = new_index.at(bi);
    std::sort(cls.begin(), cls.end());
  }
  std::sort(r->classes.begin(), r->classes.end());
}

/// The affine plane AG(2,3): point x + 3y for (x, y) in F_3^2, blocks the 12
/// lines, classes the 4 directions.
inline std::pair<TripleSystem, Resolution> build_ag23() {
  TripleSystem t{9, {}};
  std::optional<Resolution> r = Resolution{};
  const int directions[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  for (const auto& d : directions) {
    std::set<Block> lines;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        Block b{};
        for (int k = 0; k < 3; ++k)
          b[k] = static_cast<Point>((x + k * d[0]) % 3 + 3 * ((y + k * d[1]) % 3));
        lines.insert(sorted_block(b));
      }
    std::vector<std::size_t> cls;
    for (const auto& b : lines) {
      cls.push_back(t.blocks.size());
      t.blocks.push_back(b);
    }
    r->classes.push_back(std::move(cls));
  }
  canonicalize(t, r);
  return {std::move(t), std::move(*r)};
}

/// The Fano plane from the difference set {0, 1, 3} mod 7.
inline TripleSystem build_fano() {
  TripleSystem t{7, {}};
  for (Point i = 0; i < 7; ++i) t.blocks.push_back(sorted_block({i, (i + 1) % 7, (i + 3) % 7}));
  std::sort(t.blocks.begin(), t.blocks.end());
  return t;
}

namespace detail {

class KtsSearch {
 public:
  explicit KtsSearch(std::size_t v)
      : v_(v), classes_((v - 1) / 2), covered_(v, std::vector<bool>(v, false)), in_class_(v, false) {}

  bool run() {
    current_.emplace_back();
    return fill(0, 0, 0);
  }
  const std::vector<std::vector<Block>>& classes() const { return found_; }

 private:
  // Fill class `cls`, which already holds `placed` blocks. The block through
  // point 0 opens each class, and its partner increases from class to class.
  bool fill(std::size_t cls, std::size_t placed, Point min_partner) {
    if (placed == v_ / 3) {
      if (cls + 1 == classes_) {
        found_ = current_;
        return true;
      }
      std::fill(in_class_.begin(), in_class_.end(), false);
      const Point next_min = current_.back().front()[1] + 1;
      current_.emplace_back();
      if (fill(cls + 1, 0, next_min)) return true;
      current_.pop_back();
      // restore membership of the finished class
      for (const auto& b : current_.back())
        for (Point p : b) in_class_[p] = true;
      return false;
    }
    Point x = 0;
    while (in_class_[x]) ++x;
    const Point y_start = placed == 0 ? std::max<Point>(x + 1, min_partner) : x + 1;
    for (Point y = y_start; y < v_; ++y) {
      if (in_class_[y] || covered_[x][y]) continue;
      for (Point z = y + 1; z < v_; ++z) {
        if (in_class_[z] || covered_[x][z] || covered_[y][z]) continue;
        place({x, y, z}, true);
        current_.back().push_back({x, y, z});
        if (fill(cls, placed + 1, min_partner)) return true;
        current_.back().pop_back();
        place({x, y, z}, false);
      }
    }
    return false;
  }

  void place(const Block& b, bool on) {
    for (int i = 0; i < 3; ++i) {
      in_class_[b[i]] = on;
      for (int j = 0; j < 3; ++j)
        if (i != j) covered_[b[i]][b[j]] = on;
    }
  }

  std::size_t v_;
  std::size_t classes_;
  std::vector<std::vector<bool>> covered_;
  std::vector<bool> in_class_;
  std::vector<std::vector<Block>> current_;
  std::vector<std::vector<Block>> found_;
};

}  // namespace detail

/// Depth-first search for a KTS(v), v <= 15, returning the first solution in
/// search order (canonicalized).
inline std::optional<std::pair<TripleSystem, Resolution>> search_kts(std::size_t v) {
  if (v < 3 || !admissible(v, DesignKind::kts)) throw Error(Errc::invalid_argument, "KTS(v) requires v = 3 mod 6");
  if (v > 15) throw Error(Errc::too_large, "search_kts supports v <= 15");
  detail::KtsSearch search(v);
  if (!search.run()) return std::nullopt;
  TripleSystem t{v, {}};
  std::optional<Resolution> r = Resolution{};
  for (const auto& cls : search.classes()) {
    std::vector<std::size_t> idx;
    for (const auto& b : cls) {
      idx.push_back(t.blocks.size());
      t.blocks.push_back(b);
    }
    r->classes.push_back(std::move(idx));
  }
  canonicalize(t, r);
  return std::pair{std::move(t), std::move(*r)};
}

/// Checks that every generator of g preserves the blocks (and the classes,
/// when a resolution is given). Throws Errc::action_violation naming the
/// offending generator and block.
inline DesignAction check_action(const TripleSystem& t, const std::optional<Resolution>& r, const PermGroup& g) {
  detail::require_well_formed(t);
  if (g.degree() != t.v) throw Error(Errc::degree_mismatch, "group degree differs from the number of points");
  const auto index = detail::block_index(t);
  std::vector<std::size_t> class_of(t.blocks.size(), SIZE_MAX);
  if (r)
    for (std::size_t c = 0; c < r->classes.size(); ++c)
      for (std::size_t bi : r->classes[c]) class_of.at(bi) = c;

  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const Permutation& s = g.generators()[k];
    std::vector<std::size_t> block_image(t.blocks.size());
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
      const Block img = detail::image_of(t.blocks[bi], s);
      auto it = index.find(img);
      if (it == index.end())
        throw Error(Errc::action_violation, "generator " + std::to_string(k) + " " + s.to_cycle_string() + " maps block " +
                                                block_string(t.blocks[bi]) + " to non-block " + block_string(img));
      block_image[bi] = it->second;
    }
    if (!r) continue;
    for (std::size_t c = 0; c < r->classes.size(); ++c) {
      const std::size_t target = class_of[block_image[r->classes[c].front()]];
      for (std::size_t bi : r->classes[c])
        if (class_of[block_image[bi]] != target)
          throw Error(Errc::action_violation, "generator " + std::to_string(k) + " " + s.to_cycle_string() +
                                                  " splits parallel class " + std::to_string(c) + " at block " +
                                                  block_string(t.blocks[bi]));
    }
  }
  DesignAction action{g, {}, {}};
  for (Point p = 0; p < t.v; ++p) {
    const bool fixed = std::all_of(g.generators().begin(), g.generators().end(),
                                   [&](const Permutation& s) { return s[p] == p; });
    (fixed ? action.fixed_points : action.moved_points).push_back(p);
  }
  return action;
}

/// g fixes exactly m points and acts regularly on the rest.
inline CheckResult check_pyramidal_action(const TripleSystem& t, const std::optional<Resolution>& r, const PermGroup& g,
                                          std::size_t m) {
  if (m == 0) return CheckResult::fail("m must be at least 1");
  if (g.order() + m != t.v)
    return CheckResult::fail("|G| + m = " + std::to_string(g.order() + m) + " != v = " + std::to_string(t.v));
  DesignAction action{g, {}, {}};
  try {
    action = check_action(t, r, g);
  } catch (const Error& e) {
    if (e.code() != Errc::action_violation) throw;
    return CheckResult::fail(e.what());
  }
  if (action.fixed_points.size() != m)
    return CheckResult::fail("G fixes " + std::to_string(action.fixed_points.size()) + " points, expected " +
                             std::to_string(m));
  std::vector<bool> seen(t.v, false);
  std::vector<Point> orbit{action.moved_points.front()};
  seen[orbit.front()] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : g.generators())
      if (!seen[s[orbit[i]]]) {
        seen[s[orbit[i]]] = true;
        orbit.push_back(s[orbit[i]]);
      }
  // transitive with |G| equal to the orbit length forces trivial stabilizers
  if (orbit.size() != action.moved_points.size()) return CheckResult::fail("G is not transitive on the moved points");
  return CheckResult::ok("regular on " + std::to_string(orbit.size()) + " points, fixing " + std::to_string(m));
}

struct Prop1Result {
  CheckResult result;
  std::vector<Permutation> involutions;  // x_i, indexed like the fixed points
  std::vector<Permutation> conjugators;  // g_i with g_i x_1 g_i^-1 = x_i
};

/// Replays the block argument showing that a group realizing an m-pyramidal
/// KTS has exactly m involutions, all conjugate.
///
/// Moved points are labelled by group elements through a base point b (the
/// least moved point): the element e labels b^e. For each fixed point f_i, the
/// block {b, x_i, f_i} yields the involution x_i. The parallel class Q of the
/// first such block then supplies, for each i, a block {f_i, g_i, h_i} of Q
/// whose labels satisfy g_i x_1 g_i^-1 = x_i.
inline Prop1Result verify_prop1(const TripleSystem& t, const Resolution& r, const PermGroup& g, std::size_t m) {
  Prop1Result out;
  const std::optional<Resolution> ropt = r;
  if (auto pre = check_pyramidal_action(t, ropt, g, m); !pre.verified()) {
    out.result = CheckResult::not_met("not a pyramidal action: " + pre.detail);
    return out;
  }
  if (g.is_trivial()) {
    out.result = CheckResult::not_met("G is trivial");
    return out;
  }
  const auto counts = detail::pair_counts(t);
  const auto third = detail::third_point_table(t);
  auto unique_third = [&](Point a, Point b) -> std::optional<Point> {
    if (counts[a][b] != 1) return std::nullopt;
    return third[a][b];
  };

  std::vector<Point> fixed, moved;
  for (Point p = 0; p < t.v; ++p) (g.identity()[p] == p && std::all_of(g.generators().begin(), g.generators().end(), [&](const Permutation& s) { return s[p] == p; }) ? fixed : moved).push_back(p);
  const Point base = moved.front();
  std::vector<std::optional<ElementIndex>> label(t.v);
  for (ElementIndex i = 0; i < g.order(); ++i) label[g.element(i)[base]] = i;

  std::vector<Point> partner(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = unique_third(base, fixed[i]);
    if (!c) {
      out.result = CheckResult::fail("pair {" + std::to_string(base) + "," + std::to_string(fixed[i]) + "} lies in " +
                                     std::to_string(counts[base][fixed[i]]) + " blocks");
      return out;
    }
    if (!label[*c]) {
      out.result = CheckResult::fail("block {" + std::to_string(base) + "," + std::to_string(*c) + "," +
                                     std::to_string(fixed[i]) + "} contains two fixed points");
      return out;
    }
    partner[i] = *c;
    const Permutation& x = g.element(*label[*c]);
    if (!x.is_involution()) {
      out.result = CheckResult::fail("element " + x.to_cycle_string() + " from fixed point " + std::to_string(fixed[i]) +
                                     " is not an involution");
      return out;
    }
    out.involutions.push_back(x);
  }

  auto extracted = out.involutions;
  std::sort(extracted.begin(), extracted.end());
  if (std::adjacent_find(extracted.begin(), extracted.end()) != extracted.end() || extracted != involutions(g)) {
    out.result = CheckResult::fail("extracted elements are not exactly the involutions of G");
    return out;
  }

  // class Q containing {base, x_1, f_1}
  const auto index = detail::block_index(t);
  const std::size_t b1 = index.at(sorted_block({base, partner[0], fixed[0]}));
  const std::vector<std::size_t>* q = nullptr;
  for (const auto& cls : r.classes)
    if (std::find(cls.begin(), cls.end(), b1) != cls.end()) q = &cls;
  if (q == nullptr) {
    out.result = CheckResult::fail("block " + block_string(t.blocks[b1]) + " is in no parallel class");
    return out;
  }
  const Permutation& x1 = out.involutions.front();
  for (std::size_t i = 0; i < m; ++i) {
    const Block* bi = nullptr;
    for (std::size_t k : *q)
      if (std::find(t.blocks[k].begin(), t.blocks[k].end(), fixed[i]) != t.blocks[k].end()) bi = &t.blocks[k];
    if (bi == nullptr) {
      out.result = CheckResult::fail("class Q misses fixed point " + std::to_string(fixed[i]));
      return out;
    }
    std::vector<Point> others;
    for (Point p : *bi)
      if (p != fixed[i]) others.push_back(p);
    if (!label[others[0]] || !label[others[1]]) {
      out.result = CheckResult::fail("block " + block_string(*bi) + " of Q consists of fixed points");
      return out;
    }
    const Permutation& gi = g.element(*label[others[0]]);
    const Permutation conj = gi * x1 * gi.inverse();
    if (conj != out.involutions[i]) {
      out.result = CheckResult::fail("g_i x_1 g_i^-1 != x_i for fixed point " + std::to_string(fixed[i]));
      return out;
    }
    out.conjugators.push_back(gi);
  }
  if (!is_m_pyramidal(g, m)) {
    out.result = CheckResult::fail("G is not " + std::to_string(m) + "-pyramidal");
    return out;
  }
  out.result = CheckResult::ok(std::to_string(m) + " involutions, pairwise conjugate");
  return out;
}

namespace detail {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const TripleSystem& t, const std::optional<Resolution>& r)
      : t_(t), r_(r), third_(third_point_table(t)), index_(block_index(t)) {
    if (r_) {
      class_of_.assign(t.blocks.size(), 0);
      for (std::size_t c = 0; c < r_->classes.size(); ++c)
        for (std::size_t bi : r_->classes[c]) class_of_[bi] = c;
    }
  }

  std::vector<Permutation> run() {
    std::vector<Point> img(t_.v, kNoPoint);
    std::vector<bool> used(t_.v, false);
    extend(img, used);
    return found_;
  }

 private:
  // Pushes the images of third points implied by assigned pairs.
  bool propagate(std::vector<Point>& img, std::vector<bool>& used) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Point a = 0; a < t_.v; ++a) {
        if (img[a] == kNoPoint) continue;
        for (Point b = a + 1; b < t_.v; ++b) {
          if (img[b] == kNoPoint) continue;
          const Point c = third_[a][b];
          const Point target = third_[img[a]][img[b]];
          if (img[c] == kNoPoint) {
            if (used[target]) return false;
            img[c] = target;
            used[target] = true;
            changed = true;
          } else if (img[c] != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void extend(std::vector<Point> img, std::vector<bool> used) {
    if (!propagate(img, used)) return;
    Point next = 0;
    while (next < t_.v && img[next] != kNoPoint) ++next;
    if (next == t_.v) {
      Permutation p(img);
      if (preserves_classes(p)) found_.push_back(std::move(p));
      return;
    }
    for (Point target = 0; target < t_.v; ++target) {
      if (used[target]) continue;
      auto img2 = img;
      auto used2 = used;
      img2[next] = target;
      used2[target] = true;
      extend(std::move(img2), std::move(used2));
    }
  }

  bool preserves_classes(const Permutation& p) const {
    if (!r_) return true;
    for (const auto& cls : r_->classes) {
      const std::size_t target = class_of_[index_.at(image_of(t_.blocks[cls.front()], p))];
      for (std::size_t bi : cls)
        if (class_of_[index_.at(image_of(t_.blocks[bi], p))] != target) return false;
    }
    return true;
  }

  const TripleSystem& t_;
  const std::optional<Resolution>& r_;
  std::vector<std::vector<Point>> third_;
  std::map<Block, std::size_t> index_;
  std::vector<std::size_t> class_of_;
  std::vector<Permutation> found_;
};

}  // namespace detail

/// Full automorphism group by point-image backtracking, pruned by forcing the
/// third point of every block through two assigned points.
inline PermGroup automorphism_group(const TripleSystem& t, const std::optional<Resolution>& r = std::nullopt) {
  if (t.v > 15) throw Error(Errc::too_large, "automorphism_group supports v <= 15");
  if (auto ok = validate_sts(t); !ok.verified()) throw Error(Errc::invalid_argument, "not a Steiner triple system: " + ok.detail);
  if (r)
    if (auto ok = validate_kts(t, *r); !ok.verified()) throw Error(Errc::invalid_argument, "not a resolution: " + ok.detail);
  detail::AutomorphismSearch search(t, r);
  const auto all = search.run();
  // Greedy generating set, in canonical order.
  std::vector<Permutation> gens;
  PermGroup g = PermGroup::trivial(t.v);
  for (const auto& p : all) {
    if (g.contains(p)) continue;
    gens.push_back(p);
    g = PermGroup::close(t.v, gens);
  }
  if (g.order() != all.size()) throw Error(Errc::internal, "automorphism search is not closed");
  return g;
}

/// Searches Aut(T) for a subgroup fixing exactly m points and regular on the
/// other v - m points. Every non-identity element of such a subgroup fixes
/// exactly the same m points, so candidates are bucketed by fixed set; within
/// a bucket, cyclic subgroups are extended one element at a time until no new
/// admissible subgroups appear. Returns the canonically least hit.
inline std::optional<PermGroup> find_pyramidal_action(const TripleSystem& t, const std::optional<Resolution>& r,
                                                      std::size_t m) {
  if (t.v > 15) throw Error(Errc::too_large, "find_pyramidal_action supports v <= 15");
  if (m == 0 || m >= t.v) return std::nullopt;
  const std::size_t target = t.v - m;
  const PermGroup aut = automorphism_group(t, r);
  if (aut.order() % target != 0) return std::nullopt;

  std::map<std::vector<Point>, std::vector<ElementIndex>> buckets;
  for (ElementIndex i = 0; i < aut.order(); ++i) {
    const Permutation& x = aut.element(i);
    if (x.is_identity() || target % x.order() != 0) continue;
    auto fixed = x.fixed_points();
    if (fixed.size() == m) buckets[fixed].push_back(i);
  }

  for (const auto& [fixed, members] : buckets) {
    std::vector<bool> allowed(aut.order(), false);
    allowed[aut.identity_index()] = true;
    for (ElementIndex i : members) allowed[i] = true;
    auto admissible_subgroup = [&](const Subgroup& s) {
      if (target % s.order() != 0) return false;
      return std::all_of(s.member_indices().begin(), s.member_indices().end(),
                         [&](ElementIndex i) { return allowed[i]; });
    };

    std::set<std::vector<bool>> seen;
    std::vector<Subgroup> frontier;
    for (ElementIndex i : members) {
      std::vector<ElementIndex> gens{i};
      Subgroup s = Subgroup::generated_by_indices(aut, gens);
      if (admissible_subgroup(s) && seen.insert(s.mask()).second) frontier.push_back(std::move(s));
    }
    std::optional<std::vector<ElementIndex>> best;
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const auto& s : frontier) {
        if (s.order() == target) {
          if (!best || s.member_indices() < *best) best = s.member_indices();
          continue;
        }
        for (ElementIndex i : members) {
          if (s.contains_index(i)) continue;
          auto gens = s.generator_indices();
          gens.push_back(i);
          Subgroup bigger = Subgroup::generated_by_indices(aut, gens);
          if (admissible_subgroup(bigger) && seen.insert(bigger.mask()).second) next.push_back(std::move(bigger));
        }
      }
      frontier = std::move(next);
    }
    if (!best) continue;
    std::vector<Permutation> gens;
    for (ElementIndex i : *best) gens.push_back(aut.element(i));
    PermGroup g = PermGroup::close(t.v, gens);
    if (!check_pyramidal_action(t, r, g, m).verified())
      throw Error(Errc::internal, "find_pyramidal_action found a subgroup failing the action check");
    return g;
  }
  return std::nullopt;
}

}  // namespace pyr
